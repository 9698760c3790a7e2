#pragma once

#include <cmath>

#include "logsine/real_approx.hpp"

namespace logsine::detail {

// Neumaier summation; also tracks sum |x| for rounding allowances.
class CompensatedSum {
public:
    void add(real x) {
        const real t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
        magnitude_ += std::fabs(x);
    }

    real value() const { return sum_ + compensation_; }
    real magnitude() const { return magnitude_; }

private:
    real sum_ = 0;
    real compensation_ = 0;
    real magnitude_ = 0;
};

} // namespace logsine::detail
