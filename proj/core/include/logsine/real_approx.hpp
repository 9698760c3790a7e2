#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace logsine {

/// Working precision for every numeric path. On x86-64 Linux this is the 80-bit
/// extended format (64-bit significand, epsilon ~1.08e-19).
using real = long double;

inline constexpr real pi = std::numbers::pi_v<real>;
inline constexpr real ln2 = std::numbers::ln2_v<real>;
inline constexpr real epsilon = std::numeric_limits<real>::epsilon();

/// A value with a claimed absolute error bound: the true quantity lies in
/// [value - abs_error, value + abs_error].
struct RealApprox {
    real value = 0;
    real abs_error = 0;

    real lower() const { return value - abs_error; }
    real upper() const { return value + abs_error; }
    bool contains(real x) const { return std::fabs(x - value) <= abs_error; }

    friend RealApprox operator+(const RealApprox& a, const RealApprox& b) {
        return {a.value + b.value, a.abs_error + b.abs_error};
    }
    friend RealApprox operator-(const RealApprox& a, const RealApprox& b) {
        return {a.value - b.value, a.abs_error + b.abs_error};
    }
    RealApprox operator-() const { return {-value, abs_error}; }
};

/// Two RealApprox values agree iff their certified intervals overlap.
inline bool agree(const RealApprox& a, const RealApprox& b) {
    return std::fabs(a.value - b.value) <= a.abs_error + b.abs_error;
}

struct ComplexApprox {
    RealApprox re;
    RealApprox im;

    real modulus() const { return std::hypot(re.value, im.value); }
    // sqrt(e_re^2 + e_im^2) <= e_re + e_im; the looser sum is what gets reported
    real modulus_bound() const { return re.abs_error + im.abs_error; }

    friend ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
        return {a.re + b.re, a.im + b.im};
    }
    ComplexApprox operator-() const { return {-re, -im}; }
};

} // namespace logsine
