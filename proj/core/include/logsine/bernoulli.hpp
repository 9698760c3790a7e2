#pragma once

#include <cstddef>
#include <vector>

#include "logsine/rational.hpp"

namespace logsine {

/// C(n, k), with the total-function convention C(n, k) = 0 for k > n.
BigInt binomial(unsigned n, unsigned k);

/// Bernoulli numbers B_0 .. B_max_index with B_1 = -1/2.
///
/// Built by solving the binomial recurrence sum_{k<n} C(n,k) B_k = 0 at n = m + 1
/// for the single unknown B_m. The values are immutable once constructed.
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t max_index);

    std::size_t max_index() const { return values_.size() - 1; }
    const std::vector<ExactRational>& values() const { return values_; }

    /// Throws std::out_of_range beyond max_index().
    const ExactRational& at(std::size_t index) const;
    const ExactRational& operator[](std::size_t index) const { return values_[index]; }

    friend bool operator==(const BernoulliTable&, const BernoulliTable&) = default;

private:
    std::vector<ExactRational> values_;
};

BernoulliTable bernoulli_table(std::size_t max_index);

/// True iff sum_{k=0}^{n-1} C(n,k) B_k == 0 exactly.
/// Requires n >= 2 and table.max_index() >= n - 1 (std::invalid_argument otherwise).
bool verify_recurrence(unsigned n, const BernoulliTable& table);

/// C(n,2k) / ((k+1)(2k+1)) == C(n+2,2k+2) * 2 / ((n+1)(n+2)), checked exactly.
/// Requires n >= 1 and 2k <= n.
bool verify_binomial_identity(unsigned n, unsigned k);

} // namespace logsine
