#include "logsine/bernoulli.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace logsine {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    // result stays C(n - k + i, i) after step i, so each division is exact
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    }
    return result;
}

BernoulliTable::BernoulliTable(std::size_t max_index) {
    values_.reserve(max_index + 1);
    values_.emplace_back(1);
    for (std::size_t m = 1; m <= max_index; ++m) {
        const auto row = static_cast<unsigned>(m + 1);
        ExactRational sum;
        for (std::size_t k = 0; k < m; ++k) {
            if (values_[k].is_zero()) {
                continue;
            }
            sum += ExactRational(binomial(row, static_cast<unsigned>(k))) * values_[k];
        }
        values_.push_back(-sum / ExactRational(static_cast<long>(row)));
    }
}

const ExactRational& BernoulliTable::at(std::size_t index) const {
    if (index > max_index()) {
        throw std::out_of_range("BernoulliTable: index " + std::to_string(index) +
                                " beyond max_index " + std::to_string(max_index()));
    }
    return values_[index];
}

BernoulliTable bernoulli_table(std::size_t max_index) { return BernoulliTable(max_index); }

bool verify_recurrence(unsigned n, const BernoulliTable& table) {
    if (n < 2) {
        throw std::invalid_argument("verify_recurrence: requires n >= 2");
    }
    if (table.max_index() + 1 < n) {
        throw std::invalid_argument("verify_recurrence: table too short for n = " + std::to_string(n));
    }
    ExactRational sum;
    for (unsigned k = 0; k < n; ++k) {
        sum += ExactRational(binomial(n, k)) * table[k];
    }
    return sum.is_zero();
}

bool verify_binomial_identity(unsigned n, unsigned k) {
    if (n < 1) {
        throw std::invalid_argument("verify_binomial_identity: requires n >= 1");
    }
    if (2 * k > n) {
        throw std::invalid_argument("verify_binomial_identity: requires 2k <= n");
    }
    const ExactRational lhs(binomial(n, 2 * k), BigInt(k + 1) * (2 * k + 1));
    const ExactRational rhs(binomial(n + 2, 2 * k + 2) * 2, BigInt(n + 1) * (n + 2));
    return lhs == rhs;
}

} // namespace logsine
