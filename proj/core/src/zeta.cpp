#include "logsine/zeta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "compensated_sum.hpp"
#include "logsine/errors.hpp"

namespace logsine {

namespace {

constexpr unsigned max_correction_terms = 60;

// B_2j / (2j)! for j = 1..max_correction_terms.
const std::vector<real>& euler_maclaurin_coefficients() {
    static const std::vector<real> coefficients = [] {
        const BernoulliTable table(2 * max_correction_terms);
        std::vector<real> out(max_correction_terms + 1, 0.0L);
        for (unsigned j = 1; j <= max_correction_terms; ++j) {
            out[j] = (table[2 * j] / ExactRational(factorial(2 * j))).to_long_double();
        }
        return out;
    }();
    return coefficients;
}

// log of the remainder bound after `terms` correction terms at head length N:
// 4 |(s)_{2M}| / (2 pi)^{2M} * N^{1 - s - 2M} / (s + 2M - 1).
real log_remainder_bound(real s, real head, unsigned terms) {
    real log_rising = 0;
    for (unsigned i = 0; i < 2 * terms; ++i) {
        log_rising += std::log(s + i);
    }
    const real m2 = 2.0L * terms;
    return std::log(4.0L) + log_rising - m2 * std::log(2.0L * pi) + (1.0L - s - m2) * std::log(head) -
           std::log(s + m2 - 1.0L);
}

} // namespace

long double ZetaEvenValue::to_long_double() const {
    return coefficient.to_long_double() * std::pow(pi, static_cast<real>(pi_power));
}

ZetaEvenValue zeta_even_exact(unsigned k, const BernoulliTable& table) {
    if (k < 1) {
        throw std::invalid_argument("zeta_even_exact: requires k >= 1");
    }
    if (table.max_index() < 2 * k) {
        throw std::invalid_argument("zeta_even_exact: table must reach index " + std::to_string(2 * k));
    }
    ExactRational coefficient = pow(ExactRational(2), 2 * k) * table[2 * k] /
                                ExactRational(BigInt(BigInt(2) * factorial(2 * k)), BigInt(1));
    if (k % 2 == 0) {
        coefficient = -coefficient;
    }
    return {k, 2 * k, coefficient};
}

real zeta_series_partial(real s, unsigned long terms) {
    if (!(s > 1)) {
        throw std::invalid_argument("zeta_series_partial: requires s > 1");
    }
    if (terms == 0) {
        throw std::invalid_argument("zeta_series_partial: requires terms >= 1");
    }
    // forward order keeps the result nondecreasing in `terms`
    real sum = 0;
    for (unsigned long l = 1; l <= terms; ++l) {
        sum += std::pow(static_cast<real>(l), -s);
    }
    return sum;
}

RealApprox zeta_numeric(unsigned s, real target_abs_error) {
    if (s < 2) {
        throw std::invalid_argument("zeta_numeric: requires integer s >= 2");
    }
    if (!(target_abs_error > 0) || !std::isfinite(target_abs_error)) {
        throw std::invalid_argument("zeta_numeric: target_abs_error must be positive and finite");
    }

    const real sr = s;
    const real log_budget = std::log(target_abs_error / 4);
    unsigned head = 16;
    unsigned terms = 0;
    while (head <= 4096) {
        for (unsigned m = 1; m <= max_correction_terms && terms == 0; ++m) {
            if (log_remainder_bound(sr, head, m) <= log_budget) {
                terms = m;
            }
        }
        if (terms != 0) {
            break;
        }
        head *= 2;
    }
    if (terms == 0) {
        throw certification_error("zeta_numeric: no Euler-Maclaurin truncation meets target " +
                                  std::to_string(static_cast<double>(target_abs_error)));
    }
    const real remainder = std::exp(log_remainder_bound(sr, head, terms));

    // Each entry carries a relative rounding allowance in units of epsilon.
    detail::CompensatedSum sum;
    real rounding = 0;
    const auto add = [&](real term, real ulps) {
        sum.add(term);
        rounding += ulps * epsilon * std::fabs(term);
    };

    for (unsigned l = head - 1; l >= 1; --l) {
        add(std::pow(static_cast<real>(l), -sr), 4);
    }
    const real n = head;
    const real n_pow = std::pow(n, -sr);
    add(n * n_pow / (sr - 1), 6);
    add(n_pow / 2, 4);

    const auto& coefficients = euler_maclaurin_coefficients();
    real rising = sr;          // (s)_{2j-1}
    real n_power = n_pow / n;  // N^{-s-2j+1}
    for (unsigned j = 1; j <= terms; ++j) {
        if (j > 1) {
            rising *= (sr + 2 * j - 3) * (sr + 2 * j - 2);
            n_power /= n * n;
        }
        add(coefficients[j] * rising * n_power, 8 + 4.0L * j);
    }
    rounding += 2 * epsilon * std::fabs(sum.value());

    const RealApprox result{sum.value(), remainder + rounding};
    if (result.abs_error > target_abs_error) {
        throw certification_error("zeta_numeric: rounding floor " +
                                  std::to_string(static_cast<double>(result.abs_error)) +
                                  " exceeds target " +
                                  std::to_string(static_cast<double>(target_abs_error)));
    }
    return result;
}

} // namespace logsine
