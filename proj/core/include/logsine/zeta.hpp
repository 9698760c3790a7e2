#pragma once

#include "logsine/bernoulli.hpp"
#include "logsine/rational.hpp"
#include "logsine/real_approx.hpp"

namespace logsine {

/// zeta(2k) = coefficient * pi^(2k), with the coefficient exact.
struct ZetaEvenValue {
    unsigned k = 0;
    unsigned pi_power = 0;
    ExactRational coefficient;

    long double to_long_double() const;
};

/// Euler's connection zeta(2k) = (-1)^(k+1) (2 pi)^(2k) B_2k / (2 (2k)!).
/// Requires k >= 1 and table.max_index() >= 2k.
ZetaEvenValue zeta_even_exact(unsigned k, const BernoulliTable& table);

/// sum_{l=1}^{terms} l^-s. Requires s > 1 and terms >= 1.
real zeta_series_partial(real s, unsigned long terms);

/**
 * zeta(s) for integer s >= 2 with |value - zeta(s)| <= abs_error <= target_abs_error.
 *
 * The head of the defining series is summed directly and the tail is replaced by
 * its Euler-Maclaurin expansion, whose remainder has a rigorous bound for real
 * s > 1. The reported error also carries a floating-point rounding allowance, so
 * targets below roughly 1e-18 cannot be certified and throw certification_error.
 *
 * The pi and log 2 constants used elsewhere in the library are the long double
 * std::numbers values, accurate to the format's 64-bit significand.
 */
RealApprox zeta_numeric(unsigned s, real target_abs_error);

} // namespace logsine
