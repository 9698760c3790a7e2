#pragma once

#include "logsine/real_approx.hpp"

namespace logsine {

/**
 * Controls for the tanh-sinh oracle.
 *
 * Level 0 uses step h = 1; every refinement halves h. A result is accepted once
 * the difference between consecutive levels plus the rounding allowance is below
 * target_abs_error, and only from level 3 onwards. Reaching max_refinement_depth
 * without that throws refinement_exhausted.
 */
struct QuadratureSettings {
    real target_abs_error = 1e-10L;
    unsigned max_refinement_depth = 12;

    /// Start of the semi-infinite cutoff search for integrals over [0, inf) whose
    /// integrand is bounded by y^n e^(-2y) / (1 - e^(-2y)). The cutoff starts at
    /// max(20, 5n) and grows by 5 until the analytic tail bound is below half the target.
    real cutoff_floor = 20;
    real cutoff_per_power = 5;

    /// Throws std::invalid_argument for a nonpositive target or zero depth.
    void validate() const;
};

/// Tail bound used for the semi-infinite legs:
/// integral_Y^inf y^n e^(-2y) dy / (1 - e^(-2Y)) >= |integral_Y^inf y^n log(1 - e^(-2y)) dy|.
real vertical_leg_tail_bound(unsigned n, real cutoff);

/// Cutoff Y chosen by the settings' policy for power n.
real vertical_leg_cutoff(unsigned n, const QuadratureSettings& settings);

/// integral_0^pi x^n log(sin x) dx, with both logarithmic endpoints handled by
/// the double-exponential node clustering.
RealApprox integrate_logsine(unsigned n, const QuadratureSettings& settings = {});

/// integral_0^(pi/2) log(2 sin x)^2 dx.
RealApprox integrate_logsquared(const QuadratureSettings& settings = {});

/// integral_0^inf y^n log(1 - e^(-2y)) dy, which is negative.
RealApprox integrate_vertical_leg(unsigned n, const QuadratureSettings& settings = {});

/// integral_0^pi theta^power cos(2 l theta) d theta, power in {0, 1}.
RealApprox cosine_moment(unsigned l, unsigned power,
                         const QuadratureSettings& settings = {1e-13L, 12});

/// integral_0^pi cos(2 l theta) cos(2 l' theta) d theta.
RealApprox cosine_orthogonality(unsigned l, unsigned l_prime,
                                const QuadratureSettings& settings = {1e-13L, 12});

} // namespace logsine
