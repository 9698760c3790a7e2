#pragma once

#include <cmath>
#include <string>

#include "compensated_sum.hpp"
#include "logsine/errors.hpp"
#include "logsine/quadrature.hpp"
#include "logsine/real_approx.hpp"

namespace logsine::detail {

// Node handed to integrands: the abscissa plus its exact distances to both
// ends, so endpoint singularities can be evaluated without cancellation.
struct Abscissa {
    real x;
    real to_left;
    real to_right;
};

// Beyond this |t| the weights are below 1e-450 and the nodes sit within
// 1e-450 of an endpoint.
inline constexpr real tanh_sinh_t_max = 6.5L;

template <typename Integrand>
RealApprox tanh_sinh(Integrand&& f, real a, real b, const QuadratureSettings& settings,
                     real endpoint_allowance = 0) {
    settings.validate();
    const real half_width = (b - a) / 2;
    const real width = b - a;
    constexpr real half_pi = pi / 2;

    // weighted value at t and -t (t > 0), or at the centre for t == 0
    const auto pair = [&](real t) -> std::pair<real, real> {
        if (t == 0) {
            const real w = half_width * half_pi;
            const real v = w * f(Abscissa{a + half_width, half_width, half_width});
            return {v, std::fabs(v)};
        }
        const real u = half_pi * std::sinh(t);
        const real cu = std::cosh(u);
        const real w = half_width * half_pi * std::cosh(t) / (cu * cu);
        const real near = half_width * 2 / (1 + std::exp(2 * u)); // half_width * (1 - tanh u)
        const real far = width - near;
        const real right = f(Abscissa{b - near, far, near});
        const real left = f(Abscissa{a + near, near, far});
        return {w * (right + left), w * (std::fabs(right) + std::fabs(left))};
    };

    CompensatedSum sum;
    real abs_sum = 0;
    const auto add_node = [&](real t) {
        const auto [v, m] = pair(t);
        sum.add(v);
        abs_sum += m;
    };

    for (unsigned j = 0; j <= tanh_sinh_t_max; ++j) {
        add_node(j);
    }
    real h = 1;
    real previous = h * sum.value();
    const real tail = 2 * std::fabs(pair(tanh_sinh_t_max).second);

    constexpr unsigned min_accepted_level = 3;
    real estimate = 0;
    for (unsigned level = 1; level <= settings.max_refinement_depth; ++level) {
        h /= 2;
        for (unsigned long j = 1; j * h <= tanh_sinh_t_max; j += 2) {
            add_node(j * h);
        }
        const real current = h * sum.value();
        estimate = std::fabs(current - previous);
        previous = current;

        const real rounding = 4 * epsilon * h * abs_sum + 2 * epsilon * std::fabs(current);
        const real error = estimate + rounding + h * tail + endpoint_allowance;
        if (level >= min_accepted_level && error <= settings.target_abs_error) {
            return {current, error};
        }
    }
    throw refinement_exhausted("tanh-sinh: level estimate " + std::to_string(static_cast<double>(estimate)) +
                               " still above target " +
                               std::to_string(static_cast<double>(settings.target_abs_error)) + " after " +
                               std::to_string(settings.max_refinement_depth) + " refinements");
}

} // namespace logsine::detail
