#include "logsine/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tanh_sinh.hpp"

namespace logsine {

using detail::Abscissa;

void QuadratureSettings::validate() const {
    if (!(target_abs_error > 0) || !std::isfinite(target_abs_error)) {
        throw std::invalid_argument("QuadratureSettings: target_abs_error must be positive and finite");
    }
    if (max_refinement_depth == 0) {
        throw std::invalid_argument("QuadratureSettings: max_refinement_depth must be positive");
    }
    if (!(cutoff_floor > 0) || !(cutoff_per_power >= 0)) {
        throw std::invalid_argument("QuadratureSettings: invalid cutoff policy");
    }
}

real vertical_leg_tail_bound(unsigned n, real cutoff) {
    // integral_Y^inf y^n e^{-2y} dy = e^{-2Y} sum_{j=0}^n (n!/j!) Y^j / 2^{n-j+1}
    real sum = 0;
    real falling = 1; // n! / j!, built from j = n downwards
    for (unsigned j = n + 1; j-- > 0;) {
        sum += falling * std::pow(cutoff, static_cast<real>(j)) / std::ldexp(1.0L, static_cast<int>(n - j + 1));
        falling *= j;
    }
    // -log(1 - u) <= u / (1 - u) for 0 < u < 1
    return std::exp(-2 * cutoff) * sum / (-std::expm1(-2 * cutoff));
}

real vertical_leg_cutoff(unsigned n, const QuadratureSettings& settings) {
    settings.validate();
    real cutoff = std::max(settings.cutoff_floor, settings.cutoff_per_power * n);
    while (vertical_leg_tail_bound(n, cutoff) >= settings.target_abs_error / 2) {
        cutoff += 5;
    }
    return cutoff;
}

RealApprox integrate_logsine(unsigned n, const QuadratureSettings& settings) {
    const real power = n;
    const auto integrand = [power](const Abscissa& p) {
        // sin(x) = sin(pi - x): use whichever distance is exact
        const real s = std::sin(std::min(p.to_left, p.to_right));
        return std::pow(p.x, power) * std::log(s);
    };
    // The right end is the rounded pi; the shift moves the integral by at most
    // ~eps * pi^(n+1) * |log eps|.
    const real allowance = 64 * epsilon * std::pow(pi, power + 1);
    return detail::tanh_sinh(integrand, 0, pi, settings, allowance);
}

RealApprox integrate_logsquared(const QuadratureSettings& settings) {
    const auto integrand = [](const Abscissa& p) {
        const real l = std::log(2 * std::sin(p.to_left));
        return l * l;
    };
    return detail::tanh_sinh(integrand, 0, pi / 2, settings, 4 * epsilon);
}

RealApprox integrate_vertical_leg(unsigned n, const QuadratureSettings& settings) {
    const real cutoff = vertical_leg_cutoff(n, settings);
    const real tail = vertical_leg_tail_bound(n, cutoff);
    QuadratureSettings head = settings;
    head.target_abs_error = settings.target_abs_error / 2;
    const real power = n;
    const auto integrand = [power](const Abscissa& p) {
        const real y = p.to_left;
        // log(1 - e^{-2y}), accurate at both ends of the range
        const real l = y < ln2 / 2 ? std::log(-std::expm1(-2 * y)) : std::log1p(-std::exp(-2 * y));
        return std::pow(y, power) * l;
    };
    RealApprox r = detail::tanh_sinh(integrand, 0, cutoff, head);
    r.abs_error += tail;
    return r;
}

RealApprox cosine_moment(unsigned l, unsigned power, const QuadratureSettings& settings) {
    if (l < 1) {
        throw std::invalid_argument("cosine_moment: requires l >= 1");
    }
    if (power > 1) {
        throw std::invalid_argument("cosine_moment: power must be 0 or 1");
    }
    const real freq = 2.0L * l;
    const auto integrand = [freq, power](const Abscissa& p) {
        const real c = std::cos(freq * p.x);
        return power == 0 ? c : p.x * c;
    };
    return detail::tanh_sinh(integrand, 0, pi, settings, 8 * epsilon);
}

RealApprox cosine_orthogonality(unsigned l, unsigned l_prime, const QuadratureSettings& settings) {
    if (l < 1 || l_prime < 1) {
        throw std::invalid_argument("cosine_orthogonality: requires l, l' >= 1");
    }
    const real f1 = 2.0L * l;
    const real f2 = 2.0L * l_prime;
    const auto integrand = [f1, f2](const Abscissa& p) { return std::cos(f1 * p.x) * std::cos(f2 * p.x); };
    return detail::tanh_sinh(integrand, 0, pi, settings, 8 * epsilon);
}

} // namespace logsine
