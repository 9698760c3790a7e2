#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "logsine/errors.hpp"
#include "logsine/quadrature.hpp"
#include "oracles.hpp"

using logsine::ln2;
using logsine::pi;
using logsine::QuadratureSettings;
using logsine::real;

TEST_CASE("log-sine integrals: classical values and frozen oracle values") {
    const QuadratureSettings settings{1e-10L};
    const auto i0 = logsine::integrate_logsine(0, settings);
    CHECK(i0.abs_error <= 1e-10L);
    CHECK(std::fabs(i0.value + pi * ln2) <= 1e-10L);
    const auto i1 = logsine::integrate_logsine(1, settings);
    CHECK(std::fabs(i1.value + pi * pi / 2 * ln2) <= 1e-10L);

    for (unsigned n = 0; n <= 12; ++n) {
        const auto r = logsine::integrate_logsine(n, settings);
        CHECK(r.abs_error <= 1e-10L);
        CHECK(std::fabs(r.value - frozen::logsine_integral[n]) <= r.abs_error);
    }
}

TEST_CASE("log-squared integral") {
    const auto tight = logsine::integrate_logsquared({1e-10L});
    CHECK(std::fabs(tight.value - pi * pi * pi / 24) <= tight.abs_error);
    CHECK(tight.abs_error <= 1e-10L);
    CHECK(std::fabs(tight.value - frozen::logsquared) <= 1e-10L);

    const auto loose = logsine::integrate_logsquared({1e-4L});
    CHECK(std::fabs(loose.value - pi * pi * pi / 24) <= loose.abs_error);
}

TEST_CASE("refinement exhaustion is a distinct failure") {
    QuadratureSettings settings{1e-14L, 1};
    CHECK_THROWS_AS(logsine::integrate_logsquared(settings), logsine::refinement_exhausted);
    CHECK_THROWS_AS(logsine::integrate_logsine(3, settings), logsine::refinement_exhausted);
    // still a certification_error for callers that only care about that
    CHECK_THROWS_AS(logsine::integrate_logsquared(settings), logsine::certification_error);
}

TEST_CASE("invalid settings") {
    CHECK_THROWS_AS(logsine::integrate_logsquared({0}), std::invalid_argument);
    CHECK_THROWS_AS(logsine::integrate_logsquared({1e-10L, 0}), std::invalid_argument);
    CHECK_THROWS_AS(logsine::cosine_moment(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(logsine::cosine_moment(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(logsine::cosine_orthogonality(0, 1), std::invalid_argument);
}

TEST_CASE("vertical leg integrals") {
    for (unsigned n = 0; n <= 8; ++n) {
        const auto r = logsine::integrate_vertical_leg(n, {1e-10L});
        CHECK(r.value < 0);
        CHECK(r.abs_error <= 1e-10L);
        CHECK(std::fabs(r.value - frozen::vertical_leg[n]) <= r.abs_error);
    }
    CHECK(std::fabs(logsine::integrate_vertical_leg(0).value + pi * pi / 12) <= 1e-10L);
    CHECK(std::fabs(logsine::integrate_vertical_leg(2).value + std::pow(pi, 4) / 360) <= 1e-10L);
}

TEST_CASE("cutoff policy keeps the tail under half the target") {
    for (unsigned n : {0U, 3U, 8U, 15U}) {
        for (real tol : {1e-6L, 1e-10L, 1e-14L}) {
            QuadratureSettings s{tol};
            const real y = logsine::vertical_leg_cutoff(n, s);
            CHECK(y >= std::max<real>(20, 5.0L * n));
            CHECK(logsine::vertical_leg_tail_bound(n, y) < tol / 2);
        }
    }
    // the analytic tail bound dominates a crude numeric tail
    const real y = 6;
    real numeric = 0;
    const real h = 1e-3L;
    for (real t = y + h / 2; t < 60; t += h) {
        numeric += -std::pow(t, 3) * std::log(-std::expm1(-2 * t)) * h;
    }
    CHECK(numeric <= logsine::vertical_leg_tail_bound(3, y));
}

TEST_CASE("cosine moments vanish") {
    for (unsigned l = 1; l <= 10; ++l) {
        for (unsigned p = 0; p <= 1; ++p) {
            const auto m = logsine::cosine_moment(l, p);
            CHECK(std::fabs(m.value) <= 1e-12L);
            CHECK(m.abs_error <= 1e-12L);
        }
    }
}

TEST_CASE("cosine orthogonality") {
    for (unsigned l = 1; l <= 6; ++l) {
        for (unsigned lp = 1; lp <= 6; ++lp) {
            const auto m = logsine::cosine_orthogonality(l, lp);
            const real expected = l == lp ? pi / 2 : 0;
            CHECK(std::fabs(m.value - expected) <= 1e-12L);
        }
    }
}

TEST_CASE("halving the target keeps the certified interval nested") {
    for (unsigned n : {0U, 2U, 5U, 9U}) {
        real tol = 1e-4L;
        auto outer = logsine::integrate_logsine(n, {tol});
        for (int i = 0; i < 12; ++i) {
            tol /= 2;
            const auto inner = logsine::integrate_logsine(n, {tol});
            CHECK(inner.lower() >= outer.lower());
            CHECK(inner.upper() <= outer.upper());
            outer = inner;
        }
    }
}
