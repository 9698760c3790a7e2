#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "logsine/fourier.hpp"
#include "logsine/quadrature.hpp"

using logsine::ln2;
using logsine::pi;
using logsine::real;

TEST_CASE("cosine series partial sums") {
    CHECK(logsine::logsin_series_partial(pi, 1) == doctest::Approx(1.0));
    CHECK(std::fabs(logsine::logsin_series_partial(pi, 1'000'000) - ln2) < 1e-6L);
    CHECK(std::fabs(logsine::logsin_series_partial(pi / 2, 10'000) - ln2 / 2) < 1e-3L);
}

TEST_CASE("sawtooth series partial sums") {
    CHECK(std::fabs(logsine::sawtooth_series_partial(pi, 7)) < 1e-17L);
    CHECK(std::fabs(logsine::sawtooth_series_partial(pi / 2, 10'000) + pi / 4) < 1e-3L);
    CHECK(std::fabs(logsine::sawtooth_series_partial(3 * pi / 2, 10'000) - pi / 4) < 1e-3L);
}

TEST_CASE("pointwise convergence within 10/terms away from the singular set") {
    const unsigned long terms = 100'000;
    for (const real theta : {pi / 6, pi / 4, pi / 2, pi, 3 * pi / 2}) {
        const logsine::FourierPartialSum series(logsine::FourierPartialSum::Kind::cosine, terms);
        CHECK(std::fabs(series(theta) - std::log(2 * std::fabs(std::sin(theta / 2)))) <= 10.0L / terms);
    }
}

TEST_CASE("theta on the excluded lattice is rejected") {
    CHECK_THROWS_AS(logsine::logsin_series_partial(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(logsine::logsin_series_partial(5e-10L, 10), std::invalid_argument);
    CHECK_THROWS_AS(logsine::logsin_series_partial(2 * pi, 10), std::invalid_argument);
    CHECK_THROWS_AS(logsine::sawtooth_series_partial(-1, 10), std::invalid_argument);
    CHECK_THROWS_AS(logsine::sawtooth_series_partial(7, 10), std::invalid_argument);
    CHECK_THROWS_AS(logsine::logsin_series_partial(1, 0), std::invalid_argument);
    CHECK_NOTHROW(logsine::logsin_series_partial(2e-9L, 10));
}

TEST_CASE("Parseval sum for the log-squared integral") {
    const real target = pi * pi * pi / 24;
    CHECK(logsine::parseval_logsquared(1) == doctest::Approx(static_cast<double>(pi / 4)));
    CHECK(std::fabs(logsine::parseval_logsquared(1'000'000) - target) <= 1e-6L);
    real previous = 0;
    for (unsigned long n = 1; n <= 5000; n += 13) {
        const real v = logsine::parseval_logsquared(n);
        CHECK(v > previous);
        CHECK(v <= target + 8 * logsine::epsilon);
        previous = v;
    }
    CHECK_THROWS_AS(logsine::parseval_logsquared(0), std::invalid_argument);
}

TEST_CASE("integration-by-parts route matches the closed form exactly") {
    for (unsigned n = 0; n <= 40; ++n) {
        INFO("n = " << n);
        CHECK(logsine::logsine_via_fourier(n) == logsine::logsine_symbolic(n));
    }
}

TEST_CASE("dropped terminal integrals are certified zero") {
    for (unsigned n = 0; n <= 12; ++n) {
        const unsigned p = logsine::fourier_terminal_power(n);
        CHECK(p == n % 2);
        for (unsigned l = 1; l <= 5; ++l) {
            const auto m = logsine::cosine_moment(l, p);
            CHECK(std::fabs(m.value) <= m.abs_error + 1e-15L);
        }
    }
}
