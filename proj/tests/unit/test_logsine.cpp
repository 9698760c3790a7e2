#include <doctest.h>

#include <cmath>

#include "logsine/errors.hpp"
#include "logsine/logsine.hpp"
#include "oracles.hpp"

using logsine::BigInt;
using logsine::ExactRational;
using logsine::ln2;
using logsine::pi;

namespace {
ExactRational q(long p, long d) { return ExactRational(BigInt(p), BigInt(d)); }
} // namespace

TEST_CASE("symbolic forms for n = 0, 1, 2") {
    const auto f0 = logsine::logsine_symbolic(0);
    CHECK(f0.log2_coefficient == ExactRational(-1));
    CHECK(f0.zeta_terms.empty());

    const auto f1 = logsine::logsine_symbolic(1);
    CHECK(f1.log2_coefficient == q(-1, 2));
    CHECK(f1.zeta_terms.empty());

    const auto f2 = logsine::logsine_symbolic(2);
    CHECK(f2.log2_coefficient == q(-1, 3));
    REQUIRE(f2.zeta_terms.size() == 1);
    CHECK(f2.zeta_terms[0].argument == 3);
    CHECK(f2.zeta_terms[0].coefficient == q(-1, 2));
    CHECK(f2.zeta_terms[0].pi_power == 1);
}

TEST_CASE("symbolic invariants and parity growth") {
    std::size_t previous = 0;
    for (unsigned n = 0; n <= 40; ++n) {
        const auto form = logsine::logsine_symbolic(n);
        CHECK(form.log2_coefficient == q(-1, n + 1));
        CHECK(form.log2_pi_power() == static_cast<int>(n) + 1);
        CHECK(form.zeta_terms.size() == n / 2);
        for (std::size_t i = 0; i < form.zeta_terms.size(); ++i) {
            const auto& t = form.zeta_terms[i];
            const unsigned k = static_cast<unsigned>(i) + 1;
            CHECK(t.argument == 2 * k + 1);
            CHECK(t.pi_power == static_cast<int>(n - 2 * k + 1));
            // (-1)^k n! 2^(n-2k+1) / (2^(n+1) (n-2k+1)!), computed by hand-rolled products
            BigInt num = 1;
            for (unsigned j = n - 2 * k + 2; j <= n; ++j) num *= j;
            ExactRational expected(num, BigInt(1) << (2 * k));
            if (k % 2 == 1) expected = -expected;
            CHECK(t.coefficient == expected);
        }
        if (n > 0) {
            const std::size_t growth = form.zeta_terms.size() - previous;
            CHECK(growth == (n % 2 == 0 ? 1U : 0U));
        }
        previous = form.zeta_terms.size();
    }
}

TEST_CASE("JSON serialization") {
    const auto j = logsine::to_json(logsine::logsine_symbolic(4));
    CHECK(j.dump() ==
          R"({"n":4,"log2_coeff":"-1/5","pi_power_log2":5,"zeta_terms":[)"
          R"({"arg":3,"coeff":"-1","pi_power":3},{"arg":5,"coeff":"3/2","pi_power":1}]})");
    CHECK(logsine::to_json(logsine::logsine_symbolic(0))["zeta_terms"].empty());
}

TEST_CASE("numeric evaluation reproduces the classical values") {
    const auto i0 = logsine::logsine_numeric(0, 1e-12L);
    CHECK(i0.abs_error <= 1e-12L);
    CHECK(std::fabs(i0.value - (-pi * ln2)) <= 1e-12L);
    CHECK(std::fabs(i0.value - (-2.177586090303602130501L)) <= 1e-12L);

    const auto i1 = logsine::logsine_numeric(1, 1e-12L);
    CHECK(std::fabs(i1.value - (-pi * pi / 2 * ln2)) <= 1e-12L);

    const auto i2 = logsine::logsine_numeric(2, 1e-10L);
    CHECK(std::fabs(i2.value - (-9.05215)) < 1e-5L);
}

TEST_CASE("numeric evaluation agrees with independent quadrature values") {
    for (unsigned n = 0; n <= 12; ++n) {
        const auto v = logsine::logsine_numeric(n, 1e-10L);
        CHECK(v.abs_error <= 1e-10L);
        CHECK(std::fabs(v.value - frozen::logsine_integral[n]) <= v.abs_error + 1e-15L);
    }
}

TEST_CASE("unattainable and invalid tolerances") {
    CHECK_THROWS_AS(logsine::logsine_numeric(4, 1e-30L), logsine::certification_error);
    CHECK_THROWS_AS(logsine::logsine_numeric(0, 1e-30L), logsine::certification_error);
    CHECK_THROWS_AS(logsine::logsine_numeric(2, 0), std::invalid_argument);
}
