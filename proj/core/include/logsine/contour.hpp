#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "logsine/bernoulli.hpp"
#include "logsine/quadrature.hpp"
#include "logsine/real_approx.hpp"

namespace logsine {

// The strip contour: a left leg down x = 0, the bottom segment y = 0 over
// [0, pi], and a right leg up x = pi. The integrand is z^n log(1 - e^(2iz)),
// so the three contributions must sum to zero for every n.

/// Left leg, i^(n+1) (n! / 2^(n+1)) zeta(n+2). `tol` bounds the leg's own error.
ComplexApprox leg_L(unsigned n, real tol);

/// Term k of the right leg, -i^(k+1) C(n,k) pi^(n-k) (k! / 2^(k+1)) zeta(k+2).
ComplexApprox leg_R_term(unsigned n, unsigned k, real tol);

/// Right leg: terms k = 0..n, each certified to tol / (n + 1).
ComplexApprox leg_R(unsigned n, real tol);

/// Imaginary coefficient of the bottom segment: 1/(n+2) - 1/(2(n+1)),
/// multiplying pi^(n+2).
ExactRational leg_H_imag_coefficient(unsigned n);

/// Bottom segment. The log-sine integral comes from the quadrature oracle,
/// never from the closed form.
ComplexApprox leg_H(unsigned n, const QuadratureSettings& settings);

struct ContourReport {
    unsigned n = 0;
    ComplexApprox L;
    ComplexApprox R;
    ComplexApprox H;
    ComplexApprox K;
    real residual_modulus = 0;
    real certified_bound = 0;
    bool pass = false;
    std::optional<std::string> failure;
    // set when a leg threw certification_error rather than the sum failing
    bool uncertified = false;
};

/// K = L + H + R at tolerance tol. Passes iff |K| <= certified bound <= 10 tol.
/// Leg failures are caught and recorded in `failure`.
ContourReport verify_null(unsigned n, real tol);

nlohmann::ordered_json to_json(const ContourReport& report);

/// Exact imaginary-part identity:
/// sum_{k<=(n-1)/2} C(n,2k) B_{2k+2} / ((k+1)(2k+1)) == n / ((n+1)(n+2)).
/// Requires n >= 1 and table.max_index() >= 2 floor((n-1)/2) + 2.
bool verify_imag_identity_exact(unsigned n, const BernoulliTable& table);

/// Im(K_n) / pi^(n+2) in exact arithmetic, with the even zeta values
/// substituted from Euler's connection. Zero for every n >= 1.
ExactRational imag_part_residual_exact(unsigned n, const BernoulliTable& table);

enum class ReductionStep { pair_sum, intercalated_sum, head_terms, full_recurrence };

const char* to_string(ReductionStep step);

struct ChainCheck {
    std::optional<ReductionStep> failed_step;

    explicit operator bool() const { return !failed_step; }
};

/// Checks, in order and exactly:
///   pair_sum:         sum_{k<=(n-1)/2} C(n+2,2k+2) B_{2k+2} == n/2
///   intercalated_sum: sum_{k=2}^{n+1} C(n+2,k) B_k == n/2
///   head_terms:       C(n+2,0) B_0 + C(n+2,1) B_1 == -n/2
///   full_recurrence:  sum_{k=0}^{n+1} C(n+2,k) B_k == 0
/// Requires n >= 1 and table.max_index() >= n + 1.
ChainCheck verify_reduction_chain(unsigned n, const BernoulliTable& table);

/// Re(K_n) with the log-sine integral taken from the closed form. Should be zero.
RealApprox verify_real_part(unsigned n, real tol);

} // namespace logsine
