#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "logsine/rational.hpp"
#include "logsine/real_approx.hpp"

namespace logsine {

/// One term coefficient * pi^pi_power * zeta(argument).
struct ZetaTerm {
    unsigned argument = 0;
    ExactRational coefficient;
    int pi_power = 0;

    friend bool operator==(const ZetaTerm&, const ZetaTerm&) = default;
};

/**
 * Exact decomposition of I_n = integral_0^pi x^n log(sin x) dx:
 *
 *   I_n = log2_coefficient * pi^(n+1) * log 2
 *       + sum over zeta_terms of coefficient * pi^pi_power * zeta(argument)
 *
 * zeta_terms holds one entry per odd argument 3, 5, .., 2*floor(n/2)+1, in
 * increasing order.
 */
struct SymbolicLogSine {
    unsigned n = 0;
    ExactRational log2_coefficient;
    std::vector<ZetaTerm> zeta_terms;

    int log2_pi_power() const { return static_cast<int>(n) + 1; }

    friend bool operator==(const SymbolicLogSine&, const SymbolicLogSine&) = default;
};

SymbolicLogSine logsine_symbolic(unsigned n);

/// Evaluates the exact form numerically. The error budget is split evenly over the
/// floor(n/2) + 1 summands; throws certification_error when a share cannot be met.
RealApprox logsine_numeric(unsigned n, real target_abs_error);

/// {"n", "log2_coeff": "p/q", "pi_power_log2", "zeta_terms": [{"arg", "coeff", "pi_power"}]}
nlohmann::ordered_json to_json(const SymbolicLogSine& form);

} // namespace logsine
