#include "logsine/logsine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "compensated_sum.hpp"
#include "logsine/errors.hpp"
#include "logsine/zeta.hpp"

namespace logsine {

SymbolicLogSine logsine_symbolic(unsigned n) {
    SymbolicLogSine form;
    form.n = n;
    form.log2_coefficient = ExactRational(BigInt(-1), BigInt(n + 1));

    const BigInt n_factorial = factorial(n);
    const BigInt two_pow_n1 = BigInt(1) << (n + 1);
    for (unsigned k = 1; k <= n / 2; ++k) {
        const unsigned p = n - 2 * k + 1;
        ExactRational c(n_factorial * (BigInt(1) << p), two_pow_n1 * factorial(p));
        if (k % 2 == 1) {
            c = -c;
        }
        form.zeta_terms.push_back({2 * k + 1, c, static_cast<int>(p)});
    }
    return form;
}

RealApprox logsine_numeric(unsigned n, real target_abs_error) {
    if (!(target_abs_error > 0) || !std::isfinite(target_abs_error)) {
        throw std::invalid_argument("logsine_numeric: target_abs_error must be positive and finite");
    }
    const SymbolicLogSine form = logsine_symbolic(n);
    const real summands = static_cast<real>(form.zeta_terms.size() + 1);
    // 1% of the budget is held back for the final summation
    const real share = 0.99L * target_abs_error / summands;

    detail::CompensatedSum sum;
    real error = 0;

    {
        const real term = form.log2_coefficient.to_long_double() *
                          std::pow(pi, static_cast<real>(form.log2_pi_power())) * ln2;
        const real rounding = (form.log2_pi_power() + 8) * epsilon * std::fabs(term);
        if (rounding > share) {
            throw certification_error("logsine_numeric: log 2 term rounding exceeds its budget share");
        }
        sum.add(term);
        error += rounding;
    }

    for (const ZetaTerm& zt : form.zeta_terms) {
        const real scale = std::fabs(zt.coefficient.to_long_double()) *
                           std::pow(pi, static_cast<real>(zt.pi_power));
        // zeta(s) <= zeta(3) < 1.25 for every odd argument that appears
        const real rounding_cap = (zt.pi_power + 8) * epsilon * scale * 1.25L;
        const real zeta_target = (share - rounding_cap) / scale;
        if (!(zeta_target > 0)) {
            throw certification_error("logsine_numeric: rounding for zeta(" + std::to_string(zt.argument) +
                                      ") term exceeds its budget share");
        }
        const RealApprox z = zeta_numeric(zt.argument, zeta_target);
        const real term = zt.coefficient.to_long_double() * std::pow(pi, static_cast<real>(zt.pi_power)) *
                          z.value;
        sum.add(term);
        error += scale * z.abs_error + (zt.pi_power + 8) * epsilon * std::fabs(term);
    }

    error += 2 * epsilon * sum.magnitude();
    if (error > target_abs_error) {
        throw certification_error("logsine_numeric: certified error " +
                                  std::to_string(static_cast<double>(error)) + " exceeds target");
    }
    return {sum.value(), error};
}

nlohmann::ordered_json to_json(const SymbolicLogSine& form) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const ZetaTerm& zt : form.zeta_terms) {
        terms.push_back({{"arg", zt.argument}, {"coeff", zt.coefficient.to_string()}, {"pi_power", zt.pi_power}});
    }
    return {{"n", form.n},
            {"log2_coeff", form.log2_coefficient.to_string()},
            {"pi_power_log2", form.log2_pi_power()},
            {"zeta_terms", terms}};
}

} // namespace logsine
