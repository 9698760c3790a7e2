#include "logsine/contour.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "compensated_sum.hpp"
#include "logsine/errors.hpp"
#include "logsine/logsine.hpp"
#include "logsine/zeta.hpp"

namespace logsine {

namespace {

// zeta(s) <= zeta(2) < 1.65 for every argument used by the legs
constexpr real zeta_ceiling = 1.65L;

// v * i^power, resolved by power mod 4 so no spurious components appear.
ComplexApprox rotate(const RealApprox& v, unsigned power) {
    const RealApprox zero{};
    switch (power % 4) {
    case 0: return {v, zero};
    case 1: return {zero, v};
    case 2: return {-v, zero};
    default: return {zero, -v};
    }
}

// scale * zeta(s), certified to `tol` including the rounding of the product.
RealApprox scaled_zeta(real scale, unsigned s, real tol, unsigned extra_ulps) {
    const real rounding_cap = (8 + extra_ulps) * epsilon * scale * zeta_ceiling;
    const real zeta_target = (tol - rounding_cap) / scale;
    if (!(zeta_target > 0)) {
        throw certification_error("contour leg: tolerance below rounding floor for zeta(" + std::to_string(s) + ")");
    }
    const RealApprox z = zeta_numeric(s, zeta_target);
    const real value = scale * z.value;
    return {value, scale * z.abs_error + (8 + extra_ulps) * epsilon * std::fabs(value)};
}

void require_tolerance(real tol, const char* who) {
    if (!(tol > 0) || !std::isfinite(tol)) {
        throw std::invalid_argument(std::string(who) + ": tolerance must be positive and finite");
    }
}

struct ComplexSum {
    detail::CompensatedSum re;
    detail::CompensatedSum im;
    real re_error = 0;
    real im_error = 0;

    void add(const ComplexApprox& z) {
        re.add(z.re.value);
        im.add(z.im.value);
        re_error += z.re.abs_error;
        im_error += z.im.abs_error;
    }

    ComplexApprox value() const {
        return {{re.value(), re_error + 2 * epsilon * re.magnitude()},
                {im.value(), im_error + 2 * epsilon * im.magnitude()}};
    }
};

// pi^(n+1) log 2 / (n + 1), the real constant of the bottom segment.
RealApprox bottom_log2_term(unsigned n) {
    const real v = std::pow(pi, static_cast<real>(n + 1)) * ln2 / (n + 1);
    return {v, (n + 8) * epsilon * v};
}

} // namespace

ComplexApprox leg_L(unsigned n, real tol) {
    require_tolerance(tol, "leg_L");
    const real scale = ExactRational(factorial(n), BigInt(1) << (n + 1)).to_long_double();
    return rotate(scaled_zeta(scale, n + 2, tol, 0), n + 1);
}

ComplexApprox leg_R_term(unsigned n, unsigned k, real tol) {
    require_tolerance(tol, "leg_R_term");
    if (k > n) {
        throw std::invalid_argument("leg_R_term: requires k <= n");
    }
    const ExactRational c(binomial(n, k) * factorial(k), BigInt(1) << (k + 1));
    const real scale = c.to_long_double() * std::pow(pi, static_cast<real>(n - k));
    // -i^(k+1) = i^(k+3)
    return rotate(scaled_zeta(scale, k + 2, tol, n - k), k + 3);
}

ComplexApprox leg_R(unsigned n, real tol) {
    require_tolerance(tol, "leg_R");
    const real share = tol / (n + 1);
    ComplexSum sum;
    for (unsigned k = 0; k <= n; ++k) {
        sum.add(leg_R_term(n, k, share));
    }
    return sum.value();
}

ExactRational leg_H_imag_coefficient(unsigned n) {
    return ExactRational(BigInt(1), BigInt(n + 2)) - ExactRational(BigInt(1), BigInt(2) * (n + 1));
}

ComplexApprox leg_H(unsigned n, const QuadratureSettings& settings) {
    const RealApprox integral = integrate_logsine(n, settings);
    const real im = leg_H_imag_coefficient(n).to_long_double() * std::pow(pi, static_cast<real>(n + 2));
    return {bottom_log2_term(n) + integral, {im, (n + 10) * epsilon * std::fabs(im)}};
}

ContourReport verify_null(unsigned n, real tol) {
    ContourReport report;
    report.n = n;
    try {
        require_tolerance(tol, "verify_null");
        report.L = leg_L(n, tol);
        report.R = leg_R(n, tol);
        report.H = leg_H(n, QuadratureSettings{tol});
        ComplexSum sum;
        sum.add(report.L);
        sum.add(report.H);
        sum.add(report.R);
        report.K = sum.value();
        report.residual_modulus = report.K.modulus();
        report.certified_bound = report.K.modulus_bound();
        report.pass = report.residual_modulus <= report.certified_bound && report.certified_bound <= 10 * tol;
        if (!report.pass) {
            report.failure = report.residual_modulus > report.certified_bound
                                 ? "residual exceeds certified bound"
                                 : "certified bound exceeds 10 * tolerance";
        }
    } catch (const certification_error& e) {
        report.failure = e.what();
        report.uncertified = true;
    } catch (const std::exception& e) {
        report.failure = e.what();
    }
    return report;
}

nlohmann::ordered_json to_json(const ContourReport& report) {
    const auto pair = [](const ComplexApprox& z) {
        return nlohmann::ordered_json::array({static_cast<double>(z.re.value), static_cast<double>(z.im.value)});
    };
    nlohmann::ordered_json j = {{"n", report.n},
                        {"L", pair(report.L)},
                        {"R", pair(report.R)},
                        {"H", pair(report.H)},
                        {"K", pair(report.K)},
                        {"residual", static_cast<double>(report.residual_modulus)},
                        {"bound", static_cast<double>(report.certified_bound)},
                        {"pass", report.pass}};
    if (report.failure) {
        j["failure"] = *report.failure;
    }
    return j;
}

bool verify_imag_identity_exact(unsigned n, const BernoulliTable& table) {
    if (n < 1) {
        throw std::invalid_argument("verify_imag_identity_exact: requires n >= 1");
    }
    const unsigned top = (n - 1) / 2;
    if (table.max_index() < 2 * top + 2) {
        throw std::invalid_argument("verify_imag_identity_exact: table too short");
    }
    ExactRational lhs;
    for (unsigned k = 0; k <= top; ++k) {
        lhs += ExactRational(binomial(n, 2 * k), BigInt(k + 1) * (2 * k + 1)) * table[2 * k + 2];
    }
    return lhs == ExactRational(BigInt(n), BigInt(n + 1) * (n + 2));
}

ExactRational imag_part_residual_exact(unsigned n, const BernoulliTable& table) {
    if (n < 1) {
        throw std::invalid_argument("imag_part_residual_exact: requires n >= 1");
    }
    const unsigned top = (n - 1) / 2;
    ExactRational residual = leg_H_imag_coefficient(n);
    for (unsigned k = 0; k <= top; ++k) {
        const ZetaEvenValue z = zeta_even_exact(k + 1, table);
        ExactRational term =
            ExactRational(binomial(n, 2 * k) * factorial(2 * k), BigInt(1) << (2 * k + 1)) * z.coefficient;
        if (k % 2 == 1) {
            term = -term;
        }
        residual -= term;
    }
    return residual;
}

const char* to_string(ReductionStep step) {
    switch (step) {
    case ReductionStep::pair_sum: return "pair_sum";
    case ReductionStep::intercalated_sum: return "intercalated_sum";
    case ReductionStep::head_terms: return "head_terms";
    case ReductionStep::full_recurrence: return "full_recurrence";
    }
    return "unknown";
}

ChainCheck verify_reduction_chain(unsigned n, const BernoulliTable& table) {
    if (n < 1) {
        throw std::invalid_argument("verify_reduction_chain: requires n >= 1");
    }
    if (table.max_index() < n + 1) {
        throw std::invalid_argument("verify_reduction_chain: table too short");
    }
    const unsigned row = n + 2;
    const ExactRational half_n(BigInt(n), BigInt(2));
    const auto term = [&](unsigned k) { return ExactRational(binomial(row, k)) * table[k]; };

    ExactRational pairs;
    for (unsigned k = 0; k <= (n - 1) / 2; ++k) {
        pairs += term(2 * k + 2);
    }
    if (pairs != half_n) {
        return {ReductionStep::pair_sum};
    }

    ExactRational intercalated;
    for (unsigned k = 2; k <= n + 1; ++k) {
        intercalated += term(k);
    }
    if (intercalated != half_n) {
        return {ReductionStep::intercalated_sum};
    }

    const ExactRational head = term(0) + term(1);
    if (head != -half_n) {
        return {ReductionStep::head_terms};
    }

    ExactRational full;
    for (unsigned k = 0; k <= n + 1; ++k) {
        full += term(k);
    }
    if (!full.is_zero()) {
        return {ReductionStep::full_recurrence};
    }
    return {};
}

RealApprox verify_real_part(unsigned n, real tol) {
    require_tolerance(tol, "verify_real_part");
    const ComplexApprox l = leg_L(n, tol / 4);
    const ComplexApprox r = leg_R(n, tol / 4);
    const RealApprox closed = logsine_numeric(n, tol / 2);
    detail::CompensatedSum sum;
    sum.add(l.re.value);
    sum.add(r.re.value);
    const RealApprox log2_term = bottom_log2_term(n);
    sum.add(log2_term.value);
    sum.add(closed.value);
    const real error = l.re.abs_error + r.re.abs_error + log2_term.abs_error + closed.abs_error +
                       2 * epsilon * sum.magnitude();
    return {sum.value(), error};
}

} // namespace logsine
