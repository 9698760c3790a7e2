#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

#include "logsine/bernoulli.hpp"
#include "logsine/contour.hpp"
#include "logsine/errors.hpp"
#include "logsine/fourier.hpp"
#include "logsine/logsine.hpp"
#include "logsine/quadrature.hpp"
#include "logsine/zeta.hpp"

namespace logsine::cli {

namespace {

using Results = std::vector<CheckResult>;

std::string num(real v) { return fmt::format("{:.3e}", static_cast<double>(v)); }

// Runs `body`, turning exceptions into failed checks.
void record(Results& out, std::string suite, std::string check, std::optional<unsigned> n,
            const std::function<bool(std::string&)>& body) {
    CheckResult r{std::move(suite), std::move(check), n, false, false, {}};
    try {
        r.pass = body(r.detail);
    } catch (const certification_error& e) {
        r.certification_failure = true;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    out.push_back(std::move(r));
}

std::string interval_detail(const RealApprox& a, const RealApprox& b) {
    return fmt::format("diff={} bound={}", num(std::fabs(a.value - b.value)), num(a.abs_error + b.abs_error));
}

void recurrence_suite(Results& out, unsigned n_max) {
    const BernoulliTable table = bernoulli_table(std::max(n_max, 1U));
    for (unsigned n = 2; n <= n_max; ++n) {
        record(out, "recurrence", "recurrence", n, [&](std::string&) { return verify_recurrence(n, table); });
    }
    for (unsigned k = 3; k <= n_max; k += 2) {
        record(out, "recurrence", "odd_null", k, [&](std::string& detail) {
            detail = "B=" + table[k].to_string();
            return table[k].is_zero();
        });
    }
}

void identities_suite(Results& out, unsigned n_max) {
    const BernoulliTable table = bernoulli_table(n_max + 2);
    for (unsigned n = 1; n <= n_max; ++n) {
        record(out, "identities", "imag_identity", n,
               [&](std::string&) { return verify_imag_identity_exact(n, table); });
        record(out, "identities", "imag_part_zero", n, [&](std::string& detail) {
            const ExactRational r = imag_part_residual_exact(n, table);
            detail = "residual=" + r.to_string();
            return r.is_zero();
        });
        record(out, "identities", "reduction_chain", n, [&](std::string& detail) {
            const ChainCheck chain = verify_reduction_chain(n, table);
            if (!chain) {
                detail = std::string("failed at ") + to_string(*chain.failed_step);
            }
            return static_cast<bool>(chain);
        });
        record(out, "identities", "binomial_identity", n, [&](std::string&) {
            for (unsigned k = 0; 2 * k <= n; ++k) {
                if (!verify_binomial_identity(n, k)) {
                    return false;
                }
            }
            return true;
        });
    }
}

void contour_suite(Results& out, unsigned n_max, real tol) {
    const QuadratureSettings settings{tol};
    for (unsigned n = 0; n <= n_max; ++n) {
        record(out, "contour", "null", n, [&](std::string& detail) {
            const ContourReport report = verify_null(n, tol);
            detail = fmt::format("residual={} bound={}", num(report.residual_modulus), num(report.certified_bound));
            if (report.failure) {
                detail += " (" + *report.failure + ")";
                if (report.uncertified) {
                    throw certification_error(detail);
                }
            }
            return report.pass;
        });
        record(out, "contour", "real_part", n, [&](std::string& detail) {
            const RealApprox re = verify_real_part(n, tol);
            detail = fmt::format("value={} bound={}", num(re.value), num(re.abs_error));
            return re.contains(0);
        });
        record(out, "contour", "closed_form_vs_quadrature", n, [&](std::string& detail) {
            const RealApprox closed = logsine_numeric(n, tol);
            const RealApprox oracle = integrate_logsine(n, settings);
            detail = interval_detail(closed, oracle);
            return agree(closed, oracle);
        });
        record(out, "contour", "series_interchange", n, [&](std::string& detail) {
            const RealApprox integral = integrate_vertical_leg(n, settings);
            const real scale = ExactRational(factorial(n), BigInt(1) << (n + 1)).to_long_double();
            const RealApprox z = zeta_numeric(n + 2, tol / scale);
            const RealApprox series{-scale * z.value, scale * z.abs_error + 4 * epsilon * scale * z.value};
            detail = interval_detail(integral, series);
            return agree(integral, series);
        });
    }
}

void fourier_suite(Results& out, unsigned n_max) {
    record(out, "fourier", "parseval", std::nullopt, [&](std::string& detail) {
        const real target = pi * pi * pi / 24;
        const real v = parseval_logsquared(1'000'000);
        detail = fmt::format("diff={}", num(std::fabs(v - target)));
        return std::fabs(v - target) <= 1e-6L;
    });
    const unsigned long terms = 100'000;
    for (const real theta : {pi / 6, pi / 4, pi / 2, pi, 3 * pi / 2}) {
        record(out, "fourier", "pointwise_convergence", std::nullopt, [&](std::string& detail) {
            const FourierPartialSum series(FourierPartialSum::Kind::cosine, terms);
            const real diff = std::fabs(series(theta) - series.limit(theta));
            detail = fmt::format("theta={:.6f} diff={}", static_cast<double>(theta), num(diff));
            return diff <= 10.0L / terms;
        });
    }
    for (unsigned l = 1; l <= 10; ++l) {
        for (unsigned p = 0; p <= 1; ++p) {
            record(out, "fourier", "cosine_moment", std::nullopt, [&](std::string& detail) {
                const RealApprox m = cosine_moment(l, p);
                detail = fmt::format("l={} p={} value={}", l, p, num(m.value));
                return std::fabs(m.value) <= 1e-12L && m.abs_error <= 1e-12L;
            });
        }
    }
    for (unsigned l = 1; l <= 6; ++l) {
        for (unsigned lp = 1; lp <= 6; ++lp) {
            record(out, "fourier", "orthogonality", std::nullopt, [&](std::string& detail) {
                const RealApprox m = cosine_orthogonality(l, lp);
                const real expected = l == lp ? pi / 2 : 0;
                detail = fmt::format("l={} l'={} diff={}", l, lp, num(std::fabs(m.value - expected)));
                return std::fabs(m.value - expected) <= 1e-12L;
            });
        }
    }
    for (unsigned n = 0; n <= n_max; ++n) {
        record(out, "fourier", "route_equivalence", n,
               [&](std::string&) { return logsine_via_fourier(n) == logsine_symbolic(n); });
    }
}

} // namespace

std::vector<CheckResult> run_suite(std::string_view suite, unsigned n_max, real tolerance) {
    const auto known = suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
        throw std::invalid_argument("unknown suite: " + std::string(suite));
    }
    Results all;
    for (const std::string& name : known) {
        if (name == "all" || (suite != "all" && suite != name)) {
            continue;
        }
        Results part;
        if (name == "recurrence") recurrence_suite(part, n_max);
        if (name == "contour") contour_suite(part, n_max, tolerance);
        if (name == "identities") identities_suite(part, n_max);
        if (name == "fourier") fourier_suite(part, n_max);
        std::stable_sort(part.begin(), part.end(), [](const CheckResult& a, const CheckResult& b) {
            const long an = a.n ? static_cast<long>(*a.n) : -1;
            const long bn = b.n ? static_cast<long>(*b.n) : -1;
            return an != bn ? an < bn : a.check < b.check;
        });
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

} // namespace logsine::cli
