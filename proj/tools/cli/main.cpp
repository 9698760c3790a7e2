// logsine: Bernoulli numbers, zeta values and log-sine integrals, with
// cross-checks between exact identities, closed forms and quadrature.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 a requested tolerance could not be certified.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "logsine/bernoulli.hpp"
#include "logsine/errors.hpp"
#include "logsine/logsine.hpp"
#include "logsine/zeta.hpp"
#include "render.hpp"
#include "suites.hpp"

namespace {

using logsine::real;
using logsine::cli::Format;
using nlohmann::ordered_json;

enum ExitCode : int { success = 0, verification_failed = 1, usage_error = 2, certification_failed = 3 };

struct RunConfig {
    double tolerance = 1e-10;
    int n_max = 10;
    std::string format = "plain";
    std::string suite = "all";
    bool deterministic = true; // always on; accepted for interface stability
};

void add_common_options(CLI::App& cmd, RunConfig& config) {
    cmd.add_option("--n-max", config.n_max, "Largest index to evaluate")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd.add_option("--tolerance", config.tolerance, "Target absolute error")
        ->check(CLI::PositiveNumber)
        ->envname("LOGSINE_TOLERANCE")
        ->capture_default_str();
    cmd.add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    cmd.add_flag("--deterministic", config.deterministic, "No-op; output is always deterministic");
}

int cmd_bernoulli(const RunConfig& config) {
    const auto table = logsine::bernoulli_table(static_cast<std::size_t>(config.n_max));
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k <= table.max_index(); ++k) {
        rows.push_back({{"k", k}, {"B", table[k].to_string()}});
    }
    logsine::cli::render(std::cout, rows, logsine::cli::parse_format(config.format));
    return success;
}

int cmd_zeta(const RunConfig& config) {
    if (config.n_max < 2) {
        std::cerr << "zeta: --n-max must be at least 2 (zeta(s) is listed for s = 2..n-max)\n";
        return usage_error;
    }
    const auto top = static_cast<unsigned>(config.n_max);
    const auto table = logsine::bernoulli_table(top);
    ordered_json rows = ordered_json::array();
    for (unsigned s = 2; s <= top; ++s) {
        const logsine::RealApprox z = logsine::zeta_numeric(s, config.tolerance);
        ordered_json row = {{"s", s},
                            {"value", static_cast<double>(z.value)},
                            {"abs_error", static_cast<double>(z.abs_error)}};
        if (s % 2 == 0) {
            const auto exact = logsine::zeta_even_exact(s / 2, table);
            row["exact"] = fmt::format("{} · pi^{}", exact.coefficient.to_string(), exact.pi_power);
        } else {
            row["exact"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    logsine::cli::render(std::cout, rows, logsine::cli::parse_format(config.format));
    return success;
}

int cmd_logsine(const RunConfig& config) {
    ordered_json rows = ordered_json::array();
    for (unsigned n = 0; n <= static_cast<unsigned>(config.n_max); ++n) {
        const auto form = logsine::logsine_symbolic(n);
        const logsine::RealApprox v = logsine::logsine_numeric(n, config.tolerance);
        rows.push_back({{"n", n},
                        {"value", static_cast<double>(v.value)},
                        {"abs_error", static_cast<double>(v.abs_error)},
                        {"symbolic", logsine::to_json(form)}});
    }
    logsine::cli::render(std::cout, rows, logsine::cli::parse_format(config.format));
    return success;
}

int cmd_verify(const RunConfig& config) {
    const auto results =
        logsine::cli::run_suite(config.suite, static_cast<unsigned>(config.n_max), config.tolerance);
    ordered_json rows = ordered_json::array();
    bool failed = false;
    bool uncertified = false;
    for (const auto& r : results) {
        ordered_json row = {{"pass", r.pass}, {"suite", r.suite}, {"check", r.check}};
        row["n"] = r.n ? ordered_json(*r.n) : ordered_json(nullptr);
        row["detail"] = r.detail;
        rows.push_back(std::move(row));
        if (!r.pass) {
            (r.certification_failure ? uncertified : failed) = true;
        }
    }
    logsine::cli::render(std::cout, rows, logsine::cli::parse_format(config.format));
    if (failed) {
        return verification_failed;
    }
    return uncertified ? certification_failed : success;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernoulli numbers, zeta values and log-sine integrals with independent cross-checks"};
    app.require_subcommand(1);

    RunConfig config;
    auto* bernoulli = app.add_subcommand("bernoulli", "Exact Bernoulli numbers B_0..B_{n-max}");
    auto* zeta = app.add_subcommand("zeta", "zeta(s) for s = 2..n-max, exact for even s");
    auto* logsine_cmd = app.add_subcommand("logsine", "Closed form of integral_0^pi x^n log(sin x) dx");
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    for (auto* cmd : {bernoulli, zeta, logsine_cmd, verify}) {
        add_common_options(*cmd, config);
    }
    verify->add_option("--suite", config.suite, "Suite to run")
        ->check(CLI::IsMember(logsine::cli::suite_names()))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? success : usage_error;
    }

    // CLI11 silently skips environment values that fail validation.
    if (const char* env = std::getenv("LOGSINE_TOLERANCE"); env != nullptr && *env != '\0') {
        auto* active = app.get_subcommands().front();
        if (active->get_option("--tolerance")->count() == 0 && config.tolerance != std::strtod(env, nullptr)) {
            std::cerr << "LOGSINE_TOLERANCE: expected a positive number, got '" << env << "'\n";
            return usage_error;
        }
    }

    try {
        if (*bernoulli) return cmd_bernoulli(config);
        if (*zeta) return cmd_zeta(config);
        if (*logsine_cmd) return cmd_logsine(config);
        if (*verify) return cmd_verify(config);
    } catch (const logsine::certification_error& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return certification_failed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}
