#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logsine/real_approx.hpp"

namespace logsine::cli {

struct CheckResult {
    std::string suite;
    std::string check;
    std::optional<unsigned> n;
    bool pass = false;
    // failed because a tolerance could not be certified, not because an identity broke
    bool certification_failure = false;
    std::string detail;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"recurrence", "contour", "identities", "fourier", "all"};
    return names;
}

/// Runs one suite (or all of them, in the order above) for indices up to n_max.
/// Results are ordered by suite, then n (unindexed checks first), then check name.
std::vector<CheckResult> run_suite(std::string_view suite, unsigned n_max, real tolerance);

} // namespace logsine::cli
