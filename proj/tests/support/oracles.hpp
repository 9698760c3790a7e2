#pragma once

// Reference computations used by the tests. Nothing here calls into the code
// paths it is used to check.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "logsine/rational.hpp"

namespace oracle {

// Pascal's triangle, rows 0..n.
inline std::vector<std::vector<logsine::BigInt>> pascal(unsigned n) {
    std::vector<std::vector<logsine::BigInt>> rows(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
        rows[r].assign(r + 1, 1);
        for (unsigned k = 1; k < r; ++k) {
            rows[r][k] = rows[r - 1][k - 1] + rows[r - 1][k];
        }
    }
    return rows;
}

// Akiyama-Tanigawa; yields B_1 = +1/2, flipped here to the -1/2 convention.
inline std::vector<logsine::ExactRational> akiyama_tanigawa(unsigned max_index) {
    using logsine::ExactRational;
    std::vector<ExactRational> out;
    std::vector<ExactRational> a(max_index + 1);
    for (unsigned m = 0; m <= max_index; ++m) {
        a[m] = ExactRational(logsine::BigInt(1), logsine::BigInt(m + 1));
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = ExactRational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        }
        out.push_back(m == 1 ? -a[0] : a[0]);
    }
    return out;
}

// zeta(s) bracketed by the direct series plus the two integral tail bounds:
// S_N + (N+1)^{1-s}/(s-1) <= zeta(s) <= S_N + N^{1-s}/(s-1).
struct Bracket {
    long double lower;
    long double upper;
};

inline Bracket zeta_bracket(unsigned s, unsigned long terms) {
    long double sum = 0;
    for (unsigned long l = terms; l >= 1; --l) {
        sum += std::pow(static_cast<long double>(l), -static_cast<long double>(s));
    }
    const long double sm1 = s - 1.0L;
    return {sum + std::pow(static_cast<long double>(terms + 1), -sm1) / sm1,
            sum + std::pow(static_cast<long double>(terms), -sm1) / sm1};
}

// Captures stdout of a shell command and its exit status.
struct CommandResult {
    int exit_code = -1;
    std::string output;
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[4096];
    std::size_t n = 0;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, n);
    }
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace oracle

namespace frozen {

// integral_0^pi x^n log(sin x) dx, n = 0..12, from 30-digit adaptive
// Gauss-Legendre quadrature of the raw integrand (mpmath.quad, split at pi/2).
inline constexpr long double logsine_integral[] = {
    -2.177586090303602130501L, -3.420544231928558272424L, -9.052157654952006496524L,
    -25.77757877911929180755L, -74.80823833899030355386L, -219.0503724503367517874L,
    -645.3556341346939824653L, -1910.650557839363725863L, -5680.237230951665326865L,
    -16947.97195153432360019L, -50727.84088617394551966L, -152263.7186664474649688L,
    -458180.4469787218884459L,
};

// integral_0^inf y^n log(1 - e^{-2y}) dy, n = 0..8, same method.
inline constexpr long double vertical_leg[] = {
    -0.8224670334241132182362L, -0.3005142257898985713499L, -0.270580808427784547879L,
    -0.3888479081787637223743L, -0.7630072964883368547859L, -1.890654895091105300325L,
    -5.647935128613436909005L,  -19.72704023376349359635L,  -78.8283227913156742203L,
};

inline constexpr long double zeta3 = 1.2020569031595942854L;
inline constexpr long double zeta5 = 1.036927755143369926331L;
inline constexpr long double logsquared = 1.291928195012492507312L; // pi^3 / 24

} // namespace frozen
