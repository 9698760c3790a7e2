#pragma once

#include "logsine/logsine.hpp"
#include "logsine/real_approx.hpp"

namespace logsine {

/// Partial sums of the two series obtained from log(1 - e^(i theta)):
///   cosine: -sum cos(l theta) / l -> log(2 |sin(theta/2)|)
///   sine:   -sum sin(l theta) / l -> (theta - pi) / 2 on (0, 2 pi)
class FourierPartialSum {
public:
    enum class Kind { cosine, sine };

    /// Throws std::invalid_argument when terms == 0.
    FourierPartialSum(Kind kind, unsigned long terms);

    Kind kind() const { return kind_; }
    unsigned long terms() const { return terms_; }

    /// Rejects theta outside (0, 2 pi) or within 1e-9 of either end.
    real operator()(real theta) const;

    /// Limit the partial sums converge to at theta.
    real limit(real theta) const;

private:
    Kind kind_;
    unsigned long terms_;
};

inline constexpr real theta_exclusion_radius = 1e-9L;

real logsin_series_partial(real theta, unsigned long terms);
real sawtooth_series_partial(real theta, unsigned long terms);

/// (pi/4) sum_{l=1}^{terms} 1/l^2, converging to the log-squared integral pi^3/24.
real parseval_logsquared(unsigned long terms);

/// Power of theta left in the last integration-by-parts step for I_n
/// (n mod 2). Its integral against cos(2 l theta) over [0, pi] vanishes, so the
/// cadence drops it.
unsigned fourier_terminal_power(unsigned n);

/// I_n rebuilt by integrating theta^n against the cosine series term by term,
/// descending two powers of theta per cos -> sin -> cos couplet.
SymbolicLogSine logsine_via_fourier(unsigned n);

} // namespace logsine
