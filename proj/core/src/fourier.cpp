#include "logsine/fourier.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace logsine {

FourierPartialSum::FourierPartialSum(Kind kind, unsigned long terms) : kind_(kind), terms_(terms) {
    if (terms == 0) {
        throw std::invalid_argument("FourierPartialSum: requires terms >= 1");
    }
}

namespace {

void require_open_period(real theta) {
    if (!(theta > theta_exclusion_radius) || !(theta < 2 * pi - theta_exclusion_radius)) {
        throw std::invalid_argument("Fourier series: theta must lie in (0, 2 pi), away from the endpoints");
    }
}

} // namespace

real FourierPartialSum::operator()(real theta) const {
    require_open_period(theta);
    real sum = 0;
    for (unsigned long l = 1; l <= terms_; ++l) {
        const real angle = l * theta;
        sum -= (kind_ == Kind::cosine ? std::cos(angle) : std::sin(angle)) / l;
    }
    return sum;
}

real FourierPartialSum::limit(real theta) const {
    require_open_period(theta);
    if (kind_ == Kind::cosine) {
        return std::log(2 * std::fabs(std::sin(theta / 2)));
    }
    return (theta - pi) / 2;
}

real logsin_series_partial(real theta, unsigned long terms) {
    return FourierPartialSum(FourierPartialSum::Kind::cosine, terms)(theta);
}

real sawtooth_series_partial(real theta, unsigned long terms) {
    return FourierPartialSum(FourierPartialSum::Kind::sine, terms)(theta);
}

real parseval_logsquared(unsigned long terms) {
    if (terms == 0) {
        throw std::invalid_argument("parseval_logsquared: requires terms >= 1");
    }
    real sum = 0;
    for (unsigned long l = 1; l <= terms; ++l) {
        const real lr = l;
        sum += 1 / (lr * lr);
    }
    return pi / 4 * sum;
}

unsigned fourier_terminal_power(unsigned n) { return n % 2; }

SymbolicLogSine logsine_via_fourier(unsigned n) {
    // With a = 2l, write J_m = integral_0^pi theta^m cos(a theta) d theta as
    // sum_j c[m][j] pi^(m-2j+1) a^(-2j). One cos -> sin -> cos couplet gives
    //   J_m = m pi^(m-1) / a^2 - m (m-1) / a^2 * J_(m-2),
    // the first term being the endpoint value from the sine beat. The chain
    // stops at J_0 or J_1, both zero.
    std::vector<ExactRational> moment; // moment[j-1] = c[m][j]
    for (unsigned m = fourier_terminal_power(n) + 2; m <= n; m += 2) {
        std::vector<ExactRational> next;
        next.reserve(moment.size() + 1);
        next.emplace_back(static_cast<long>(m));
        const ExactRational factor(-static_cast<long>(m) * static_cast<long>(m - 1));
        for (const ExactRational& c : moment) {
            next.push_back(factor * c);
        }
        moment = std::move(next);
    }

    // log(sin theta) = -log 2 - sum_l cos(2 l theta) / l, and
    // sum_l (1/l) (2l)^(-2j) = zeta(2j+1) / 4^j.
    SymbolicLogSine form;
    form.n = n;
    form.log2_coefficient = ExactRational(BigInt(-1), BigInt(n + 1));
    for (unsigned j = 1; j <= moment.size(); ++j) {
        const ExactRational c = -moment[j - 1] / ExactRational(BigInt(1) << (2 * j));
        form.zeta_terms.push_back({2 * j + 1, c, static_cast<int>(n - 2 * j + 1)});
    }
    return form;
}

} // namespace logsine
