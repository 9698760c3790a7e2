#include <benchmark/benchmark.h>

#include "logsine/bernoulli.hpp"
#include "logsine/contour.hpp"
#include "logsine/fourier.hpp"
#include "logsine/logsine.hpp"
#include "logsine/quadrature.hpp"
#include "logsine/zeta.hpp"

namespace {

void BM_BernoulliTable(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logsine::bernoulli_table(n));
    }
}
BENCHMARK(BM_BernoulliTable)->Arg(50)->Arg(200);

void BM_ZetaNumeric(benchmark::State& state) {
    const auto s = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logsine::zeta_numeric(s, 1e-15L));
    }
}
BENCHMARK(BM_ZetaNumeric)->Arg(3)->Arg(14);

void BM_LogsineClosedForm(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logsine::logsine_numeric(n, 1e-10L));
    }
}
BENCHMARK(BM_LogsineClosedForm)->Arg(4)->Arg(12);

void BM_LogsineQuadrature(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logsine::integrate_logsine(n, {1e-10L}));
    }
}
BENCHMARK(BM_LogsineQuadrature)->Arg(4)->Arg(12);

void BM_ContourNull(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logsine::verify_null(n, 1e-10L));
    }
}
BENCHMARK(BM_ContourNull)->Arg(2)->Arg(10);

void BM_FourierRoute(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(logsine::logsine_via_fourier(n));
    }
}
BENCHMARK(BM_FourierRoute)->Arg(12);

} // namespace

BENCHMARK_MAIN();
