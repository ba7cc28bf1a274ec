#include <benchmark/benchmark.h>

#include "twistvol/sweep.hpp"

namespace {

twistvol::SweepSpec grid(int p, int steps)
{
    twistvol::SweepSpec spec;
    spec.p = p;
    spec.alpha = {0.3, 2.5, steps};
    spec.beta = {0.3, 2.5, steps};
    return spec;
}

void BM_SweepSerial(benchmark::State& state)
{
    const auto spec = grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(twistvol::sweep_serial(spec));
    state.SetItemsProcessed(state.iterations() * state.range(1) * state.range(1));
}

void BM_SweepParallel(benchmark::State& state)
{
    const auto spec = grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(twistvol::sweep_parallel(spec));
    state.SetItemsProcessed(state.iterations() * state.range(1) * state.range(1));
}

} // namespace

BENCHMARK(BM_SweepSerial)->Args({1, 6})->Args({2, 6})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Args({1, 6})->Args({2, 6})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
