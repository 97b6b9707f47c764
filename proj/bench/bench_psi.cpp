// Serial vs OpenMP psi grid sums. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "mfh/psi_grid.hpp"

namespace {

constexpr double kTau = 2.5;

void BM_PsiSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mfh::meanfield::psi_sums_serial(n, kTau / n));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n / 2);
}

void BM_PsiParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mfh::meanfield::psi_sums_parallel(n, kTau / n));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n / 2);
    state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_PsiSerial)->Arg(250)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiParallel)->Arg(250)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
