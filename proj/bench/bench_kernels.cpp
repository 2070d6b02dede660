// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "levelone/graph.hpp"
#include "levelone/hw_crystal.hpp"
#include "levelone/onedim.hpp"

using namespace levelone;

namespace {

void BM_graph_serial(benchmark::State& s) {
    const auto c = restricted_crystal(4, 0);
    for (auto _ : s) benchmark::DoNotOptimize(build_graph_serial(c, {c.highest()}, static_cast<int>(s.range(0))));
}

void BM_graph_parallel(benchmark::State& s) {
    const auto c = restricted_crystal(4, 0);
    for (auto _ : s) benchmark::DoNotOptimize(build_graph(c, {c.highest()}, static_cast<int>(s.range(0))));
}

void BM_onedim_serial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(onedim_classify_serial(4, static_cast<int>(s.range(0))));
}

void BM_onedim_parallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(onedim_classify(4, static_cast<int>(s.range(0))));
}

void BM_serre_serial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(serre_sweep_serial(3, static_cast<int>(s.range(0))));
}

void BM_serre_parallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(serre_sweep(3, static_cast<int>(s.range(0))));
}

}  // namespace

BENCHMARK(BM_graph_serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graph_parallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_onedim_serial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_onedim_parallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serre_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serre_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
