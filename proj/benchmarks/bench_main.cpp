#include "hwnorm/analysis.hpp"

#include <benchmark/benchmark.h>

using namespace hwn;

namespace {

void BM_DecomposeSU(benchmark::State& state) {
    const GroupSpec g = GroupSpec::su(3, 3);
    const FiberSpec f = FiberSpec::su({2, 1, 0});
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_upto(g, f, N));
}
BENCHMARK(BM_DecomposeSU)->DenseRange(2, 8, 2);

void BM_DecomposeE6(benchmark::State& state) {
    const GroupSpec g = GroupSpec::e6();
    const FiberSpec f = FiberSpec::e6(2);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_upto(g, f, N));
}
BENCHMARK(BM_DecomposeE6)->DenseRange(2, 8, 2);

void BM_NormRatioBatch(benchmark::State& state) {
    const GroupSpec g = GroupSpec::sostar(5);
    const FiberSpec f = FiberSpec::sostar(FiberKind::SymDual, 2);
    const auto types = decompose_upto(g, f, static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& t : types) benchmark::DoNotOptimize(norm_ratio(g, f, t));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * types.size()));
}
BENCHMARK(BM_NormRatioBatch)->Arg(4)->Arg(8);

void BM_LittlewoodRichardson(benchmark::State& state) {
    const Partition outer{4, 3, 2, 1}, inner{2, 1, 0, 0}, weight{3, 2, 2, 0};
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(outer, inner, weight));
}
BENCHMARK(BM_LittlewoodRichardson);

void BM_GridScan(benchmark::State& state) {
    const GroupSpec g = GroupSpec::e7();
    const FiberSpec f = FiberSpec::scalar();
    for (auto _ : state) {
        const ScanTable table = build_scan_table(g, f, static_cast<int>(state.range(0)));
        int reducible = 0;
        for (int j = -12; j <= 4 * (g.p + 1); ++j) reducible += reducible_scan(table, Rat(j, 4)).reducible;
        benchmark::DoNotOptimize(reducible);
    }
}
BENCHMARK(BM_GridScan)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
