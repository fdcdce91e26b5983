#include <benchmark/benchmark.h>

#include "jointgf/asymptotics.hpp"
#include "jointgf/joint.hpp"
#include "jointgf/oracle.hpp"
#include "jointgf/secondary.hpp"
#include "jointgf/shapes.hpp"

namespace {

using namespace jointgf;

void BM_SeriesMultiply(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto t = secondary_gf(1, 2, order);
    for (auto _ : state)
        benchmark::DoNotOptimize(t * t);
}
BENCHMARK(BM_SeriesMultiply)->Arg(64)->Arg(256);

void BM_SecondaryGf(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(secondary_gf(2, 2, order));
}
BENCHMARK(BM_SecondaryGf)->Arg(64)->Arg(256);

void BM_JointTotalGf(benchmark::State& state) {
    StructureParams params;
    params.sigma = params.tau = 1;
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(joint_total_gf(params, order));
}
BENCHMARK(BM_JointTotalGf)->Arg(50)->Arg(100);

void BM_JointRecurrence(benchmark::State& state) {
    const int s_max = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(joint_counts_by_recurrence(1, s_max));
}
BENCHMARK(BM_JointRecurrence)->Arg(200)->Arg(1000);

void BM_JointGfBox(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StructureParams params;
    params.sigma = params.tau = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(joint_gf(params, {n, n, n / 2 + 1}));
}
BENCHMARK(BM_JointGfBox)->Arg(6)->Arg(10);

void BM_EnumerateJoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StructureParams params;
    params.sigma = params.tau = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_joint_structures(n, n, params));
}
BENCHMARK(BM_EnumerateJoint)->Arg(4)->Arg(6);

void BM_DominantSingularity(benchmark::State& state) {
    set_real_precision(50);
    const int sigma = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dominant_singularity(sigma, 2));
}
BENCHMARK(BM_DominantSingularity)->Arg(1)->Arg(9);

} // namespace

BENCHMARK_MAIN();
