#include <benchmark/benchmark.h>

#include <thetaxi/modular_forms.hpp>

using namespace thetaxi;

static void BM_theta(benchmark::State& state) {
    const UpperHalfPoint tau(0.3, double(state.range(0)) / 100.0);
    for (auto _ : state) benchmark::DoNotOptimize(theta(tau));
}
BENCHMARK(BM_theta)->Arg(5)->Arg(20)->Arg(100)->Arg(300);

static void BM_j_theta(benchmark::State& state) {
    const UpperHalfPoint tau(0.3, double(state.range(0)) / 100.0);
    for (auto _ : state) benchmark::DoNotOptimize(j_theta(tau));
}
BENCHMARK(BM_j_theta)->Arg(5)->Arg(20)->Arg(100)->Arg(300);

static void BM_reduce(benchmark::State& state) {
    const PolePoint z(37.3, 0.002);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_fundamental_domain(z));
}
BENCHMARK(BM_reduce);

BENCHMARK_MAIN();
