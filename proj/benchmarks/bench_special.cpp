#include <benchmark/benchmark.h>

#include <thetaxi/special_functions.hpp>

using namespace thetaxi;

static void BM_gamma(benchmark::State& state) {
    const Complex s(0.75, 12.5);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_fn(s));
}
BENCHMARK(BM_gamma);

static void BM_zeta(benchmark::State& state) {
    const Complex s(0.5, double(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(riemann_zeta(s));
}
BENCHMARK(BM_zeta)->Arg(1)->Arg(10)->Arg(40);

static void BM_polylog(benchmark::State& state) {
    const int ell = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(polylog_unit_circle(ell, 0.37));
}
BENCHMARK(BM_polylog)->Arg(1)->Arg(2)->Arg(6);

static void BM_incomplete_gamma(benchmark::State& state) {
    const Complex s(0.3, 1.1);
    const double y = double(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(upper_incomplete_gamma(s, y));
}
BENCHMARK(BM_incomplete_gamma)->Arg(2)->Arg(40)->Arg(400);

static void BM_xi_via_theta(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(xi_via_theta(Complex(0.4, 1.5), 1.0));
}
BENCHMARK(BM_xi_via_theta);

BENCHMARK_MAIN();
