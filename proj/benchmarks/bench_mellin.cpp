#include <benchmark/benchmark.h>

#include <thetaxi/asymptotics.hpp>
#include <thetaxi/mellin.hpp>

using namespace thetaxi;

static void BM_f_z(benchmark::State& state) {
    const PolePoint z(0.5, double(state.range(0)));
    const SpectralParameter s{Complex(0.6, 2.0)};
    const QuadratureConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(f_z(z, s, cfg));
}
BENCHMARK(BM_f_z)->Arg(2)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_f_z_termwise_tail(benchmark::State& state) {
    const PolePoint z(0.5, 3.0);
    QuadratureConfig cfg;
    cfg.tail_mode = TailMode::termwise_gamma;
    for (auto _ : state)
        benchmark::DoNotOptimize(f_z_segment(z, 0.6, z.y, kInfinity, cfg));
}
BENCHMARK(BM_f_z_termwise_tail);

static void BM_corrected_f_z(benchmark::State& state) {
    const PolePoint z(0.5, 40.0);
    const QuadratureConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(corrected_f_z(z, 0.75, cfg));
}
BENCHMARK(BM_corrected_f_z)->Unit(benchmark::kMillisecond);

static void BM_functional_residual(benchmark::State& state) {
    const PolePoint z(0.35, 1.9);
    const QuadratureConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(functional_equation_residual(z, Complex(0.8, 1.0), cfg));
}
BENCHMARK(BM_functional_residual)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
