#include <benchmark/benchmark.h>

#include "cvneg/fock.hpp"
#include "cvneg/negativity.hpp"
#include "cvneg/phase_space.hpp"

using namespace cvneg;

static void BM_DisplacementOp(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::displacement_op({0.4, 0.3}, cutoff));
}
BENCHMARK(BM_DisplacementOp)->Arg(20)->Arg(40);

static void BM_Squeeze2Op(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::squeeze2_op(0.5, cutoff));
}
BENCHMARK(BM_Squeeze2Op)->Arg(15)->Arg(30);

static void BM_BeamSplitterOp(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::beam_splitter_op(0.6, 0.0, cutoff));
}
BENCHMARK(BM_BeamSplitterOp)->Arg(15)->Arg(30);

static void BM_GaussianRhoOp(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    const auto omega = negativity::omega_from_lambda(
        phase_space::lambda_params(0.4, {0.1, 0, 0.1, 0, 1.0}));
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::gaussian_rho_op(omega, cutoff));
}
BENCHMARK(BM_GaussianRhoOp)->Arg(20)->Arg(30);

static void BM_LindbladEvolve(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    const auto rho0 = fock::tmsv_rho(0.4, cutoff);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            fock::lindblad_evolve(rho0, {0.1, 0, 0.1, 0, 1.0}, 100));
}
BENCHMARK(BM_LindbladEvolve)->Arg(15)->Arg(25);

static void BM_PtTraceNorm(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    const auto rho = fock::tmsv_rho(0.5, cutoff);
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::trace_norm(fock::partial_transpose(rho, 2)));
}
BENCHMARK(BM_PtTraceNorm)->Arg(20)->Arg(40);

static void BM_EnAnalytic(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            negativity::en_analytic(0.5, {0.2, 0.05, 0.2, 0.05, 1.0}));
}
BENCHMARK(BM_EnAnalytic);

static void BM_ConvolveWigner(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            phase_space::convolve_wigner(0.4, {0.15, 0, 0.1, 0, 0.9}, {0.3, 0.1},
                                         {-0.2, 0.4}));
}
BENCHMARK(BM_ConvolveWigner);

BENCHMARK_MAIN();
