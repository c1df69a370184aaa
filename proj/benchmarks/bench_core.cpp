#include <nlspec/cauchy.hpp>
#include <nlspec/galerkin.hpp>
#include <nlspec/roots.hpp>
#include <nlspec/series.hpp>

#include <benchmark/benchmark.h>

using namespace nlspec;

namespace {

OperatorContext smooth_set(int resolution)
{
    auto V = Potential::constant({0.5, 0.25}) + Potential::trigonometric(0.3, 1);
    return OperatorContext(V, Potential::trigonometric(0.4, 2), 0.3, 0.7, resolution);
}

void BM_CharFn(benchmark::State& state)
{
    auto ctx = smooth_set(static_cast<int>(state.range(0)));
    Wavenumber z{20, {0.01, 0.002}};
    for (auto _ : state)
        benchmark::DoNotOptimize(char_fn(ctx, z));
}
BENCHMARK(BM_CharFn)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_CharFnJet(benchmark::State& state)
{
    auto ctx = smooth_set(4096);
    int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(char_fn_jet(ctx, Wavenumber{20, 0.0}, order));
}
BENCHMARK(BM_CharFnJet)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_ShootingEigenvalue(benchmark::State& state)
{
    auto ctx = smooth_set(4096);
    for (auto _ : state)
        benchmark::DoNotOptimize(shooting_eigenvalue(ctx, 20));
}
BENCHMARK(BM_ShootingEigenvalue)->Unit(benchmark::kMillisecond);

void BM_CoefficientTable(benchmark::State& state)
{
    auto ctx = smooth_set(4096);
    int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_coefficient_table(ctx, 20, N));
}
BENCHMARK(BM_CoefficientTable)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GalerkinAssemble(benchmark::State& state)
{
    auto ctx = smooth_set(4096);
    int K = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble(ctx, K));
}
BENCHMARK(BM_GalerkinAssemble)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_GalerkinEigs(benchmark::State& state)
{
    auto ctx = smooth_set(4096);
    auto A = assemble(ctx, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dense_eigs(A));
}
BENCHMARK(BM_GalerkinEigs)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
