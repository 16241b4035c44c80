// Microbenchmarks for the hot evaluation paths. Run with
// --benchmark_filter=<regex> to select.

#include <benchmark/benchmark.h>

#include "sphmult/fourier.hpp"
#include "sphmult/special.hpp"
#include "sphmult/spherical.hpp"
#include "sphmult/transfer.hpp"

using namespace sphmult;

static void BM_GegenbauerNormalized(benchmark::State& state) {
    const long long n = state.range(0);
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gegenbauer_normalized(n, 0.5, x));
    }
}
BENCHMARK(BM_GegenbauerNormalized)->Arg(16)->Arg(256)->Arg(1600);

static void BM_BesselNormalized(benchmark::State& state) {
    double x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j_normalized(0.0, x));
    }
}
BENCHMARK(BM_BesselNormalized)->Arg(2)->Arg(11)->Arg(40);

static void BM_PhiSu2(benchmark::State& state) {
    auto g = SymmetricSpaceModel::su2();
    WeightPoint w({state.range(0)});
    CartanPoint H({0.8});
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi(g, w, H));
    }
}
BENCHMARK(BM_PhiSu2)->Arg(10)->Arg(640);

static void BM_GaussLegendreBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_legendre(n, 0.0, 1.0));
    }
}
BENCHMARK(BM_GaussLegendreBuild)->Arg(64)->Arg(200);

static void BM_ForwardTransform(benchmark::State& state) {
    auto g = SymmetricSpaceModel::su2();
    auto xi = make_smooth_bump(0.5);
    ForwardTransform F(g, xi, static_cast<int>(state.range(0)));
    CartanPoint Z({1.3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(F.at(Z));
    }
}
BENCHMARK(BM_ForwardTransform)->Arg(64)->Arg(200);

static void BM_BackwardMt(benchmark::State& state) {
    auto g = SymmetricSpaceModel::su2();
    auto xi = unit_mass(g, make_smooth_bump(0.5));
    const int order = static_cast<int>(state.range(0));
    BackwardQuad quad{order, order, order};
    CartanPoint Z({1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(backward_mt(g, xi, 80.0, Z, quad));
    }
}
BENCHMARK(BM_BackwardMt)->Arg(24)->Arg(64);

BENCHMARK_MAIN();
