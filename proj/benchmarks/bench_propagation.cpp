#include <benchmark/benchmark.h>

#include "floq/floquet.hpp"

using namespace floq;

namespace {

SystemSpec bench_system(int fock_dim) {
    BathSpec bath;
    bath.h = 1.0;
    bath.z = 0.1;
    bath.omega0 = 2.0 * M_PI;
    bath.modes = 60;
    return {2.0 * M_PI, FockSpace(fock_dim), bath};
}

void BM_RateGamma(benchmark::State& state) {
    BathSpec bath = bench_system(2).bath;
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_gamma(bath, t));
        t += 1e-4;
    }
}
BENCHMARK(BM_RateGamma);

void BM_MonodromyDiagonal(benchmark::State& state) {
    SystemSpec sys = bench_system(int(state.range(0)));
    PropagationConfig cfg{2000, false, 1e-6};
    for (auto _ : state) benchmark::DoNotOptimize(monodromy(sys, cfg));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MonodromyDiagonal)->Arg(10)->Arg(20)->Arg(30);

void BM_MonodromyDense(benchmark::State& state) {
    SystemSpec sys = bench_system(int(state.range(0)));
    GeneratorFn gen = [&](double t) { return liouvillian_at(sys, t); };
    PropagationConfig cfg{200, false, 1e-6};
    for (auto _ : state)
        benchmark::DoNotOptimize(propagate_map(gen, sys.space.dim, 1.0, 0.0, 1.0, cfg));
}
BENCHMARK(BM_MonodromyDense)->Arg(4)->Arg(8);

void BM_ExactEvolve(benchmark::State& state) {
    SystemSpec sys = bench_system(30);
    DensityMatrix rho0 = density_from_ket(cat_state(sys.space, 2.0));
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_exact(rho0, sys, t));
        t += 0.01;
    }
}
BENCHMARK(BM_ExactEvolve);

}  // namespace
