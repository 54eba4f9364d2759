#include <benchmark/benchmark.h>

#include "floq/analysis.hpp"

using namespace floq;

namespace {

void BM_WignerPoint(benchmark::State& state) {
    FockSpace space(int(state.range(0)));
    DensityMatrix rho = density_from_ket(cat_state(space, 1.0, 1e-4));
    WignerEvaluator eval(space, 4.0);
    Complex alpha(1.3, -0.8);
    for (auto _ : state) benchmark::DoNotOptimize(eval.at(rho, alpha));
}
BENCHMARK(BM_WignerPoint)->Arg(10)->Arg(30);

void BM_WignerField(benchmark::State& state) {
    FockSpace space(15);
    DensityMatrix rho = density_from_ket(cat_state(space, 1.0, 1e-4));
    PhaseGrid grid{-4.0, 4.0, -4.0, 4.0, int(state.range(0)), int(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(wigner(rho, grid, 1));
}
BENCHMARK(BM_WignerField)->Arg(21)->Arg(41);

}  // namespace

BENCHMARK_MAIN();
