// Serial reference versus OpenMP for the two data-parallel kernels: the
// H pre-scan inside cheeger_constant and the hourglass D grid.

#include "cheeger/solver.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace cheeger;

namespace {

Execution exec_of(const benchmark::State& st) {
    return st.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_DoubleConeCheeger(benchmark::State& st) {
    const DomainSpec d = make_double_cone(1, 3, std::numbers::pi / 3);
    SolverConfig cfg;
    cfg.exec = exec_of(st);
    for (auto _ : st)
        benchmark::DoNotOptimize(cheeger_constant(d, cfg).h);
    st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_DoubleConeCheeger)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HourglassCheeger(benchmark::State& st) {
    const DomainSpec d = make_hourglass(3, 2, 0.3, 0.6);
    SolverConfig cfg;
    cfg.exec = exec_of(st);
    for (auto _ : st)
        benchmark::DoNotOptimize(cheeger_constant(d, cfg).h);
    st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_HourglassCheeger)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HourglassSweepCoarse(benchmark::State& st) {
    SweepConfig cfg;
    cfg.D_min = 0.2;
    cfg.D_max = 1.8;
    cfg.step = 0.2;
    cfg.bisect_tol = 1e-2;
    cfg.solver.exec = exec_of(st);
    for (auto _ : st)
        benchmark::DoNotOptimize(hourglass_sweep(3, 2, 0.3, cfg).critical.size());
    st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_HourglassSweepCoarse)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
