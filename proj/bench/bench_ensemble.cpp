#include <benchmark/benchmark.h>

#include "phlab/basin.hpp"
#include "phlab/cones.hpp"
#include "phlab/gate.hpp"
#include "phlab/lyapunov.hpp"

using namespace phlab;

namespace {

const SystemSpec& fk_spec() {
    static const SystemSpec spec = [] {
        SystemSpec s;
        s.family = Family::Fk;
        s.k = 256;
        return with_defaults(s);
    }();
    return spec;
}

const SystemSpec& m3_spec() {
    static const SystemSpec spec = [] {
        SystemSpec s;
        s.family = Family::M3Glued;
        s.mode = Mode::Relaxed;
        s.delta0 = kRelaxedDelta0;
        s.k = 2;
        return with_defaults(s);
    }();
    return spec;
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_cone_invariance(benchmark::State& st) {
    const DynamicalSystem sys(fk_spec());
    for (auto _ : st) benchmark::DoNotOptimize(cone_invariance(sys, 0.5, 20000, 1, 0.9, exec_of(st)).pass);
    st.SetItemsProcessed(st.iterations() * 20000);
}

void BM_lyapunov_ensemble(benchmark::State& st) {
    const DynamicalSystem sys(fk_spec());
    for (auto _ : st) benchmark::DoNotOptimize(lyapunov_ensemble(sys, 16, 2000, 500, 1, exec_of(st)).size());
    st.SetItemsProcessed(st.iterations() * 16 * 2500);
}

void BM_basin_classify(benchmark::State& st) {
    const DynamicalSystem sys(m3_spec());
    BasinOptions opt;
    opt.window = 2000;
    opt.exec = exec_of(st);
    for (auto _ : st) benchmark::DoNotOptimize(basin_classify(sys, 16, 1, opt).size());
}

}  // namespace

// Argument 0 is the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_cone_invariance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_lyapunov_ensemble)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_basin_classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
