#include "calderon/forward.hpp"
#include "calderon/measurement.hpp"
#include "calderon/pcn.hpp"
#include "calderon/prior.hpp"
#include "calderon/rng.hpp"

#include <benchmark/benchmark.h>

#include <memory>

using namespace calderon;

namespace {

// J = K = arg, on a mesh of width 0.04
void BM_AssembleDtn(benchmark::State& state)
{
    const int J = static_cast<int>(state.range(0));
    const ForwardSolver solver(build_mesh(0.04), J);
    const TriangleConductivity gamma = solver.sample(concentric_conductivity(2.0, 0.5));
    for (auto _ : state) benchmark::DoNotOptimize(solver.assemble(gamma, J, J, 0.0));
}
BENCHMARK(BM_AssembleDtn)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_MeshBuild(benchmark::State& state)
{
    const double h = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_mesh(h));
}
BENCHMARK(BM_MeshBuild)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

// grid_n = arg, 16 modes per axis
void BM_PriorDraw(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const RescaledPrior prior(MaternSpec{6, 0.4, 1.0, 16}, n, 0.01, make_cutoff(0.5, 0.75, n));
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(prior.theta(prior.sampler().draw_white(rng)));
}
BENCHMARK(BM_PriorDraw)->Arg(33)->Arg(65)->Arg(129)->Unit(benchmark::kMicrosecond);

void BM_PcnStep(benchmark::State& state)
{
    const int J = static_cast<int>(state.range(0));
    auto solver = std::make_shared<ForwardSolver>(build_mesh(0.08), J);
    const OperatorMatrix truth = solver->assemble(solver->sample(concentric_conductivity(2.0, 0.5)), J, J, 0.0);
    const LikelihoodContext ctx{synth_spectral(truth, 0.01, 1), solver};
    const RescaledPrior prior(MaternSpec{6, 0.4, 1.0, 12}, 33, 0.01, make_cutoff(0.5, 0.75, 33));
    Rng rng(2);
    ChainState s = make_state(prior.sampler().draw_white(rng), ctx, prior);
    for (auto _ : state) s = pcn_step(s, 0.05, ctx, prior, rng);
    benchmark::DoNotOptimize(s.loglik);
}
BENCHMARK(BM_PcnStep)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
