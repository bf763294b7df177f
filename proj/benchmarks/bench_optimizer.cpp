#include <benchmark/benchmark.h>

#include "maocs/metrics.hpp"
#include "maocs/optimizer.hpp"
#include "maocs/problems.hpp"

namespace {

using namespace maocs;

ProblemDefinition dtlz2(int m) {
    ProblemSpec spec;
    spec.family = ProblemFamily::dtlz2;
    spec.num_objectives = m;
    return make_problem(spec);
}

void BM_GenerationStep(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ProblemDefinition problem = dtlz2(m);
    AlgorithmConfig config = AlgorithmConfig::defaults_for(m, problem.num_variables);
    config.seed = 11;
    Optimizer optimizer(problem, config);
    optimizer.initialize();
    for (auto _ : state) {
        optimizer.step();
    }
    state.SetItemsProcessed(state.iterations() * config.population_size);
}
BENCHMARK(BM_GenerationStep)->Arg(3)->Arg(5)->Arg(10);

void BM_Igd(benchmark::State& state) {
    ProblemSpec spec;
    spec.family = ProblemFamily::dtlz2;
    spec.num_objectives = 3;
    RngStream rng(12);
    const auto reference = true_pf_sample(spec, state.range(0), rng);
    const auto front = true_pf_sample(spec, 75, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(igd(front, reference));
    }
}
BENCHMARK(BM_Igd)->Arg(1000)->Arg(5000);

void BM_HvMonteCarlo(benchmark::State& state) {
    ProblemSpec spec;
    spec.family = ProblemFamily::dtlz2;
    spec.num_objectives = 3;
    RngStream rng(13);
    const auto front = true_pf_sample(spec, 75, rng);
    const ObjectiveVector reference_point(3, 1.1);
    std::uint64_t salt = 0;
    for (auto _ : state) {
        RngStream mc(mix_seed(14, salt++));
        benchmark::DoNotOptimize(hv_monte_carlo(front, reference_point, state.range(0), mc));
    }
}
BENCHMARK(BM_HvMonteCarlo)->Arg(10000)->Arg(100000);

}  // namespace
