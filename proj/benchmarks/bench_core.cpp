#include <benchmark/benchmark.h>

#include "maocs/core.hpp"
#include "maocs/corner.hpp"
#include "maocs/rng.hpp"
#include "maocs/selection.hpp"

namespace {

using namespace maocs;

Population random_population(std::size_t n, std::size_t m, std::uint64_t seed) {
    RngStream rng(seed);
    Population pop;
    pop.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Solution s;
        s.objectives.resize(m);
        for (auto& v : s.objectives) v = rng.uniform();
        pop.push_back(std::move(s));
    }
    return pop;
}

void BM_NondominatedFilter(benchmark::State& state) {
    const auto pop = random_population(state.range(0), state.range(1), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nondominated_index_set(pop));
    }
}
BENCHMARK(BM_NondominatedFilter)->Args({100, 3})->Args({400, 3})->Args({100, 10})->Args({400, 10});

void BM_NondominatedSort(benchmark::State& state) {
    const auto pop = random_population(state.range(0), state.range(1), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nondominated_sort(pop));
    }
}
BENCHMARK(BM_NondominatedSort)->Args({100, 3})->Args({400, 3})->Args({400, 10});

void BM_CornerSearch(benchmark::State& state) {
    const auto pop = nondominated_filter(random_population(state.range(0), state.range(1), 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(corner_search_indices(pop));
    }
}
BENCHMARK(BM_CornerSearch)->Args({200, 3})->Args({200, 10});

void BM_DsaSelect(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto merged = random_population(2 * n, state.range(1), 4);
    for (auto _ : state) {
        IdealEstimate ideal;
        benchmark::DoNotOptimize(dsa_select(merged, n, ideal));
    }
}
BENCHMARK(BM_DsaSelect)->Args({75, 3})->Args({250, 10});

}  // namespace
