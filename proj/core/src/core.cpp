#include "maocs/core.hpp"

#include <cmath>

namespace maocs {

void ProblemDefinition::validate() const {
    if (num_objectives < 2) throw ConfigError("problem must have at least 2 objectives");
    if (num_variables < 1) throw ConfigError("problem must have at least 1 variable");
    if (lower.size() != static_cast<std::size_t>(num_variables) ||
        upper.size() != static_cast<std::size_t>(num_variables)) {
        throw ConfigError("bound vectors must have length D");
    }
    for (int i = 0; i < num_variables; ++i) {
        if (!(lower[i] < upper[i])) {
            throw ConfigError("problem bounds require lb[i] < ub[i]");
        }
    }
    if (!evaluate) throw ConfigError("problem has no evaluator");
}

bool dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
    if (u.size() != v.size() || u.size() < 2) {
        throw std::invalid_argument("dominates: objective vectors must have equal length >= 2");
    }
    bool strictly_better = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i]) || !std::isfinite(v[i])) {
            throw std::invalid_argument("dominates: objective values must be finite");
        }
        if (u[i] > v[i]) return false;
        if (u[i] < v[i]) strictly_better = true;
    }
    return strictly_better;
}

namespace detail {

void require_finite_objectives(const Population& pop, const char* op) {
    for (const auto& s : pop) {
        for (double f : s.objectives) {
            if (!std::isfinite(f)) {
                throw std::invalid_argument(std::string(op) + ": non-finite objective value");
            }
        }
    }
}

}  // namespace detail

std::vector<std::size_t> nondominated_index_set(const Population& pop) {
    if (pop.empty()) throw std::invalid_argument("nondominated_index_set: empty population");
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pop.size() && !dominated; ++j) {
            if (j != i && dominates(pop[j].objectives, pop[i].objectives)) dominated = true;
        }
        if (!dominated) result.push_back(i);
    }
    return result;
}

Population nondominated_filter(const Population& pop) {
    Population out;
    for (std::size_t i : nondominated_index_set(pop)) out.push_back(pop[i]);
    return out;
}

std::vector<int> nondominated_sort(const Population& pop) {
    if (pop.empty()) throw std::invalid_argument("nondominated_sort: empty population");
    const std::size_t n = pop.size();

    // Classic count-and-peel scheme: one O(n^2 m) pass records who dominates
    // whom, then fronts peel off in rank order.
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<int> remaining_dominators(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(pop[i].objectives, pop[j].objectives)) {
                dominated_by[i].push_back(j);
                ++remaining_dominators[j];
            } else if (dominates(pop[j].objectives, pop[i].objectives)) {
                dominated_by[j].push_back(i);
                ++remaining_dominators[i];
            }
        }
    }

    std::vector<int> rank(n, -1);
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < n; ++i) {
        if (remaining_dominators[i] == 0) front.push_back(i);
    }
    int level = 0;
    while (!front.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : front) {
            rank[i] = level;
            for (std::size_t j : dominated_by[i]) {
                if (--remaining_dominators[j] == 0) next.push_back(j);
            }
        }
        front = std::move(next);
        ++level;
    }
    return rank;
}

}  // namespace maocs
