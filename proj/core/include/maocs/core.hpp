#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maocs/rng.hpp"

namespace maocs {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Raised by configuration parsing and validation; the CLI maps it to exit
/// code 1 (runtime failures map to exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Solution {
    DecisionVector decision;
    ObjectiveVector objectives;
    /// Function-evaluation counter value when this solution was evaluated.
    std::uint64_t birth_eval = 0;
};

/// Populations are plain ordered vectors; all ordering is deterministic given
/// the seed (no hash-order anywhere). The capacity target N lives in
/// AlgorithmConfig and is passed to the operations that need it.
using Population = std::vector<Solution>;

/// Evaluation contract for one optimization problem. `evaluate` must be pure;
/// `sample_front` is null when no analytic Pareto front is known.
struct ProblemDefinition {
    std::string name;
    int num_objectives = 0;  // m
    int num_variables = 0;   // D
    std::vector<double> lower;
    std::vector<double> upper;
    std::function<ObjectiveVector(const DecisionVector&)> evaluate;
    std::function<std::vector<ObjectiveVector>(std::size_t, RngStream&)> sample_front;

    void validate() const;
};

/// Pareto dominance: u dominates v iff u_i <= v_i for all i and u_j < v_j for
/// at least one j. Inputs must be equal-length (>= 2) and finite.
bool dominates(const ObjectiveVector& u, const ObjectiveVector& v);

/// Indices of the members not dominated by any other member, in original
/// order. Duplicate objective vectors never dominate each other, so all
/// copies survive.
std::vector<std::size_t> nondominated_index_set(const Population& pop);

/// The nondominated subset of `pop`, relative order preserved.
Population nondominated_filter(const Population& pop);

/// Rank of each member: rank 0 is the nondominated set, rank r the set that
/// becomes nondominated once ranks < r are removed.
std::vector<int> nondominated_sort(const Population& pop);

namespace detail {
void require_finite_objectives(const Population& pop, const char* op);
}

}  // namespace maocs
