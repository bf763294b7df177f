#pragma once

#include <string>
#include <vector>

#include "maocs/core.hpp"
#include "maocs/rng.hpp"

namespace maocs {

/// Scalable test problems covering the Pareto-front geometries the optimizer
/// must handle: linear (dtlz1), concave (dtlz2), inverted (inverted-dtlz2),
/// badly scaled (scaled-dtlz2), degenerate (dtlz5), disconnected (dtlz7),
/// plus a tabular point-cloud pseudo-problem for exercising corner search on
/// hand-crafted clouds.
enum class ProblemFamily {
    dtlz1,
    dtlz2,
    inverted_dtlz2,
    scaled_dtlz2,
    dtlz5,
    dtlz7,
    tabular,
};

ProblemFamily parse_family(const std::string& name);
std::string family_name(ProblemFamily family);

struct ProblemSpec {
    ProblemFamily family = ProblemFamily::dtlz2;
    int num_objectives = 3;
    /// 0 means the DTLZ convention m - 1 + distance_vars.
    int num_variables = 0;
    int distance_vars = 5;
    /// Per-objective multipliers for scaled-dtlz2; empty means 10^i.
    std::vector<double> scale;
    /// Objective rows of a tabular pseudo-problem.
    std::vector<ObjectiveVector> table;
    std::string source_path;

    int resolved_variables() const;
    std::vector<double> resolved_scale() const;
    void validate() const;
};

/// Pure evaluation of a decision vector; DTLZ variables live in [0, 1],
/// tabular decisions select a row index.
ObjectiveVector evaluate(const ProblemSpec& spec, const DecisionVector& x);

/// n points on the analytic Pareto front (simplex-lattice constructions;
/// dtlz7 enumerates its disconnected optimal regions). Tabular problems have
/// no analytic front.
std::vector<ObjectiveVector> true_pf_sample(const ProblemSpec& spec, std::size_t n,
                                            RngStream& rng);

/// Parses the tabular point format: one whitespace- (or comma-) separated
/// row of decimal numbers per line, `#` starts a comment line.
std::vector<ObjectiveVector> load_tabular_points(const std::string& path);

/// Wraps a tabular file as a pseudo-problem whose decision is a row selector.
ProblemSpec load_tabular_problem(const std::string& path);

/// The table rows of a tabular problem as an already-evaluated population.
Population table_as_population(const ProblemSpec& spec);

/// Materializes the evaluation contract for the optimizer.
ProblemDefinition make_problem(const ProblemSpec& spec);

}  // namespace maocs
