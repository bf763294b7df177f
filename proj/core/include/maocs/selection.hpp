#pragma once

#include <utility>
#include <vector>

#include "maocs/corner.hpp"
#include "maocs/core.hpp"

namespace maocs {

/// Componentwise minimum of a reference set; approximates the ideal point.
struct IdealEstimate {
    std::vector<double> values;
};

/// Objectives affinely mapped so the ideal sits at 0 and the nadir at 1.
struct NormalizedObjectives {
    std::vector<double> values;
};

IdealEstimate estimate_ideal(const Population& pop);

/// (f_i - z*_i) / (znad_i - z*_i), denominator floored at 1e-12.
NormalizedObjectives normalize(const ObjectiveVector& objectives, const IdealEstimate& ideal,
                               const NadirEstimate& nadir);

/// Inverse of normalize for non-degenerate denominators.
ObjectiveVector denormalize(const NormalizedObjectives& normalized, const IdealEstimate& ideal,
                            const NadirEstimate& nadir);

/// Angle in [0, pi] between two normalized objective vectors. Zero-norm
/// inputs are guarded; the result is invariant under positive scaling.
double angle(const NormalizedObjectives& a, const NormalizedObjectives& b);

/// Greedy maximin angle selection. The corner members seed the selected set;
/// then the candidate whose smallest angle to the selected set is largest
/// joins, until n members are selected. Candidates are given as normalized
/// vectors, seeds as indices into them. Returns indices in selection order
/// (seeds first).
std::vector<std::size_t> angle_select_indices(const std::vector<NormalizedObjectives>& candidates,
                                              const std::vector<std::size_t>& seeds,
                                              std::size_t n);

/// Population-level ABS: Pc members are located inside q by exact
/// decision+objective match (first unused match) and seed the selection.
Population abs_select(const Population& q, const Population& pc, const IdealEstimate& ideal,
                      const NadirEstimate& nadir, std::size_t n);

/// Splits a nondominated set by the nadir estimate: members with some
/// objective strictly above it land outside, the rest inside.
std::pair<Population, Population> partition_inside_outside(const Population& pop,
                                                           const NadirEstimate& nadir);

/// The k candidates with the smallest Euclidean distance to the ideal point
/// in raw objective space, ties broken by original index.
std::vector<std::size_t> closest_to_ideal_indices(const Population& candidates,
                                                  const IdealEstimate& ideal, std::size_t k);
Population closest_to_ideal_fill(const Population& candidates, const IdealEstimate& ideal,
                                 std::size_t k);

struct DsaOptions {
    /// Recompute the ideal point from the current nondominated set instead of
    /// keeping a running minimum across generations.
    bool recompute_ideal = false;
    /// Translate objectives by the ideal estimate before the corner axis
    /// test (extension, not default behavior).
    bool translate_corner_by_ideal = false;
};

struct DsaResult {
    Population population;  // exactly n members
    Population corners;     // corner set of the nondominated front
    NadirEstimate nadir;    // nadir estimate used for the space division
};

/// Environmental selection over a merged population: dominance truncation,
/// inside/outside division by the nadir estimate, then angle-based maximin
/// selection or distance-to-ideal fills as the front size dictates.
/// `ideal` carries state across calls (running componentwise minimum); pass
/// it empty on the first call.
DsaResult dsa_select(const Population& merged, std::size_t n, IdealEstimate& ideal,
                     const DsaOptions& options = {});

}  // namespace maocs
