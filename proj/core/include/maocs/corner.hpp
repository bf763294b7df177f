#pragma once

#include <vector>

#include "maocs/core.hpp"

namespace maocs {

/// Nonnegative direction vector with at least one positive component.
struct DirectionVector {
    std::vector<double> components;

    /// Unit vector along objective axis `i`.
    static DirectionVector axis(std::size_t m, std::size_t i);
    /// Complement of the axis vector: zero at `i`, one elsewhere.
    static DirectionVector axis_complement(std::size_t m, std::size_t i);

    void validate() const;
};

/// Componentwise maximum of a corner set; approximates the nadir point.
struct NadirEstimate {
    std::vector<double> values;
};

/// Sum of lambda_i * f_i.
double weighted_sum(const ObjectiveVector& objectives, const DirectionVector& lambda);

/// Euclidean distance from `a` to its projection onto span(b).
double perpendicular_distance(const ObjectiveVector& a, const DirectionVector& b);

/// For each objective axis, the member whose objective vector is closest (in
/// perpendicular distance) to that axis; ties break to the lowest index. The
/// returned indices are deduplicated, axis order preserved.
std::vector<std::size_t> corner_axis_indices(const Population& pop);
Population corner_axis_set(const Population& pop);

/// For each objective, the member attaining the minimum value; ties break to
/// the lowest index. Deduplicated, objective order preserved.
std::vector<std::size_t> corner_min_indices(const Population& pop);
Population corner_min_set(const Population& pop);

NadirEstimate estimate_nadir(const Population& pop);

/// Corner solution search over a nondominated set: the axis-nearest members,
/// plus any per-objective minimizer that exceeds the nadir estimated from the
/// axis-nearest members alone. At most 2m distinct members.
///
/// Distances are measured on raw objective values. `translate_by` (an ideal
/// point estimate) optionally shifts objectives before the axis-distance
/// test; this is an extension for fronts far from the origin, off by default.
std::vector<std::size_t> corner_search_indices(const Population& pop,
                                               const std::vector<double>* translate_by = nullptr);
Population corner_search(const Population& pop,
                         const std::vector<double>* translate_by = nullptr);

}  // namespace maocs
