#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maocs/core.hpp"
#include "maocs/rng.hpp"

namespace maocs {

/// Points sampled from (or standing in for) the true Pareto front.
using ReferenceFront = std::vector<ObjectiveVector>;

/// Mean Euclidean distance from each reference point to its nearest member
/// of `s`. Lower is better; zero iff every reference point appears in `s`.
double igd(const std::vector<ObjectiveVector>& s, const ReferenceFront& reference);

/// Exact dominated hypervolume for 2 or 3 objectives, bounded by the
/// reference point `r`. Points with any coordinate beyond r are ignored
/// (with a stderr warning); points touching r contribute zero volume.
double hv_exact(const std::vector<ObjectiveVector>& s, const ObjectiveVector& r);

struct HvEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// Monte-Carlo hypervolume: uniform samples over the box spanned by the
/// componentwise minimum of `s` and `r`; the hit fraction scales the box
/// volume. Deterministic given the stream.
HvEstimate hv_monte_carlo(const std::vector<ObjectiveVector>& s, const ObjectiveVector& r,
                          std::uint64_t n_samples, RngStream& rng);

/// Rescales `s` by the reference front's per-objective min/max so the front
/// spans [0, 1], and pairs it with the reference point (1.1, ..., 1.1).
std::pair<std::vector<ObjectiveVector>, ObjectiveVector> normalize_for_hv(
    const std::vector<ObjectiveVector>& s, const ReferenceFront& reference);

}  // namespace maocs
