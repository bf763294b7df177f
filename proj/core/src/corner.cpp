#include "maocs/corner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maocs {

DirectionVector DirectionVector::axis(std::size_t m, std::size_t i) {
    DirectionVector v;
    v.components.assign(m, 0.0);
    v.components.at(i) = 1.0;
    return v;
}

DirectionVector DirectionVector::axis_complement(std::size_t m, std::size_t i) {
    DirectionVector v;
    v.components.assign(m, 1.0);
    v.components.at(i) = 0.0;
    return v;
}

void DirectionVector::validate() const {
    bool positive = false;
    for (double c : components) {
        if (!std::isfinite(c) || c < 0.0) {
            throw std::invalid_argument("DirectionVector: components must be finite and >= 0");
        }
        if (c > 0.0) positive = true;
    }
    if (!positive) {
        throw std::invalid_argument("DirectionVector: at least one component must be positive");
    }
}

double weighted_sum(const ObjectiveVector& objectives, const DirectionVector& lambda) {
    if (objectives.size() != lambda.components.size()) {
        throw std::invalid_argument("weighted_sum: length mismatch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        total += lambda.components[i] * objectives[i];
    }
    return total;
}

double perpendicular_distance(const ObjectiveVector& a, const DirectionVector& b) {
    if (a.size() != b.components.size()) {
        throw std::invalid_argument("perpendicular_distance: length mismatch");
    }
    double bb = 0.0;
    double ab = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bb += b.components[i] * b.components[i];
        ab += a[i] * b.components[i];
    }
    if (bb <= 0.0) {
        throw std::invalid_argument("perpendicular_distance: direction has zero norm");
    }
    const double t = ab / bb;
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double r = a[i] - t * b.components[i];
        d2 += r * r;
    }
    return std::sqrt(std::max(d2, 0.0));
}

namespace {

std::size_t objective_count(const Population& pop, const char* op) {
    if (pop.empty()) throw std::invalid_argument(std::string(op) + ": empty population");
    return pop.front().objectives.size();
}

void append_unique(std::vector<std::size_t>& indices, std::size_t idx) {
    if (std::find(indices.begin(), indices.end(), idx) == indices.end()) {
        indices.push_back(idx);
    }
}

}  // namespace

std::vector<std::size_t> corner_axis_indices(const Population& pop) {
    const std::size_t m = objective_count(pop, "corner_axis_set");
    detail::require_finite_objectives(pop, "corner_axis_set");
    std::vector<std::size_t> result;
    for (std::size_t axis = 0; axis < m; ++axis) {
        // Distance to axis e^i is the norm of the other components.
        std::size_t best = 0;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            const auto& f = pop[i].objectives;
            double d2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j != axis) d2 += f[j] * f[j];
            }
            if (d2 < best_d2) {
                best_d2 = d2;
                best = i;
            }
        }
        append_unique(result, best);
    }
    return result;
}

Population corner_axis_set(const Population& pop) {
    Population out;
    for (std::size_t i : corner_axis_indices(pop)) out.push_back(pop[i]);
    return out;
}

std::vector<std::size_t> corner_min_indices(const Population& pop) {
    const std::size_t m = objective_count(pop, "corner_min_set");
    detail::require_finite_objectives(pop, "corner_min_set");
    std::vector<std::size_t> result;
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pop.size(); ++i) {
            if (pop[i].objectives[obj] < pop[best].objectives[obj]) best = i;
        }
        append_unique(result, best);
    }
    return result;
}

Population corner_min_set(const Population& pop) {
    Population out;
    for (std::size_t i : corner_min_indices(pop)) out.push_back(pop[i]);
    return out;
}

NadirEstimate estimate_nadir(const Population& pop) {
    const std::size_t m = objective_count(pop, "estimate_nadir");
    NadirEstimate nadir;
    nadir.values.assign(m, -std::numeric_limits<double>::infinity());
    for (const auto& s : pop) {
        for (std::size_t i = 0; i < m; ++i) {
            nadir.values[i] = std::max(nadir.values[i], s.objectives[i]);
        }
    }
    return nadir;
}

std::vector<std::size_t> corner_search_indices(const Population& pop,
                                               const std::vector<double>* translate_by) {
    const std::size_t m = objective_count(pop, "corner_search");

    Population working;
    const Population* view = &pop;
    if (translate_by != nullptr) {
        if (translate_by->size() != m) {
            throw std::invalid_argument("corner_search: translation vector length mismatch");
        }
        working = pop;
        for (auto& s : working) {
            for (std::size_t i = 0; i < m; ++i) s.objectives[i] -= (*translate_by)[i];
        }
        view = &working;
    }

    std::vector<std::size_t> corners = corner_axis_indices(*view);

    // Nadir from the axis corners alone; per-objective minimizers join the
    // corner set only where they stick out beyond it.
    Population axis_members;
    for (std::size_t i : corners) axis_members.push_back(pop[i]);
    const NadirEstimate nadir = estimate_nadir(axis_members);

    for (std::size_t idx : corner_min_indices(pop)) {
        const auto& f = pop[idx].objectives;
        for (std::size_t i = 0; i < m; ++i) {
            if (f[i] > nadir.values[i]) {
                append_unique(corners, idx);
                break;
            }
        }
    }
    return corners;
}

Population corner_search(const Population& pop, const std::vector<double>* translate_by) {
    Population out;
    for (std::size_t i : corner_search_indices(pop, translate_by)) out.push_back(pop[i]);
    return out;
}

}  // namespace maocs
