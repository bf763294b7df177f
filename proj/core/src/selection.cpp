#include "maocs/selection.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>

namespace maocs {

namespace {

constexpr double kDegenerateFloor = 1e-12;

std::size_t objective_count(const Population& pop, const char* op) {
    if (pop.empty()) throw std::invalid_argument(std::string(op) + ": empty population");
    return pop.front().objectives.size();
}

double distance_to_ideal(const ObjectiveVector& f, const IdealEstimate& ideal) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double r = f[i] - ideal.values[i];
        d2 += r * r;
    }
    return std::sqrt(d2);
}

}  // namespace

IdealEstimate estimate_ideal(const Population& pop) {
    const std::size_t m = objective_count(pop, "estimate_ideal");
    IdealEstimate ideal;
    ideal.values.assign(m, std::numeric_limits<double>::infinity());
    for (const auto& s : pop) {
        for (std::size_t i = 0; i < m; ++i) {
            ideal.values[i] = std::min(ideal.values[i], s.objectives[i]);
        }
    }
    return ideal;
}

NormalizedObjectives normalize(const ObjectiveVector& objectives, const IdealEstimate& ideal,
                               const NadirEstimate& nadir) {
    if (objectives.size() != ideal.values.size() || objectives.size() != nadir.values.size()) {
        throw std::invalid_argument("normalize: length mismatch");
    }
    NormalizedObjectives out;
    out.values.resize(objectives.size());
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        const double range = std::max(nadir.values[i] - ideal.values[i], kDegenerateFloor);
        out.values[i] = (objectives[i] - ideal.values[i]) / range;
    }
    return out;
}

ObjectiveVector denormalize(const NormalizedObjectives& normalized, const IdealEstimate& ideal,
                            const NadirEstimate& nadir) {
    ObjectiveVector out(normalized.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double range = std::max(nadir.values[i] - ideal.values[i], kDegenerateFloor);
        out[i] = ideal.values[i] + normalized.values[i] * range;
    }
    return out;
}

double angle(const NormalizedObjectives& a, const NormalizedObjectives& b) {
    if (a.values.size() != b.values.size()) {
        throw std::invalid_argument("angle: length mismatch");
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        dot += a.values[i] * b.values[i];
        na += a.values[i] * a.values[i];
        nb += b.values[i] * b.values[i];
    }
    const double denom =
        std::max(std::sqrt(na), kDegenerateFloor) * std::max(std::sqrt(nb), kDegenerateFloor);
    const double c = std::clamp(dot / denom, -1.0, 1.0);
    return std::acos(c);
}

std::vector<std::size_t> angle_select_indices(const std::vector<NormalizedObjectives>& candidates,
                                              const std::vector<std::size_t>& seeds,
                                              std::size_t n) {
    if (seeds.size() > n) {
        throw ConfigError("angle selection: more seed corners than selection slots");
    }
    if (candidates.size() < n) {
        throw std::invalid_argument("angle selection: fewer candidates than selection slots");
    }

    std::vector<std::size_t> selected = seeds;
    std::vector<bool> in_selected(candidates.size(), false);
    for (std::size_t s : seeds) in_selected.at(s) = true;

    // min angle from each remaining candidate to the selected set
    std::vector<double> theta(candidates.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (in_selected[i]) continue;
        for (std::size_t s : selected) {
            theta[i] = std::min(theta[i], angle(candidates[i], candidates[s]));
        }
    }

    while (selected.size() < n) {
        std::size_t best = candidates.size();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (in_selected[i]) continue;
            if (best == candidates.size() || theta[i] > theta[best]) best = i;
        }
        selected.push_back(best);
        in_selected[best] = true;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (in_selected[i]) continue;
            theta[i] = std::min(theta[i], angle(candidates[i], candidates[best]));
        }
    }
    return selected;
}

Population abs_select(const Population& q, const Population& pc, const IdealEstimate& ideal,
                      const NadirEstimate& nadir, std::size_t n) {
    if (pc.size() > n) throw ConfigError("abs_select: |Pc| exceeds the selection size");
    if (q.size() < n) throw std::invalid_argument("abs_select: |Q| must be >= n");

    std::vector<NormalizedObjectives> normalized;
    normalized.reserve(q.size());
    for (const auto& s : q) normalized.push_back(normalize(s.objectives, ideal, nadir));

    std::vector<std::size_t> seeds;
    std::vector<bool> used(q.size(), false);
    for (const auto& corner : pc) {
        bool found = false;
        for (std::size_t i = 0; i < q.size() && !found; ++i) {
            if (!used[i] && q[i].objectives == corner.objectives &&
                q[i].decision == corner.decision) {
                seeds.push_back(i);
                used[i] = true;
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("abs_select: corner member not found in Q");
    }

    Population out;
    for (std::size_t i : angle_select_indices(normalized, seeds, n)) out.push_back(q[i]);
    return out;
}

std::pair<Population, Population> partition_inside_outside(const Population& pop,
                                                           const NadirEstimate& nadir) {
    const std::size_t m = objective_count(pop, "partition_inside_outside");
    if (nadir.values.size() != m) {
        throw std::invalid_argument("partition_inside_outside: nadir length mismatch");
    }
    Population inside, outside;
    for (const auto& s : pop) {
        bool out = false;
        for (std::size_t i = 0; i < m && !out; ++i) {
            if (s.objectives[i] > nadir.values[i]) out = true;
        }
        (out ? outside : inside).push_back(s);
    }
    return {std::move(inside), std::move(outside)};
}

std::vector<std::size_t> closest_to_ideal_indices(const Population& candidates,
                                                  const IdealEstimate& ideal, std::size_t k) {
    if (k > candidates.size()) {
        throw std::invalid_argument("closest_to_ideal_fill: k exceeds candidate count");
    }
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return distance_to_ideal(candidates[a].objectives, ideal) <
               distance_to_ideal(candidates[b].objectives, ideal);
    });
    order.resize(k);
    return order;
}

Population closest_to_ideal_fill(const Population& candidates, const IdealEstimate& ideal,
                                 std::size_t k) {
    Population out;
    for (std::size_t i : closest_to_ideal_indices(candidates, ideal, k)) {
        out.push_back(candidates[i]);
    }
    return out;
}

DsaResult dsa_select(const Population& merged, std::size_t n, IdealEstimate& ideal,
                     const DsaOptions& options) {
    if (merged.size() <= n) {
        throw std::invalid_argument("dsa_select: merged population must exceed the target size");
    }
    const std::size_t m = objective_count(merged, "dsa_select");

    const std::vector<std::size_t> front_indices = nondominated_index_set(merged);
    Population front;
    front.reserve(front_indices.size());
    std::vector<bool> in_front(merged.size(), false);
    for (std::size_t i : front_indices) {
        front.push_back(merged[i]);
        in_front[i] = true;
    }

    const IdealEstimate front_ideal = estimate_ideal(front);
    if (options.recompute_ideal || ideal.values.size() != m) {
        ideal = front_ideal;
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            ideal.values[i] = std::min(ideal.values[i], front_ideal.values[i]);
        }
    }

    std::vector<std::size_t> corner_indices = corner_search_indices(
        front, options.translate_corner_by_ideal ? &ideal.values : nullptr);
    if (corner_indices.size() > n) {
        std::cerr << "maocs: warning: corner set (" << corner_indices.size()
                  << ") exceeds population size " << n << "; truncating (N < 2m)\n";
        corner_indices.resize(n);
    }

    DsaResult result;
    for (std::size_t i : corner_indices) result.corners.push_back(front[i]);
    result.nadir = estimate_nadir(result.corners);

    if (front.size() > n) {
        // Inside/outside division. Corner members never exceed their own
        // componentwise maximum, so they always land inside.
        std::vector<std::size_t> inside, outside;
        for (std::size_t i = 0; i < front.size(); ++i) {
            bool out = false;
            for (std::size_t j = 0; j < m && !out; ++j) {
                if (front[i].objectives[j] > result.nadir.values[j]) out = true;
            }
            (out ? outside : inside).push_back(i);
        }

        if (inside.size() > n) {
            std::vector<NormalizedObjectives> normalized;
            normalized.reserve(inside.size());
            for (std::size_t i : inside) {
                normalized.push_back(normalize(front[i].objectives, ideal, result.nadir));
            }
            // Seed order must follow corner order, not inside order.
            std::vector<std::size_t> seeds;
            for (std::size_t c : corner_indices) {
                for (std::size_t p = 0; p < inside.size(); ++p) {
                    if (inside[p] == c) {
                        seeds.push_back(p);
                        break;
                    }
                }
            }
            for (std::size_t p : angle_select_indices(normalized, seeds, n)) {
                result.population.push_back(front[inside[p]]);
            }
        } else if (inside.size() < n) {
            Population outsiders;
            for (std::size_t i : outside) outsiders.push_back(front[i]);
            for (std::size_t i : inside) result.population.push_back(front[i]);
            for (std::size_t i :
                 closest_to_ideal_indices(outsiders, ideal, n - inside.size())) {
                result.population.push_back(outsiders[i]);
            }
        } else {
            for (std::size_t i : inside) result.population.push_back(front[i]);
        }
    } else if (front.size() < n) {
        Population rest;
        for (std::size_t i = 0; i < merged.size(); ++i) {
            if (!in_front[i]) rest.push_back(merged[i]);
        }
        result.population = front;
        for (std::size_t i : closest_to_ideal_indices(rest, ideal, n - front.size())) {
            result.population.push_back(rest[i]);
        }
    } else {
        result.population = front;
    }
    return result;
}

}  // namespace maocs
