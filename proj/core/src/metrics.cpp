#include "maocs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

namespace maocs {

namespace {

void require_nonempty(const std::vector<ObjectiveVector>& pts, const char* what) {
    if (pts.empty()) throw std::invalid_argument(std::string(what) + ": empty point set");
}

/// Keeps only points within the box bounded by r; warns once per call if any
/// point falls outside.
std::vector<ObjectiveVector> clip_to_reference(const std::vector<ObjectiveVector>& s,
                                               const ObjectiveVector& r) {
    std::vector<ObjectiveVector> kept;
    kept.reserve(s.size());
    std::size_t dropped = 0;
    for (const auto& p : s) {
        if (p.size() != r.size()) {
            throw std::invalid_argument("hypervolume: point/reference length mismatch");
        }
        bool inside = true;
        for (std::size_t i = 0; i < p.size() && inside; ++i) {
            if (p[i] > r[i]) inside = false;
        }
        if (inside) {
            kept.push_back(p);
        } else {
            ++dropped;
        }
    }
    if (dropped > 0) {
        std::cerr << "maocs: warning: " << dropped
                  << " point(s) outside the hypervolume reference box were ignored\n";
    }
    return kept;
}

/// 2D sweep over the staircase of nondominated points.
double hv2(std::vector<std::pair<double, double>> pts, double r1, double r2) {
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());
    double volume = 0.0;
    double best_f2 = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> staircase;
    for (const auto& p : pts) {
        if (p.second < best_f2) {
            best_f2 = p.second;
            staircase.push_back(p);
        }
    }
    for (std::size_t i = 0; i < staircase.size(); ++i) {
        const double next_f1 = (i + 1 < staircase.size()) ? staircase[i + 1].first : r1;
        volume += (next_f1 - staircase[i].first) * (r2 - staircase[i].second);
    }
    return volume;
}

}  // namespace

double igd(const std::vector<ObjectiveVector>& s, const ReferenceFront& reference) {
    require_nonempty(s, "igd: solution set");
    require_nonempty(reference, "igd: reference front");
    double total = 0.0;
    for (const auto& ref : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : s) {
            if (p.size() != ref.size()) throw std::invalid_argument("igd: length mismatch");
            double d2 = 0.0;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                const double diff = p[i] - ref[i];
                d2 += diff * diff;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

double hv_exact(const std::vector<ObjectiveVector>& s, const ObjectiveVector& r) {
    require_nonempty(s, "hv_exact");
    const std::size_t m = r.size();
    if (m != 2 && m != 3) {
        throw std::invalid_argument("hv_exact supports 2 or 3 objectives; use hv_monte_carlo");
    }
    const std::vector<ObjectiveVector> pts = clip_to_reference(s, r);
    if (pts.empty()) return 0.0;

    if (m == 2) {
        std::vector<std::pair<double, double>> flat;
        flat.reserve(pts.size());
        for (const auto& p : pts) flat.emplace_back(p[0], p[1]);
        return hv2(std::move(flat), r[0], r[1]);
    }

    // Slice sweep along the third objective: between consecutive distinct f3
    // levels, the dominated area in the (f1, f2) plane is constant.
    std::vector<double> levels;
    levels.reserve(pts.size());
    for (const auto& p : pts) levels.push_back(p[2]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    double volume = 0.0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const double z0 = levels[k];
        const double z1 = (k + 1 < levels.size()) ? levels[k + 1] : r[2];
        std::vector<std::pair<double, double>> active;
        for (const auto& p : pts) {
            if (p[2] <= z0) active.emplace_back(p[0], p[1]);
        }
        volume += hv2(std::move(active), r[0], r[1]) * (z1 - z0);
    }
    return volume;
}

HvEstimate hv_monte_carlo(const std::vector<ObjectiveVector>& s, const ObjectiveVector& r,
                          std::uint64_t n_samples, RngStream& rng) {
    require_nonempty(s, "hv_monte_carlo");
    if (n_samples == 0) throw std::invalid_argument("hv_monte_carlo: n_samples must be positive");
    const std::size_t m = r.size();
    const std::vector<ObjectiveVector> pts = clip_to_reference(s, r);

    HvEstimate estimate;
    estimate.samples = n_samples;
    if (pts.empty()) return estimate;

    ObjectiveVector low(m, std::numeric_limits<double>::infinity());
    for (const auto& p : pts) {
        for (std::size_t i = 0; i < m; ++i) low[i] = std::min(low[i], p[i]);
    }
    double box_volume = 1.0;
    for (std::size_t i = 0; i < m; ++i) box_volume *= (r[i] - low[i]);
    if (box_volume <= 0.0) return estimate;

    ObjectiveVector sample(m);
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < n_samples; ++k) {
        for (std::size_t i = 0; i < m; ++i) sample[i] = rng.uniform(low[i], r[i]);
        for (const auto& p : pts) {
            bool dominates_sample = true;
            for (std::size_t i = 0; i < m && dominates_sample; ++i) {
                if (p[i] > sample[i]) dominates_sample = false;
            }
            if (dominates_sample) {
                ++hits;
                break;
            }
        }
    }
    const double p_hit = static_cast<double>(hits) / static_cast<double>(n_samples);
    estimate.value = p_hit * box_volume;
    estimate.std_error =
        std::sqrt(p_hit * (1.0 - p_hit) / static_cast<double>(n_samples)) * box_volume;
    return estimate;
}

std::pair<std::vector<ObjectiveVector>, ObjectiveVector> normalize_for_hv(
    const std::vector<ObjectiveVector>& s, const ReferenceFront& reference) {
    require_nonempty(s, "normalize_for_hv: solution set");
    require_nonempty(reference, "normalize_for_hv: reference front");
    const std::size_t m = reference.front().size();
    ObjectiveVector lo(m, std::numeric_limits<double>::infinity());
    ObjectiveVector hi(m, -std::numeric_limits<double>::infinity());
    for (const auto& p : reference) {
        if (p.size() != m) throw std::invalid_argument("normalize_for_hv: ragged reference front");
        for (std::size_t i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    std::vector<ObjectiveVector> normalized;
    normalized.reserve(s.size());
    for (const auto& p : s) {
        if (p.size() != m) throw std::invalid_argument("normalize_for_hv: length mismatch");
        ObjectiveVector q(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double range = std::max(hi[i] - lo[i], 1e-12);
            q[i] = (p[i] - lo[i]) / range;
        }
        normalized.push_back(std::move(q));
    }
    return {std::move(normalized), ObjectiveVector(m, 1.1)};
}

}  // namespace maocs
