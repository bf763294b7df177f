#include "maocs/variation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maocs {

namespace {

void require_within_bounds(const DecisionVector& x, const std::vector<double>& lower,
                           const std::vector<double>& upper, const char* op) {
    if (x.size() != lower.size() || x.size() != upper.size()) {
        throw std::invalid_argument(std::string(op) + ": decision/bounds length mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lower[i] || x[i] > upper[i]) {
            throw std::invalid_argument(std::string(op) + ": decision component out of bounds");
        }
    }
}

double clamp_to(double v, double lo, double hi) { return std::clamp(v, lo, hi); }

}  // namespace

SwitchState make_switch_state(double delta0, int learning_period, double threshold) {
    if (learning_period < 1) throw std::invalid_argument("learning period must be >= 1");
    if (threshold <= 0.0) throw std::invalid_argument("switch threshold must be positive");
    SwitchState state;
    state.delta = delta0;
    state.learning_period = learning_period;
    state.threshold = threshold;
    return state;
}

double nadir_drift(const std::vector<double>& current, const std::vector<double>& past) {
    if (current.size() != past.size()) {
        throw std::invalid_argument("nadir_drift: length mismatch");
    }
    double drift = 0.0;
    for (std::size_t i = 0; i < current.size(); ++i) {
        const double denom = std::max(std::abs(past[i]), 1e-12);
        drift = std::max(drift, std::abs(current[i] - past[i]) / denom);
    }
    return drift;
}

void update_switch(SwitchState& state, int t, const NadirEstimate& current_nadir) {
    state.nadir_history.emplace_back(t, current_nadir.values);
    while (state.nadir_history.size() >
           static_cast<std::size_t>(state.learning_period) + 1) {
        state.nadir_history.pop_front();
    }
    if (state.switched || t < state.learning_period) return;

    const auto& oldest = state.nadir_history.front();
    if (oldest.first != t - state.learning_period) return;  // history not yet full
    if (nadir_drift(current_nadir.values, oldest.second) < state.threshold) {
        state.delta = 1.0 - state.delta;
        state.switched = true;
    }
}

double sbx_spread(double u, double eta_c) {
    if (u <= 0.5) return std::pow(2.0 * u, 1.0 / (eta_c + 1.0));
    return std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta_c + 1.0));
}

std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1,
                                                        const DecisionVector& p2, double eta_c,
                                                        double pc,
                                                        const std::vector<double>& lower,
                                                        const std::vector<double>& upper,
                                                        RngStream& rng) {
    if (eta_c <= 0.0) throw std::invalid_argument("sbx_crossover: eta_c must be positive");
    require_within_bounds(p1, lower, upper, "sbx_crossover");
    require_within_bounds(p2, lower, upper, "sbx_crossover");

    DecisionVector c1 = p1;
    DecisionVector c2 = p2;
    if (rng.uniform() < pc) {
        for (std::size_t i = 0; i < p1.size(); ++i) {
            double beta = sbx_spread(rng.uniform(), eta_c);
            if (rng.uniform() < 0.5) beta = -beta;
            if (rng.uniform() < 0.5) beta = 1.0;  // leave this variable unchanged
            const double mean = 0.5 * (p1[i] + p2[i]);
            const double half_diff = 0.5 * (p1[i] - p2[i]);
            c1[i] = clamp_to(mean + beta * half_diff, lower[i], upper[i]);
            c2[i] = clamp_to(mean - beta * half_diff, lower[i], upper[i]);
        }
    }
    return {std::move(c1), std::move(c2)};
}

double polynomial_offset(double x, double lower, double upper, double u, double eta_m) {
    const double range = upper - lower;
    if (u <= 0.5) {
        const double rel = (x - lower) / range;
        const double inner = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - rel, eta_m + 1.0);
        return (std::pow(inner, 1.0 / (eta_m + 1.0)) - 1.0) * range;
    }
    const double rel = (upper - x) / range;
    const double inner =
        2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - rel, eta_m + 1.0);
    return (1.0 - std::pow(inner, 1.0 / (eta_m + 1.0))) * range;
}

DecisionVector polynomial_mutation(const DecisionVector& x, double eta_m, double pm,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, RngStream& rng) {
    require_within_bounds(x, lower, upper, "polynomial_mutation");
    DecisionVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (rng.uniform() < pm) {
            const double offset = polynomial_offset(out[i], lower[i], upper[i], rng.uniform(), eta_m);
            out[i] = clamp_to(out[i] + offset, lower[i], upper[i]);
        }
    }
    return out;
}

double annealed_step(double rand_draw, std::uint64_t fe, std::uint64_t max_fe) {
    if (max_fe == 0) throw std::invalid_argument("annealed_step: max_fe must be positive");
    const double progress = static_cast<double>(fe) / static_cast<double>(max_fe);
    const double alpha = 0.7 * (-(1.0 - progress));
    return 0.5 * (rand_draw - 0.5) * (1.0 - std::pow(rand_draw, alpha));
}

DecisionVector exploitative_mutate(const DecisionVector& x, std::uint64_t fe,
                                   std::uint64_t max_fe, double pm,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, RngStream& rng) {
    if (max_fe == 0) throw std::invalid_argument("exploitative_mutate: max_fe must be positive");
    require_within_bounds(x, lower, upper, "exploitative_mutate");
    DecisionVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (rng.uniform() < pm) {
            const double step = annealed_step(rng.uniform(), fe, max_fe);
            out[i] = clamp_to(out[i] + step * (upper[i] - lower[i]), lower[i], upper[i]);
        }
    }
    return out;
}

std::vector<DecisionVector> reproduce(const Population& population, const Population& corners,
                                      const SwitchState& state, std::uint64_t fe,
                                      std::uint64_t max_fe, const AlgorithmConfig& config,
                                      const std::vector<double>& lower,
                                      const std::vector<double>& upper, RngStream& rng) {
    if (population.empty() || corners.empty()) {
        throw std::invalid_argument("reproduce: population and corner set must be nonempty");
    }
    const std::size_t n = config.population_size;
    std::vector<DecisionVector> offspring;
    offspring.reserve(n);

    if (rng.uniform() < state.delta) {
        // Exploitative: every corner spawns floor(N/|Pc|) annealed mutants,
        // then the remainder tops up round-robin so |Q| == N.
        const std::size_t per_corner = n / corners.size();
        for (const auto& corner : corners) {
            for (std::size_t j = 0; j < per_corner; ++j) {
                offspring.push_back(exploitative_mutate(corner.decision, fe, max_fe,
                                                        config.mutation_prob, lower, upper, rng));
            }
        }
        std::size_t next = 0;
        while (offspring.size() < n) {
            offspring.push_back(exploitative_mutate(corners[next % corners.size()].decision, fe,
                                                    max_fe, config.mutation_prob, lower, upper,
                                                    rng));
            ++next;
        }
    } else {
        // Explorative: shuffled adjacent pairs through SBX + polynomial
        // mutation until N offspring exist. Odd leftovers pair with a random
        // member; a singleton population pairs with itself.
        std::vector<std::size_t> order(population.size());
        while (offspring.size() < n) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            rng.shuffle(order);
            std::vector<std::size_t> padded = order;
            if (padded.size() % 2 == 1) {
                padded.push_back(order[rng.uniform_index(order.size())]);
            }
            for (std::size_t k = 0; k + 1 < padded.size() && offspring.size() < n; k += 2) {
                auto [c1, c2] = sbx_crossover(population[padded[k]].decision,
                                              population[padded[k + 1]].decision, config.eta_c,
                                              config.crossover_prob, lower, upper, rng);
                offspring.push_back(
                    polynomial_mutation(c1, config.eta_m, config.mutation_prob, lower, upper, rng));
                if (offspring.size() < n) {
                    offspring.push_back(polynomial_mutation(c2, config.eta_m, config.mutation_prob,
                                                            lower, upper, rng));
                }
            }
        }
    }
    return offspring;
}

}  // namespace maocs
