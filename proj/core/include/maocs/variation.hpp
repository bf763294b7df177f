#pragma once

#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "maocs/config.hpp"
#include "maocs/core.hpp"
#include "maocs/corner.hpp"
#include "maocs/rng.hpp"

namespace maocs {

/// Tracks the nadir drift and flips the reproduction probability delta from
/// delta0 to 1 - delta0 once the drift over the learning period falls below
/// the threshold. The flip latches: it happens at most once per run.
struct SwitchState {
    double delta = 0.9;
    bool switched = false;
    int learning_period = 50;
    double threshold = 0.0;
    /// (iteration, nadir) records covering the last learning period.
    std::deque<std::pair<int, std::vector<double>>> nadir_history;
};

SwitchState make_switch_state(double delta0, int learning_period, double threshold);

/// Largest relative per-objective change between two nadir estimates, with
/// the denominator floored at 1e-12 for objectives touching zero.
double nadir_drift(const std::vector<double>& current, const std::vector<double>& past);

/// Records the nadir at iteration `t` and evaluates the switch rule once
/// t >= learning_period. Iterations must arrive consecutively, starting at 0.
void update_switch(SwitchState& state, int t, const NadirEstimate& current_nadir);

/// SBX spread factor for a uniform draw u; beta(0.5) == 1 (children equal
/// parents at the identity point).
double sbx_spread(double u, double eta_c);

/// Simulated binary crossover. Parents must lie within bounds; children are
/// clamped to bounds. With probability 1 - pc the children are plain copies.
std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1,
                                                        const DecisionVector& p2, double eta_c,
                                                        double pc,
                                                        const std::vector<double>& lower,
                                                        const std::vector<double>& upper,
                                                        RngStream& rng);

/// Bounded polynomial-mutation offset for component value x and draw u,
/// already scaled by (ub - lb).
double polynomial_offset(double x, double lower, double upper, double u, double eta_m);

DecisionVector polynomial_mutation(const DecisionVector& x, double eta_m, double pm,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, RngStream& rng);

/// Annealed step fraction: 0.5 (rand - 0.5) (1 - rand^alpha) with
/// alpha = 0.7 (-(1 - fe / max_fe)).  Exactly zero at fe == max_fe.
double annealed_step(double rand_draw, std::uint64_t fe, std::uint64_t max_fe);

/// Mutates each component with probability pm by the annealed step scaled to
/// the bound range, then clamps. The step shrinks as fe approaches max_fe.
DecisionVector exploitative_mutate(const DecisionVector& x, std::uint64_t fe,
                                   std::uint64_t max_fe, double pm,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, RngStream& rng);

/// One generation of offspring decision vectors (exactly N = config.population_size).
/// A single uniform draw picks the branch: below delta, every corner member
/// spawns floor(N/|Pc|) annealed mutants (round-robin top-up to N); otherwise
/// shuffled pairs of P produce SBX + polynomial-mutation children.
std::vector<DecisionVector> reproduce(const Population& population, const Population& corners,
                                      const SwitchState& state, std::uint64_t fe,
                                      std::uint64_t max_fe, const AlgorithmConfig& config,
                                      const std::vector<double>& lower,
                                      const std::vector<double>& upper, RngStream& rng);

}  // namespace maocs
