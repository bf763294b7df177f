#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maocs/config.hpp"
#include "maocs/core.hpp"
#include "maocs/corner.hpp"
#include "maocs/rng.hpp"
#include "maocs/selection.hpp"
#include "maocs/variation.hpp"

namespace maocs {

struct TraceRecord {
    int iteration = 0;
    std::uint64_t evaluations = 0;
    std::vector<double> ideal;
    std::vector<double> nadir;
    double delta = 0.0;
    std::size_t corner_count = 0;
    std::optional<double> igd;
};

struct RunResult {
    Population final_population;
    std::vector<TraceRecord> trace;
    std::uint64_t seed = 0;
    std::uint64_t total_evaluations = 0;
};

/// The main loop: random initialization shrunk to its nondominated set, then
/// generations of reproduce + DSA selection until the evaluation budget is
/// spent. The last generation may overshoot max_fe by at most N - 1.
class Optimizer {
public:
    Optimizer(ProblemDefinition problem, AlgorithmConfig config);

    void initialize();
    void step();
    bool finished() const { return evaluations_ >= config_.max_evaluations; }

    const Population& population() const { return population_; }
    const Population& corners() const { return corners_; }
    const SwitchState& switch_state() const { return switch_state_; }
    std::uint64_t evaluations() const { return evaluations_; }
    int iteration() const { return iteration_; }

    /// Optional per-generation IGD sampling against this reference front.
    void set_igd_reference(const std::vector<ObjectiveVector>* reference) {
        igd_reference_ = reference;
    }

    RunResult result() const;

private:
    Solution evaluate(DecisionVector decision);
    void record_trace();

    ProblemDefinition problem_;
    AlgorithmConfig config_;
    RngStream rng_;
    Population population_;
    Population corners_;
    SwitchState switch_state_;
    IdealEstimate ideal_;
    NadirEstimate nadir_;
    std::uint64_t evaluations_ = 0;
    int iteration_ = 0;
    bool initialized_ = false;
    std::vector<TraceRecord> trace_;
    const std::vector<ObjectiveVector>* igd_reference_ = nullptr;
};

/// Convenience wrapper: initialize, loop to budget, return the result.
RunResult run(const ProblemDefinition& problem, const AlgorithmConfig& config,
              const std::vector<ObjectiveVector>* igd_reference = nullptr);

}  // namespace maocs
