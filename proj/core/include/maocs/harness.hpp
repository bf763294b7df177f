#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maocs/config.hpp"
#include "maocs/core.hpp"
#include "maocs/optimizer.hpp"
#include "maocs/problems.hpp"

namespace maocs {

enum class MetricSelection { igd, hv, both };

MetricSelection parse_metric(const std::string& name);
std::string metric_name(MetricSelection metric);

/// Algorithm parameters as given in a config file; unset fields resolve to
/// the per-problem defaults.
struct AlgorithmOverrides {
    std::optional<std::size_t> population_size;
    std::optional<double> delta0;
    std::optional<double> switch_threshold;
    std::optional<int> learning_period;
    std::optional<double> crossover_prob;
    std::optional<double> eta_c;
    std::optional<double> mutation_prob;
    std::optional<double> eta_m;
    std::optional<std::uint64_t> max_evaluations;
    std::optional<bool> recompute_ideal;
    std::optional<bool> translate_corner_by_ideal;

    AlgorithmConfig resolve(int num_objectives, int num_variables) const;
};

struct ExperimentConfig {
    std::vector<ProblemSpec> problems;
    AlgorithmOverrides algorithm;
    std::size_t replications = 1;
    std::uint64_t base_seed = 1;
    MetricSelection metric = MetricSelection::igd;
    std::size_t reference_front_size = 5000;
    std::uint64_t hv_samples = 1000000;
    std::string reference_front_path;  // optional tabular override
    std::string out_dir = "results";
    bool trace = false;
    std::size_t jobs = 1;
    /// Sensitivity grid; empty lists fall back to the standard sweep
    /// (threshold in {1, 0.1, ..., 1e-5}, len in {10, 30, 50, 70, 90}).
    std::vector<double> sweep_thresholds;
    std::vector<int> sweep_lens;

    void validate() const;
};

/// Parses the sectioned key=value config format (see README). Diagnostics
/// carry file:line anchors; unknown keys are errors.
ExperimentConfig parse_config(const std::string& path);

struct ReplicationResult {
    std::size_t replication = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    std::optional<double> igd_value;
    std::optional<double> hv_value;
    double wall_seconds = 0.0;
    bool failed = false;
    std::string error;
    std::vector<ObjectiveVector> front;  // final population objectives
    std::vector<TraceRecord> trace;
};

/// One experiment cell: a problem (and, in sweep mode, one grid point of
/// switch parameters) run for the full replication count.
struct CellResult {
    std::string problem;
    int num_objectives = 0;
    std::optional<double> sweep_threshold;
    std::optional<int> sweep_len;
    std::vector<ReplicationResult> replications;

    std::optional<double> mean_igd() const;
    std::optional<double> std_igd() const;
    std::optional<double> mean_hv() const;
    std::optional<double> std_hv() const;
    std::size_t failure_count() const;
    std::string label() const;
};

struct ExperimentResult {
    std::vector<CellResult> cells;
};

/// Derives the seed for replication `i`: a pure function of (base seed, i),
/// independent of execution order.
std::uint64_t replication_seed(std::uint64_t base_seed, std::size_t replication);

ExperimentResult run_experiment(const ExperimentConfig& config);

/// The 6x5 parameter-sensitivity protocol: every (threshold, len) grid cell
/// runs the full replication count on each configured problem.
ExperimentResult run_sweep(const ExperimentConfig& config);

/// Writes results.csv, summary.json, per-replication front files (tabular
/// format), and optional trace JSON under `out_dir`. Everything except wall
/// times is a pure function of the config, so repeat exports are
/// byte-identical.
void export_results(const ExperimentResult& result, const ExperimentConfig& config);

}  // namespace maocs
