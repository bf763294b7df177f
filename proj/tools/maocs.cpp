// Command line front end: seeded experiment runs, the parameter-sensitivity
// sweep, and standalone metric evaluation on tabular point files.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "maocs/harness.hpp"
#include "maocs/metrics.hpp"
#include "maocs/problems.hpp"

namespace {

struct CommonOverrides {
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> reps;
    std::optional<std::string> metric;
    std::optional<std::size_t> jobs;
    bool trace = false;
};

void apply(const CommonOverrides& o, maocs::ExperimentConfig& config) {
    if (!o.out_dir.empty()) config.out_dir = o.out_dir;
    if (o.seed) config.base_seed = *o.seed;
    if (o.reps) config.replications = *o.reps;
    if (o.metric) config.metric = maocs::parse_metric(*o.metric);
    if (o.jobs) config.jobs = *o.jobs;
    if (o.trace) config.trace = true;
}

void print_cell_summaries(const maocs::ExperimentResult& result) {
    for (const auto& cell : result.cells) {
        std::printf("%s: reps=%zu", cell.label().c_str(), cell.replications.size());
        if (auto v = cell.mean_igd()) std::printf(" igd=%.6g (std %.3g)", *v, *cell.std_igd());
        if (auto v = cell.mean_hv()) std::printf(" hv=%.6g (std %.3g)", *v, *cell.std_hv());
        if (cell.failure_count() > 0) std::printf(" FAILURES=%zu", cell.failure_count());
        std::printf("\n");
    }
}

int run_command(const std::string& config_path, const CommonOverrides& overrides, bool sweep) {
    maocs::ExperimentConfig config = maocs::parse_config(config_path);
    apply(overrides, config);
    const maocs::ExperimentResult result =
        sweep ? maocs::run_sweep(config) : maocs::run_experiment(config);
    maocs::export_results(result, config);
    print_cell_summaries(result);
    std::printf("exported to %s\n", config.out_dir.c_str());
    for (const auto& cell : result.cells) {
        if (cell.failure_count() > 0) return 2;
    }
    return 0;
}

int metrics_command(const std::string& front_path, const std::string& reference_path,
                    const std::string& metric, std::uint64_t hv_samples, std::uint64_t seed) {
    const auto front = maocs::load_tabular_points(front_path);
    const auto reference = maocs::load_tabular_points(reference_path);
    const maocs::MetricSelection selection = maocs::parse_metric(metric);

    if (selection == maocs::MetricSelection::igd || selection == maocs::MetricSelection::both) {
        std::printf("igd %.17g\n", maocs::igd(front, reference));
    }
    if (selection == maocs::MetricSelection::hv || selection == maocs::MetricSelection::both) {
        auto [normalized, ref_point] = maocs::normalize_for_hv(front, reference);
        maocs::RngStream rng(seed);
        const maocs::HvEstimate estimate =
            maocs::hv_monte_carlo(normalized, ref_point, hv_samples, rng);
        std::printf("hv %.17g stderr %.3g\n", estimate.value, estimate.std_error);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"many-objective optimizer with corner-solution search"};
    app.require_subcommand(1);

    CommonOverrides overrides;
    std::string config_path;

    auto* run_cmd = app.add_subcommand("run", "run a configured experiment");
    run_cmd->add_option("config", config_path, "experiment config file")->required();
    run_cmd->add_option("--out", overrides.out_dir, "output directory");
    run_cmd->add_option("--seed", overrides.seed, "base seed override");
    run_cmd->add_option("--reps", overrides.reps, "replication count override");
    run_cmd->add_option("--metric", overrides.metric, "igd, hv or both");
    run_cmd->add_option("--jobs", overrides.jobs, "concurrent replications");
    run_cmd->add_flag("--trace", overrides.trace, "export per-generation traces");

    auto* sweep_cmd = app.add_subcommand("sweep", "run the threshold x len sensitivity grid");
    sweep_cmd->add_option("config", config_path, "experiment config file")->required();
    sweep_cmd->add_option("--out", overrides.out_dir, "output directory");
    sweep_cmd->add_option("--seed", overrides.seed, "base seed override");
    sweep_cmd->add_option("--reps", overrides.reps, "replication count override");
    sweep_cmd->add_option("--jobs", overrides.jobs, "concurrent replications");

    std::string front_path, reference_path;
    std::string metric = "both";
    std::uint64_t hv_samples = 1000000;
    std::uint64_t metric_seed = 1;
    auto* metrics_cmd =
        app.add_subcommand("metrics", "evaluate IGD/HV for a tabular front against a reference");
    metrics_cmd->add_option("front", front_path, "obtained front (tabular file)")->required();
    metrics_cmd->add_option("reference", reference_path, "reference front (tabular file)")
        ->required();
    metrics_cmd->add_option("--metric", metric, "igd, hv or both");
    metrics_cmd->add_option("--hv-samples", hv_samples, "Monte-Carlo samples for HV");
    metrics_cmd->add_option("--seed", metric_seed, "seed for the HV sampling stream");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // bad invocation is a config error
    }

    try {
        if (run_cmd->parsed()) return run_command(config_path, overrides, false);
        if (sweep_cmd->parsed()) return run_command(config_path, overrides, true);
        return metrics_command(front_path, reference_path, metric, hv_samples, metric_seed);
    } catch (const maocs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
