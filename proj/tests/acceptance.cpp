// Acceptance suite. Each criterion prints exactly one [PASS]/[FAIL] line;
// run with no arguments for all criteria or with a list of criterion numbers
// (the ctest registration runs them one by one).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "maocs/corner.hpp"
#include "maocs/harness.hpp"
#include "maocs/metrics.hpp"
#include "maocs/optimizer.hpp"
#include "maocs/problems.hpp"
#include "maocs/selection.hpp"
#include "maocs/variation.hpp"
#include "oracles.hpp"

using namespace maocs;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw Failure(message);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
// nondominated_filter and nondominated_sort match brute-force oracles on 200
// random populations (n <= 50, m in {2,3,5,10}) in under 5 seconds.
void criterion_1(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    RngStream rng(0xC1);
    const std::vector<std::size_t> objective_counts{2, 3, 5, 10};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(49);
        const std::size_t m = objective_counts[trial % objective_counts.size()];
        const Population pop = oracles::random_population(n, m, rng);
        require(nondominated_index_set(pop) == oracles::brute_nondominated(pop),
                "filter mismatch vs pairwise oracle");
        require(nondominated_sort(pop) == oracles::brute_ranks(pop),
                "sort mismatch vs peeling oracle");
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(seconds < 5.0, "oracle sweep took " + fmt(seconds) + "s (limit 5s)");
    detail = "200 populations, " + fmt(seconds) + "s";
}

// ---------------------------------------------------------------- criterion 2
// Corner recovery: axis corners of a sampled sphere octant sit within 0.15 of
// the analytic axis points; the inverted 3-point cloud follows the hand trace.
void criterion_2(std::string& detail) {
    RngStream rng(0xC2);
    Population pop;
    for (int i = 0; i < 500; ++i) {
        pop.push_back(oracles::make_solution(oracles::sphere_octant_point(3, rng)));
    }
    const auto axis_corners = corner_axis_indices(pop);
    require(axis_corners.size() == 3, "expected one corner per axis");
    double worst = 0.0;
    for (std::size_t axis = 0; axis < 3; ++axis) {
        double d2 = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
            const double target = (j == axis) ? 1.0 : 0.0;
            const double diff = pop[axis_corners[axis]].objectives[j] - target;
            d2 += diff * diff;
        }
        worst = std::max(worst, std::sqrt(d2));
        require(std::sqrt(d2) < 0.15,
                "axis corner " + std::to_string(axis) + " is " + fmt(std::sqrt(d2)) +
                    " from its analytic point (limit 0.15)");
    }

    const Population inverted =
        oracles::make_population({{0.9, 0.9}, {0.1, 1.0}, {1.0, 0.1}});
    const auto trace = corner_search_indices(inverted);
    require(trace == std::vector<std::size_t>{2, 1},
            "inverted 3-point cloud deviates from the hand trace");
    detail = "max axis distance " + fmt(worst);
}

// ---------------------------------------------------------------- criterion 3
// |corner_search| <= 2m and output subset of input over 1000 random clouds.
void criterion_3(std::string& detail) {
    RngStream rng(0xC3);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t m = 2 + rng.uniform_index(7);
        const std::size_t n = 5 + rng.uniform_index(40);
        const Population pop = oracles::random_nondominated(n, m, rng);
        const auto corners = corner_search_indices(pop);
        require(corners.size() <= 2 * m, "corner set exceeded 2m");
        for (std::size_t i = 0; i < corners.size(); ++i) {
            require(corners[i] < pop.size(), "corner index outside the population");
            for (std::size_t j = i + 1; j < corners.size(); ++j) {
                require(corners[i] != corners[j], "duplicate member in the corner set");
            }
        }
    }
    detail = "1000 clouds, m in [2,8]";
}

// ---------------------------------------------------------------- criterion 4
// ABS greedy invariant via independent replay, plus scale invariance of the
// angle-based argmax under 100 random positive scalings.
void criterion_4(std::string& detail) {
    RngStream rng(0xC4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 2 + rng.uniform_index(4);
        const std::size_t count = 12 + rng.uniform_index(20);
        const std::size_t n = 5 + rng.uniform_index(count - 5);
        std::vector<NormalizedObjectives> candidates;
        std::vector<std::vector<double>> raw;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<double> v(m);
            for (auto& x : v) x = rng.uniform(0.01, 1.0);
            candidates.push_back({v});
            raw.push_back(v);
        }
        const std::vector<std::size_t> seeds{0};
        const auto got = angle_select_indices(candidates, seeds, n);
        const auto expected = oracles::replay_angle_greedy(raw, seeds, n);
        require(got == expected, "greedy selection order diverged from the replay");

        // Replay check of the maximin property itself: at every step the
        // chosen member's min angle to the already-selected set is maximal.
        for (std::size_t step = seeds.size(); step < got.size(); ++step) {
            auto min_angle_to_selected = [&](std::size_t candidate) {
                double theta = 1e300;
                for (std::size_t s = 0; s < step; ++s) {
                    theta = std::min(theta, angle(candidates[candidate], candidates[got[s]]));
                }
                return theta;
            };
            const double chosen = min_angle_to_selected(got[step]);
            for (std::size_t other = 0; other < count; ++other) {
                bool already = false;
                for (std::size_t s = 0; s < step; ++s) {
                    if (got[s] == other) already = true;
                }
                if (already) continue;
                require(chosen >= min_angle_to_selected(other) - 1e-12,
                        "a remaining candidate had a larger min angle");
            }
        }
    }

    RngStream scale_rng(0xC4C4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<NormalizedObjectives> plain, scaled;
        for (int i = 0; i < 10; ++i) {
            std::vector<double> v{scale_rng.uniform(0.01, 1.0), scale_rng.uniform(0.01, 1.0),
                                  scale_rng.uniform(0.01, 1.0)};
            plain.push_back({v});
            const double factor = scale_rng.uniform(0.05, 20.0);
            for (auto& x : v) x *= factor;
            scaled.push_back({v});
        }
        const auto a = angle_select_indices(plain, {0}, 5);
        const auto b = angle_select_indices(scaled, {0}, 5);
        require(a == b, "positive scaling changed the selection argmax");
    }
    detail = "40 replayed traces, 100 scalings";
}

// ---------------------------------------------------------------- criterion 5
// The annealed mutation step is exactly zero at fe = max_fe for 10^4 draws.
void criterion_5(std::string& detail) {
    RngStream rng(0xC5);
    for (int i = 0; i < 10000; ++i) {
        const double step = annealed_step(rng.uniform(), 123456, 123456);
        require(step == 0.0, "nonzero step at the end of the budget");
    }
    const std::vector<double> lo(5, -2.0), hi(5, 2.0);
    const DecisionVector x{-1.0, 0.0, 0.5, 1.0, 1.5};
    for (int i = 0; i < 1000; ++i) {
        require(exploitative_mutate(x, 777, 777, 1.0, lo, hi, rng) == x,
                "mutation at the end of the budget is not the identity");
    }
    detail = "10^4 draws, exact zero";
}

// ---------------------------------------------------------------- criterion 6
// The delta latch fires exactly at t = len under a constant nadir (paper
// defaults) and never fires while the nadir drifts by >= threshold per window.
void criterion_6(std::string& detail) {
    const int m = 3;
    SwitchState state = make_switch_state(0.9, 50, 0.001 * m);
    const NadirEstimate flat{{1.0, 2.0, 3.0}};
    update_switch(state, 0, flat);
    for (int t = 1; t < 50; ++t) {
        update_switch(state, t, flat);
        require(!state.switched, "latch fired before t = len");
    }
    update_switch(state, 50, flat);
    require(state.switched, "latch did not fire at t = len");
    require(std::abs(state.delta - 0.1) < 1e-12, "delta did not flip to 1 - delta0");

    SwitchState moving = make_switch_state(0.9, 50, 0.001 * m);
    std::vector<double> nadir{1.0, 1.0, 1.0};
    for (int t = 0; t <= 400; ++t) {
        update_switch(moving, t, NadirEstimate{nadir});
        require(!moving.switched, "latch fired despite a drifting nadir");
        // Per-iteration growth far above the per-window threshold.
        for (double& v : nadir) v *= 1.0 + 0.001 * m;
    }
    detail = "fired at t=50, drifting run never fired";
}

// ---------------------------------------------------------------- criterion 7
// hv_monte_carlo at 10^6 samples lands within 3 reported standard errors of
// hv_exact on 50 random 2-/3-objective sets; hv_exact matches
// inclusion-exclusion within 1e-9 for |S| <= 6.
void criterion_7(std::string& detail) {
    RngStream rng(0xC7);
    int worst_sigma_count = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = (trial % 2 == 0) ? 2 : 3;
        const std::size_t count = 2 + rng.uniform_index(9);
        std::vector<ObjectiveVector> s;
        for (std::size_t i = 0; i < count; ++i) {
            ObjectiveVector p(m);
            for (auto& v : p) v = rng.uniform();
            s.push_back(std::move(p));
        }
        const ObjectiveVector r(m, 1.0);
        const double exact = hv_exact(s, r);
        RngStream mc = rng.split(trial);
        const HvEstimate estimate = hv_monte_carlo(s, r, 1000000, mc);
        const double err = std::abs(estimate.value - exact);
        require(err <= 3.0 * estimate.std_error + 1e-12,
                "MC estimate off by " + fmt(err) + " vs 3 sigma " +
                    fmt(3.0 * estimate.std_error));
        if (err > 2.0 * estimate.std_error) ++worst_sigma_count;
    }

    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = (trial % 2 == 0) ? 2 : 3;
        const std::size_t count = 1 + rng.uniform_index(6);
        std::vector<ObjectiveVector> s;
        for (std::size_t i = 0; i < count; ++i) {
            ObjectiveVector p(m);
            for (auto& v : p) v = rng.uniform();
            s.push_back(std::move(p));
        }
        const ObjectiveVector r(m, 1.0);
        const double sweep = hv_exact(s, r);
        const double incl_excl = oracles::hv_inclusion_exclusion(s, r);
        require(std::abs(sweep - incl_excl) < 1e-9,
                "sweep vs inclusion-exclusion differ by " + fmt(std::abs(sweep - incl_excl)));
    }
    detail = "50 MC sets in 3 sigma, 100 inclusion-exclusion sets";
}

// ---------------------------------------------------------------- criterion 8
// IGD equals the double-loop oracle within 1e-12 on 100 random instances and
// is exactly zero when S contains the reference front.
void criterion_8(std::string& detail) {
    RngStream rng(0xC8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + rng.uniform_index(4);
        std::vector<ObjectiveVector> s, ref;
        const std::size_t ns = 1 + rng.uniform_index(30);
        const std::size_t nr = 1 + rng.uniform_index(30);
        for (std::size_t i = 0; i < ns; ++i) {
            ObjectiveVector p(m);
            for (auto& v : p) v = rng.uniform(-5, 5);
            s.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < nr; ++i) {
            ObjectiveVector p(m);
            for (auto& v : p) v = rng.uniform(-5, 5);
            ref.push_back(std::move(p));
        }
        require(std::abs(igd(s, ref) - oracles::brute_igd(s, ref)) < 1e-12,
                "IGD diverged from the double-loop oracle");

        std::vector<ObjectiveVector> superset = ref;
        superset.insert(superset.end(), s.begin(), s.end());
        require(igd(superset, ref) < 1e-12, "IGD of a superset of P* is not zero");
    }
    detail = "100 instances within 1e-12";
}

// ---------------------------------------------------------------- criterion 9
// Desk-scale end-to-end on DTLZ2 (m=3, N=75, 30000 evaluations, 10 reps):
// internally nondominated finals, mean IGD under half the random-search
// baseline, and mean IGD under the pinned ceiling 0.15.
//
// Baseline oracle: pure random sampling with the same budget feeding a
// bounded nondominated archive of the same capacity N (uniform-random
// replacement when full) - same budget, same output size, no selection
// intelligence. Size matching matters: IGD improves with |S|, and an
// unbounded archive of 30000 uniform samples scores ~0.071 here, while the
// best possible 75-point maximin-angle subset of the reference front itself
// scores ~0.060, so a size-mismatched comparison at the 50% level would be
// unsatisfiable by any 75-point population.
//
// Pilot calibration (this build, seeds as below, 10 reps): algorithm mean
// IGD 0.0622, bounded-archive baseline mean IGD 0.163 (ratio 0.38);
// ceiling pinned at 0.15 per the stated criterion.
void criterion_9(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    ProblemSpec spec;
    spec.family = ProblemFamily::dtlz2;
    spec.num_objectives = 3;
    const ProblemDefinition problem = make_problem(spec);

    RngStream front_rng(0xC9);
    const ReferenceFront reference = true_pf_sample(spec, 5000, front_rng);

    const std::uint64_t budget = 30000;
    const int reps = 10;
    double igd_sum = 0.0;
    double baseline_sum = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
        AlgorithmConfig config = AlgorithmConfig::defaults_for(3, problem.num_variables);
        config.population_size = 75;
        config.max_evaluations = budget;
        config.seed = mix_seed(0xD009, rep);
        const RunResult result = run(problem, config);

        for (std::size_t i = 0; i < result.final_population.size(); ++i) {
            for (std::size_t j = 0; j < result.final_population.size(); ++j) {
                if (i != j) {
                    require(!dominates(result.final_population[i].objectives,
                                       result.final_population[j].objectives),
                            "final population contains a dominated member");
                }
            }
        }
        std::vector<ObjectiveVector> front;
        for (const auto& s : result.final_population) front.push_back(s.objectives);
        igd_sum += igd(front, reference);

        // Random-search oracle on the same budget: uniform sampling into a
        // bounded nondominated archive of capacity N, uniform-random
        // replacement once full.
        RngStream search(mix_seed(0xBA5E, rep));
        std::vector<ObjectiveVector> archive;
        for (std::uint64_t e = 0; e < budget; ++e) {
            DecisionVector x(problem.num_variables);
            for (auto& v : x) v = search.uniform();
            ObjectiveVector f = problem.evaluate(x);
            bool dominated = false;
            for (const auto& a : archive) {
                if (oracles::pairwise_dominates(a, f) || a == f) {
                    dominated = true;
                    break;
                }
            }
            if (dominated) continue;
            std::erase_if(archive, [&](const ObjectiveVector& a) {
                return oracles::pairwise_dominates(f, a);
            });
            if (archive.size() < config.population_size) {
                archive.push_back(std::move(f));
            } else {
                archive[search.uniform_index(archive.size())] = std::move(f);
            }
        }
        baseline_sum += igd(archive, reference);
    }
    const double mean_igd = igd_sum / reps;
    const double mean_baseline = baseline_sum / reps;
    require(mean_igd < 0.5 * mean_baseline,
            "mean IGD " + fmt(mean_igd) + " is not below half the random-search baseline " +
                fmt(mean_baseline));
    require(mean_igd < 0.15, "mean IGD " + fmt(mean_igd) + " exceeds the pinned ceiling 0.15");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(seconds < 120.0, "end-to-end took " + fmt(seconds) + "s (target < 2 min)");
    detail = "mean IGD " + fmt(mean_igd) + ", baseline " + fmt(mean_baseline) + ", " +
             fmt(seconds) + "s";
}

// --------------------------------------------------------------- criterion 10
// On inverted-DTLZ2 (m=3) at least one run's trace shows |Pc| > m: the
// per-objective minima augment the axis corners.
void criterion_10(std::string& detail) {
    ProblemSpec spec;
    spec.family = ProblemFamily::inverted_dtlz2;
    spec.num_objectives = 3;
    const ProblemDefinition problem = make_problem(spec);

    std::size_t best = 0;
    for (int rep = 0; rep < 5; ++rep) {
        AlgorithmConfig config = AlgorithmConfig::defaults_for(3, problem.num_variables);
        config.population_size = 75;
        config.max_evaluations = 6000;
        config.seed = mix_seed(0xD010, rep);
        const RunResult result = run(problem, config);
        for (const auto& rec : result.trace) {
            best = std::max(best, rec.corner_count);
        }
        if (best > 3) break;
    }
    require(best > 3, "no generation recorded more than m corner solutions");
    detail = "max |Pc| observed " + std::to_string(best) + " (m = 3)";
}

// --------------------------------------------------------------- criterion 11
// Two executions of the same experiment (concurrent replications on) export
// byte-identical CSV files.
void criterion_11(std::string& detail) {
    namespace fs = std::filesystem;
    ExperimentConfig config;
    ProblemSpec spec;
    spec.family = ProblemFamily::dtlz2;
    spec.num_objectives = 3;
    config.problems = {spec};
    config.algorithm.population_size = 20;
    config.algorithm.max_evaluations = 800;
    config.replications = 4;
    config.base_seed = 2718;
    config.metric = MetricSelection::both;
    config.reference_front_size = 300;
    config.hv_samples = 50000;
    config.jobs = 2;

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    config.out_dir = "acceptance_out_a";
    export_results(run_experiment(config), config);
    config.out_dir = "acceptance_out_b";
    config.jobs = 4;  // different concurrency must not matter
    export_results(run_experiment(config), config);

    const std::string a = slurp("acceptance_out_a/results.csv");
    const std::string b = slurp("acceptance_out_b/results.csv");
    require(!a.empty(), "first export produced an empty CSV");
    require(a == b, "CSV exports differ between executions");
    detail = std::to_string(a.size()) + " identical bytes";
}

// --------------------------------------------------------------- criterion 12
// The 6x5 sensitivity grid (threshold x len) on DTLZ2 m=3 at reduced budget
// completes in under 5 minutes and exports a consistent 30-cell table.
void criterion_12(std::string& detail) {
    namespace fs = std::filesystem;
    const auto start = std::chrono::steady_clock::now();

    ExperimentConfig config;
    ProblemSpec spec;
    spec.family = ProblemFamily::dtlz2;
    spec.num_objectives = 3;
    config.problems = {spec};
    config.algorithm.population_size = 75;
    config.algorithm.max_evaluations = 5000;
    config.replications = 5;
    config.base_seed = 31415;
    config.metric = MetricSelection::igd;
    config.reference_front_size = 2000;
    config.jobs = 4;
    config.out_dir = "acceptance_out_sweep";

    const ExperimentResult result = run_sweep(config);
    require(result.cells.size() == 30, "expected 30 grid cells, got " +
                                           std::to_string(result.cells.size()));
    export_results(result, config);

    for (const auto& cell : result.cells) {
        require(cell.replications.size() == 5, "a cell is missing replications");
        require(cell.failure_count() == 0, "a cell recorded failures");
        require(cell.mean_igd().has_value(), "a cell has no mean IGD");
    }

    // Export integrity: the sweep table re-derives from the raw CSV rows.
    std::ifstream csv("acceptance_out_sweep/results.csv");
    require(csv.good(), "results.csv missing");
    std::string line;
    std::getline(csv, line);
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        if (!line.empty()) ++rows;
    }
    require(rows == 150, "expected 150 replication rows, got " + std::to_string(rows));

    std::ifstream sweep_csv("acceptance_out_sweep/sweep.csv");
    require(sweep_csv.good(), "sweep.csv missing");
    std::getline(sweep_csv, line);
    std::size_t cells = 0;
    while (std::getline(sweep_csv, line)) {
        if (!line.empty()) ++cells;
    }
    require(cells == 30, "sweep.csv does not list 30 cells");

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(seconds < 300.0, "sweep took " + fmt(seconds) + "s (limit 5 min)");
    detail = "30 cells x 5 reps, " + fmt(seconds) + "s";
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(std::string&)> fn;
};

const std::vector<Criterion> kCriteria = {
    {1, "dominance oracle equivalence", criterion_1},
    {2, "corner recovery on analytic fronts", criterion_2},
    {3, "corner search size bound and subset", criterion_3},
    {4, "ABS greedy invariant and scale invariance", criterion_4},
    {5, "annealed mutation endpoint identity", criterion_5},
    {6, "switch latch timing", criterion_6},
    {7, "hypervolume validation", criterion_7},
    {8, "IGD validation", criterion_8},
    {9, "desk-scale end-to-end on dtlz2", criterion_9},
    {10, "inverted-front corner augmentation", criterion_10},
    {11, "byte-identical deterministic exports", criterion_11},
    {12, "sensitivity sweep protocol", criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& criterion : kCriteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.id) == selected.end()) {
            continue;
        }
        std::string detail;
        try {
            criterion.fn(detail);
            std::printf("[PASS] criterion %2d: %s (%s)\n", criterion.id, criterion.name,
                        detail.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s: %s\n", criterion.id, criterion.name,
                        e.what());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
