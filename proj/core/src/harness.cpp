#include "maocs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "maocs/metrics.hpp"

namespace maocs {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::uint64_t kHvStreamKey = 0x48564d43;   // HV sampling stream
constexpr std::uint64_t kRefStreamKey = 0x52454652;  // reference front stream

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;
};

/// Population standard deviation; a single replication reports 0.
Stats mean_std(const std::vector<double>& values) {
    Stats s;
    if (values.empty()) return s;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(var / static_cast<double>(values.size()));
    return s;
}

std::optional<Stats> collect(const std::vector<ReplicationResult>& reps,
                             std::optional<double> ReplicationResult::*member) {
    std::vector<double> values;
    for (const auto& r : reps) {
        if (!r.failed && (r.*member).has_value()) values.push_back((r.*member).value());
    }
    if (values.empty()) return std::nullopt;
    return mean_std(values);
}

}  // namespace

MetricSelection parse_metric(const std::string& name) {
    if (name == "igd") return MetricSelection::igd;
    if (name == "hv") return MetricSelection::hv;
    if (name == "both") return MetricSelection::both;
    throw ConfigError("unknown metric '" + name + "' (expected igd, hv or both)");
}

std::string metric_name(MetricSelection metric) {
    switch (metric) {
        case MetricSelection::igd: return "igd";
        case MetricSelection::hv: return "hv";
        case MetricSelection::both: return "both";
    }
    return "unknown";
}

AlgorithmConfig AlgorithmOverrides::resolve(int num_objectives, int num_variables) const {
    AlgorithmConfig c = AlgorithmConfig::defaults_for(num_objectives, num_variables);
    if (population_size) c.population_size = *population_size;
    if (delta0) c.delta0 = *delta0;
    if (switch_threshold) c.switch_threshold = *switch_threshold;
    if (learning_period) c.learning_period = *learning_period;
    if (crossover_prob) c.crossover_prob = *crossover_prob;
    if (eta_c) c.eta_c = *eta_c;
    if (mutation_prob) c.mutation_prob = *mutation_prob;
    if (eta_m) c.eta_m = *eta_m;
    if (max_evaluations) c.max_evaluations = *max_evaluations;
    if (recompute_ideal) c.recompute_ideal = *recompute_ideal;
    if (translate_corner_by_ideal) c.translate_corner_by_ideal = *translate_corner_by_ideal;
    c.validate();
    return c;
}

void ExperimentConfig::validate() const {
    if (problems.empty()) throw ConfigError("no [problem] section configured");
    for (const auto& p : problems) p.validate();
    if (replications < 1) throw ConfigError("replications must be >= 1");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    if (reference_front_size < 1) throw ConfigError("ref_front_size must be >= 1");
    if (hv_samples < 1) throw ConfigError("hv_samples must be >= 1");
    for (double t : sweep_thresholds) {
        if (t <= 0.0) throw ConfigError("sweep thresholds must be positive");
    }
    for (int l : sweep_lens) {
        if (l < 1) throw ConfigError("sweep lens must be >= 1");
    }
}

namespace {

struct ConfigParser {
    std::string path;
    std::size_t line_no = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ConfigError(path + ":" + std::to_string(line_no) + ": " + message);
    }

    double to_double(const std::string& v) const {
        try {
            std::size_t used = 0;
            const double d = std::stod(v, &used);
            if (used != v.size()) fail("trailing characters after number '" + v + "'");
            return d;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            fail("expected a number, got '" + v + "'");
        }
    }

    std::int64_t to_int(const std::string& v) const {
        try {
            std::size_t used = 0;
            const std::int64_t i = std::stoll(v, &used);
            if (used != v.size()) fail("trailing characters after integer '" + v + "'");
            return i;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            fail("expected an integer, got '" + v + "'");
        }
    }

    std::uint64_t to_u64(const std::string& v) const {
        const std::int64_t i = to_int(v);
        if (i < 0) fail("expected a nonnegative integer, got '" + v + "'");
        return static_cast<std::uint64_t>(i);
    }

    bool to_bool(const std::string& v) const {
        if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
        if (v == "false" || v == "0" || v == "no" || v == "off") return false;
        fail("expected a boolean, got '" + v + "'");
    }

    std::vector<double> to_double_list(const std::string& v) const {
        std::vector<double> out;
        std::string item;
        std::istringstream ss(v);
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) fail("empty list element");
            out.push_back(to_double(item));
        }
        if (out.empty()) fail("empty list");
        return out;
    }
};

}  // namespace

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");

    ExperimentConfig config;
    ConfigParser p{path};
    std::string section;
    std::string line;

    auto current_problem = [&]() -> ProblemSpec& {
        if (config.problems.empty()) p.fail("key outside a [problem] section");
        return config.problems.back();
    };

    while (std::getline(in, line)) {
        ++p.line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') p.fail("unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section == "problem") {
                config.problems.emplace_back();
            } else if (section != "algorithm" && section != "experiment" && section != "sweep") {
                p.fail("unknown section [" + section + "]");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) p.fail("expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) p.fail("empty key");
        if (value.empty()) p.fail("empty value for key '" + key + "'");

        if (section == "problem") {
            ProblemSpec& prob = current_problem();
            if (key == "family") {
                prob.family = parse_family(value);
            } else if (key == "m") {
                prob.num_objectives = static_cast<int>(p.to_int(value));
            } else if (key == "d" || key == "D") {
                prob.num_variables = static_cast<int>(p.to_int(value));
            } else if (key == "k") {
                prob.distance_vars = static_cast<int>(p.to_int(value));
            } else if (key == "scale") {
                prob.scale = p.to_double_list(value);
            } else if (key == "path") {
                fs::path table_path(value);
                if (table_path.is_relative()) {
                    table_path = fs::path(path).parent_path() / table_path;
                }
                const ProblemSpec loaded = load_tabular_problem(table_path.string());
                prob.family = ProblemFamily::tabular;
                prob.table = loaded.table;
                prob.num_objectives = loaded.num_objectives;
                prob.num_variables = loaded.num_variables;
                prob.source_path = loaded.source_path;
            } else {
                p.fail("unknown key '" + key + "' in [problem]");
            }
        } else if (section == "algorithm") {
            AlgorithmOverrides& a = config.algorithm;
            if (key == "n" || key == "N") {
                a.population_size = static_cast<std::size_t>(p.to_u64(value));
            } else if (key == "delta0") {
                a.delta0 = p.to_double(value);
            } else if (key == "threshold") {
                a.switch_threshold = p.to_double(value);
            } else if (key == "len") {
                a.learning_period = static_cast<int>(p.to_int(value));
            } else if (key == "pc") {
                a.crossover_prob = p.to_double(value);
            } else if (key == "eta_c") {
                a.eta_c = p.to_double(value);
            } else if (key == "pm") {
                a.mutation_prob = p.to_double(value);
            } else if (key == "eta_m") {
                a.eta_m = p.to_double(value);
            } else if (key == "max_fe") {
                a.max_evaluations = p.to_u64(value);
            } else if (key == "recompute_ideal") {
                a.recompute_ideal = p.to_bool(value);
            } else if (key == "translate_corner_by_ideal") {
                a.translate_corner_by_ideal = p.to_bool(value);
            } else {
                p.fail("unknown key '" + key + "' in [algorithm]");
            }
        } else if (section == "experiment") {
            if (key == "replications" || key == "reps") {
                config.replications = static_cast<std::size_t>(p.to_u64(value));
            } else if (key == "seed") {
                config.base_seed = p.to_u64(value);
            } else if (key == "metric") {
                config.metric = parse_metric(value);
            } else if (key == "ref_front_size") {
                config.reference_front_size = static_cast<std::size_t>(p.to_u64(value));
            } else if (key == "ref_front") {
                fs::path ref_path(value);
                if (ref_path.is_relative()) {
                    ref_path = fs::path(path).parent_path() / ref_path;
                }
                config.reference_front_path = ref_path.string();
            } else if (key == "hv_samples") {
                config.hv_samples = p.to_u64(value);
            } else if (key == "out") {
                config.out_dir = value;
            } else if (key == "trace") {
                config.trace = p.to_bool(value);
            } else if (key == "jobs") {
                config.jobs = static_cast<std::size_t>(p.to_u64(value));
            } else {
                p.fail("unknown key '" + key + "' in [experiment]");
            }
        } else if (section == "sweep") {
            if (key == "thresholds") {
                config.sweep_thresholds = p.to_double_list(value);
            } else if (key == "lens") {
                config.sweep_lens.clear();
                for (double v : p.to_double_list(value)) {
                    config.sweep_lens.push_back(static_cast<int>(v));
                }
            } else {
                p.fail("unknown key '" + key + "' in [sweep]");
            }
        } else {
            p.fail("key '" + key + "' outside any section");
        }
    }

    config.validate();
    return config;
}

std::uint64_t replication_seed(std::uint64_t base_seed, std::size_t replication) {
    return mix_seed(base_seed, static_cast<std::uint64_t>(replication));
}

std::optional<double> CellResult::mean_igd() const {
    auto s = collect(replications, &ReplicationResult::igd_value);
    if (!s) return std::nullopt;
    return s->mean;
}

std::optional<double> CellResult::std_igd() const {
    auto s = collect(replications, &ReplicationResult::igd_value);
    if (!s) return std::nullopt;
    return s->stddev;
}

std::optional<double> CellResult::mean_hv() const {
    auto s = collect(replications, &ReplicationResult::hv_value);
    if (!s) return std::nullopt;
    return s->mean;
}

std::optional<double> CellResult::std_hv() const {
    auto s = collect(replications, &ReplicationResult::hv_value);
    if (!s) return std::nullopt;
    return s->stddev;
}

std::size_t CellResult::failure_count() const {
    std::size_t n = 0;
    for (const auto& r : replications) {
        if (r.failed) ++n;
    }
    return n;
}

std::string CellResult::label() const {
    std::string s = problem + "_m" + std::to_string(num_objectives);
    if (sweep_threshold) s += "_t" + format_compact(*sweep_threshold);
    if (sweep_len) s += "_len" + std::to_string(*sweep_len);
    return s;
}

namespace {

struct CellPlan {
    ProblemSpec spec;
    ProblemDefinition problem;
    AlgorithmConfig algorithm;  // seed filled per replication
    ReferenceFront reference;   // empty when no metric needs a front
};

ReferenceFront cell_reference_front(const ExperimentConfig& config,
                                    const ProblemDefinition& problem) {
    if (!config.reference_front_path.empty()) {
        return load_tabular_points(config.reference_front_path);
    }
    if (!problem.sample_front) {
        throw ConfigError("problem '" + problem.name +
                          "' has no analytic front; provide ref_front = <file> to compute metrics");
    }
    RngStream ref_rng = RngStream(config.base_seed).split(kRefStreamKey);
    return problem.sample_front(config.reference_front_size, ref_rng);
}

void run_replication(const ExperimentConfig& config, const CellPlan& plan, std::size_t rep,
                     ReplicationResult& out) {
    out.replication = rep;
    out.seed = replication_seed(config.base_seed, rep);
    const auto start = std::chrono::steady_clock::now();
    try {
        AlgorithmConfig algo = plan.algorithm;
        algo.seed = out.seed;
        const bool want_igd =
            config.metric == MetricSelection::igd || config.metric == MetricSelection::both;
        const bool want_hv =
            config.metric == MetricSelection::hv || config.metric == MetricSelection::both;

        const ReferenceFront* trace_ref =
            (config.trace && want_igd && !plan.reference.empty()) ? &plan.reference : nullptr;
        RunResult run_result = run(plan.problem, algo, trace_ref);

        out.evaluations = run_result.total_evaluations;
        out.front.reserve(run_result.final_population.size());
        for (const auto& s : run_result.final_population) out.front.push_back(s.objectives);
        if (config.trace) out.trace = run_result.trace;

        if (want_igd) out.igd_value = igd(out.front, plan.reference);
        if (want_hv) {
            auto [normalized, ref_point] = normalize_for_hv(out.front, plan.reference);
            RngStream hv_rng = RngStream(out.seed).split(kHvStreamKey);
            out.hv_value = hv_monte_carlo(normalized, ref_point, config.hv_samples, hv_rng).value;
        }
    } catch (const std::exception& e) {
        out.failed = true;
        out.error = e.what();
    }
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ExperimentResult run_cells(const ExperimentConfig& config, std::vector<CellResult>& cells,
                           const std::vector<CellPlan>& plans) {
    struct Task {
        std::size_t cell;
        std::size_t rep;
    };
    std::vector<Task> tasks;
    tasks.reserve(cells.size() * config.replications);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        cells[c].replications.resize(config.replications);
        for (std::size_t r = 0; r < config.replications; ++r) tasks.push_back({c, r});
    }

    const std::size_t workers = std::min(config.jobs, std::max<std::size_t>(tasks.size(), 1));
    if (workers <= 1) {
        for (const Task& t : tasks) {
            run_replication(config, plans[t.cell], t.rep, cells[t.cell].replications[t.rep]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                const Task& t = tasks[i];
                run_replication(config, plans[t.cell], t.rep, cells[t.cell].replications[t.rep]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ExperimentResult result;
    result.cells = std::move(cells);
    return result;
}

CellPlan make_plan(const ExperimentConfig& config, const ProblemSpec& spec) {
    CellPlan plan;
    plan.spec = spec;
    plan.problem = make_problem(spec);
    plan.algorithm =
        config.algorithm.resolve(plan.problem.num_objectives, plan.problem.num_variables);
    plan.reference = cell_reference_front(config, plan.problem);
    return plan;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    std::vector<CellResult> cells;
    std::vector<CellPlan> plans;
    for (const auto& spec : config.problems) {
        CellPlan plan = make_plan(config, spec);
        CellResult cell;
        cell.problem = plan.problem.name;
        cell.num_objectives = plan.problem.num_objectives;
        cells.push_back(std::move(cell));
        plans.push_back(std::move(plan));
    }
    return run_cells(config, cells, plans);
}

ExperimentResult run_sweep(const ExperimentConfig& config) {
    config.validate();
    std::vector<double> thresholds = config.sweep_thresholds;
    std::vector<int> lens = config.sweep_lens;
    if (thresholds.empty()) thresholds = {1.0, 0.1, 0.01, 0.001, 0.0001, 0.00001};
    if (lens.empty()) lens = {10, 30, 50, 70, 90};

    std::vector<CellResult> cells;
    std::vector<CellPlan> plans;
    for (const auto& spec : config.problems) {
        CellPlan base = make_plan(config, spec);
        for (double threshold : thresholds) {
            for (int len : lens) {
                CellPlan plan = base;
                plan.algorithm.switch_threshold = threshold;
                plan.algorithm.learning_period = len;
                plan.algorithm.validate();
                CellResult cell;
                cell.problem = plan.problem.name;
                cell.num_objectives = plan.problem.num_objectives;
                cell.sweep_threshold = threshold;
                cell.sweep_len = len;
                cells.push_back(std::move(cell));
                plans.push_back(std::move(plan));
            }
        }
    }
    return run_cells(config, cells, plans);
}

namespace {

json cell_to_json(const CellResult& cell) {
    json j;
    j["problem"] = cell.problem;
    j["m"] = cell.num_objectives;
    if (cell.sweep_threshold) j["threshold"] = *cell.sweep_threshold;
    if (cell.sweep_len) j["len"] = *cell.sweep_len;
    j["replications"] = cell.replications.size();
    j["failures"] = cell.failure_count();
    if (auto v = cell.mean_igd()) {
        j["igd"]["mean"] = *v;
        j["igd"]["std"] = *cell.std_igd();
    }
    if (auto v = cell.mean_hv()) {
        j["hv"]["mean"] = *v;
        j["hv"]["std"] = *cell.std_hv();
    }
    double wall = 0.0;
    json reps = json::array();
    for (const auto& r : cell.replications) {
        json rj;
        rj["rep"] = r.replication;
        rj["seed"] = r.seed;
        rj["fe"] = r.evaluations;
        if (r.igd_value) rj["igd"] = *r.igd_value;
        if (r.hv_value) rj["hv"] = *r.hv_value;
        rj["wall_seconds"] = r.wall_seconds;
        if (r.failed) rj["error"] = r.error;
        reps.push_back(std::move(rj));
        wall += r.wall_seconds;
    }
    j["wall_seconds_total"] = wall;
    j["runs"] = std::move(reps);
    return j;
}

void write_text_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << contents;
    if (!out) throw std::runtime_error("short write to '" + path.string() + "'");
}

}  // namespace

void export_results(const ExperimentResult& result, const ExperimentConfig& config) {
    if (result.cells.empty()) throw std::invalid_argument("export_results: no cells");
    const fs::path out_dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + out_dir.string() + "'");
    }

    // results.csv: one row per replication; wall times stay out so repeat
    // runs produce byte-identical files.
    std::string csv = "problem,m,threshold,len,rep,seed,fe,igd,hv\n";
    for (const auto& cell : result.cells) {
        for (const auto& r : cell.replications) {
            csv += cell.problem + ",";
            csv += std::to_string(cell.num_objectives) + ",";
            csv += (cell.sweep_threshold ? format_double(*cell.sweep_threshold) : "") + ",";
            csv += (cell.sweep_len ? std::to_string(*cell.sweep_len) : "") + ",";
            csv += std::to_string(r.replication) + ",";
            csv += std::to_string(r.seed) + ",";
            csv += std::to_string(r.evaluations) + ",";
            csv += (r.igd_value ? format_double(*r.igd_value) : "") + ",";
            csv += (r.hv_value ? format_double(*r.hv_value) : "");
            csv += "\n";
        }
    }
    write_text_file(out_dir / "results.csv", csv);

    json summary;
    summary["base_seed"] = config.base_seed;
    summary["replications"] = config.replications;
    summary["metric"] = metric_name(config.metric);
    summary["cells"] = json::array();
    for (const auto& cell : result.cells) summary["cells"].push_back(cell_to_json(cell));
    write_text_file(out_dir / "summary.json", summary.dump(2) + "\n");

    // Sweep runs additionally get the flat mean-IGD table.
    const bool is_sweep =
        std::any_of(result.cells.begin(), result.cells.end(),
                    [](const CellResult& c) { return c.sweep_threshold.has_value(); });
    if (is_sweep) {
        std::string sweep_csv = "problem,m,threshold,len,mean_igd,std_igd,failures\n";
        for (const auto& cell : result.cells) {
            sweep_csv += cell.problem + ",";
            sweep_csv += std::to_string(cell.num_objectives) + ",";
            sweep_csv += (cell.sweep_threshold ? format_double(*cell.sweep_threshold) : "") + ",";
            sweep_csv += (cell.sweep_len ? std::to_string(*cell.sweep_len) : "") + ",";
            sweep_csv += (cell.mean_igd() ? format_double(*cell.mean_igd()) : "") + ",";
            sweep_csv += (cell.std_igd() ? format_double(*cell.std_igd()) : "") + ",";
            sweep_csv += std::to_string(cell.failure_count());
            sweep_csv += "\n";
        }
        write_text_file(out_dir / "sweep.csv", sweep_csv);
    }

    const fs::path front_dir = out_dir / "fronts";
    fs::create_directories(front_dir, ec);
    for (const auto& cell : result.cells) {
        for (const auto& r : cell.replications) {
            if (r.failed) continue;
            std::string text = "# m=" + std::to_string(cell.num_objectives) + "\n";
            for (const auto& point : r.front) {
                for (std::size_t i = 0; i < point.size(); ++i) {
                    if (i > 0) text += " ";
                    text += format_double(point[i]);
                }
                text += "\n";
            }
            char rep_name[32];
            std::snprintf(rep_name, sizeof(rep_name), "_rep%03zu.txt", r.replication);
            write_text_file(front_dir / (cell.label() + rep_name), text);
        }
    }

    if (config.trace) {
        const fs::path trace_dir = out_dir / "traces";
        fs::create_directories(trace_dir, ec);
        for (const auto& cell : result.cells) {
            for (const auto& r : cell.replications) {
                if (r.failed) continue;
                json records = json::array();
                for (const auto& t : r.trace) {
                    json tj;
                    tj["iteration"] = t.iteration;
                    tj["fe"] = t.evaluations;
                    tj["ideal"] = t.ideal;
                    tj["nadir"] = t.nadir;
                    tj["delta"] = t.delta;
                    tj["corners"] = t.corner_count;
                    if (t.igd) tj["igd"] = *t.igd;
                    records.push_back(std::move(tj));
                }
                char rep_name[32];
                std::snprintf(rep_name, sizeof(rep_name), "_rep%03zu.json", r.replication);
                write_text_file(trace_dir / (cell.label() + rep_name),
                                records.dump(2) + "\n");
            }
        }
    }
}

}  // namespace maocs
