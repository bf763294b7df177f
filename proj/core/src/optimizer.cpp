#include "maocs/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "maocs/metrics.hpp"

namespace maocs {

AlgorithmConfig AlgorithmConfig::defaults_for(int num_objectives, int num_variables) {
    if (num_objectives < 2 || num_variables < 1) {
        throw ConfigError("defaults require m >= 2 and D >= 1");
    }
    AlgorithmConfig c;
    c.population_size = static_cast<std::size_t>(25 * num_objectives);
    c.delta0 = 0.9;
    c.switch_threshold = 0.001 * num_objectives;
    c.learning_period = 50;
    c.crossover_prob = 1.0;
    c.eta_c = 20.0;
    c.mutation_prob = 1.0 / num_variables;
    c.eta_m = 20.0;
    c.max_evaluations =
        std::max<std::uint64_t>(100000, 10000ull * static_cast<std::uint64_t>(num_variables));
    return c;
}

void AlgorithmConfig::validate() const {
    if (population_size == 0) throw ConfigError("population size must be positive");
    if (delta0 < 0.0 || delta0 > 1.0) throw ConfigError("delta0 must lie in [0, 1]");
    if (switch_threshold <= 0.0) throw ConfigError("switch threshold must be positive");
    if (learning_period < 1) throw ConfigError("learning period must be >= 1");
    if (crossover_prob < 0.0 || crossover_prob > 1.0) throw ConfigError("pc must lie in [0, 1]");
    if (mutation_prob < 0.0 || mutation_prob > 1.0) throw ConfigError("pm must lie in [0, 1]");
    if (eta_c <= 0.0 || eta_m <= 0.0) throw ConfigError("distribution indices must be positive");
    if (max_evaluations == 0) throw ConfigError("evaluation budget must be positive");
}

Optimizer::Optimizer(ProblemDefinition problem, AlgorithmConfig config)
    : problem_(std::move(problem)), config_(config), rng_(config.seed) {
    problem_.validate();
    config_.validate();
    switch_state_ =
        make_switch_state(config_.delta0, config_.learning_period, config_.switch_threshold);
}

Solution Optimizer::evaluate(DecisionVector decision) {
    Solution s;
    s.objectives = problem_.evaluate(decision);
    s.decision = std::move(decision);
    if (s.objectives.size() != static_cast<std::size_t>(problem_.num_objectives)) {
        throw std::runtime_error("evaluator for '" + problem_.name +
                                 "' returned wrong objective count");
    }
    for (double f : s.objectives) {
        if (!std::isfinite(f)) {
            throw std::runtime_error("evaluator for '" + problem_.name +
                                     "' returned a non-finite objective");
        }
    }
    s.birth_eval = ++evaluations_;
    return s;
}

void Optimizer::record_trace() {
    TraceRecord rec;
    rec.iteration = iteration_;
    rec.evaluations = evaluations_;
    rec.ideal = ideal_.values;
    rec.nadir = nadir_.values;
    rec.delta = switch_state_.delta;
    rec.corner_count = corners_.size();
    if (igd_reference_ != nullptr && !igd_reference_->empty()) {
        std::vector<ObjectiveVector> objectives;
        objectives.reserve(population_.size());
        for (const auto& s : population_) objectives.push_back(s.objectives);
        rec.igd = igd(objectives, *igd_reference_);
    }
    trace_.push_back(std::move(rec));
}

void Optimizer::initialize() {
    if (initialized_) throw std::logic_error("Optimizer::initialize called twice");
    initialized_ = true;

    Population random_population;
    random_population.reserve(config_.population_size);
    for (std::size_t i = 0; i < config_.population_size; ++i) {
        DecisionVector x(problem_.num_variables);
        for (int d = 0; d < problem_.num_variables; ++d) {
            x[d] = rng_.uniform(problem_.lower[d], problem_.upper[d]);
        }
        random_population.push_back(evaluate(std::move(x)));
    }

    // The initial population keeps only its nondominated members.
    population_ = nondominated_filter(random_population);
    ideal_ = estimate_ideal(population_);
    std::vector<std::size_t> corner_indices = corner_search_indices(
        population_, config_.translate_corner_by_ideal ? &ideal_.values : nullptr);
    corners_.clear();
    for (std::size_t i : corner_indices) corners_.push_back(population_[i]);
    nadir_ = estimate_nadir(corners_);

    iteration_ = 0;
    update_switch(switch_state_, iteration_, nadir_);
    record_trace();
}

void Optimizer::step() {
    if (!initialized_) throw std::logic_error("Optimizer::step before initialize");

    std::vector<DecisionVector> offspring_decisions =
        reproduce(population_, corners_, switch_state_, evaluations_, config_.max_evaluations,
                  config_, problem_.lower, problem_.upper, rng_);

    Population merged = population_;
    merged.reserve(population_.size() + offspring_decisions.size());
    for (auto& d : offspring_decisions) merged.push_back(evaluate(std::move(d)));

    DsaOptions options;
    options.recompute_ideal = config_.recompute_ideal;
    options.translate_corner_by_ideal = config_.translate_corner_by_ideal;
    DsaResult selected = dsa_select(merged, config_.population_size, ideal_, options);
    population_ = std::move(selected.population);
    corners_ = std::move(selected.corners);
    nadir_ = std::move(selected.nadir);

    ++iteration_;
    update_switch(switch_state_, iteration_, nadir_);
    record_trace();
}

RunResult Optimizer::result() const {
    RunResult r;
    r.final_population = population_;
    r.trace = trace_;
    r.seed = config_.seed;
    r.total_evaluations = evaluations_;
    return r;
}

RunResult run(const ProblemDefinition& problem, const AlgorithmConfig& config,
              const std::vector<ObjectiveVector>* igd_reference) {
    Optimizer optimizer(problem, config);
    optimizer.set_igd_reference(igd_reference);
    optimizer.initialize();
    while (!optimizer.finished()) optimizer.step();
    return optimizer.result();
}

}  // namespace maocs
