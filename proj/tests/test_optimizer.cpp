#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maocs/optimizer.hpp"
#include "maocs/problems.hpp"
#include "oracles.hpp"

using namespace maocs;

namespace {

ProblemDefinition dtlz2_problem(int m) {
    ProblemSpec spec;
    spec.family = ProblemFamily::dtlz2;
    spec.num_objectives = m;
    return make_problem(spec);
}

AlgorithmConfig small_config(const ProblemDefinition& p, std::uint64_t seed,
                             std::uint64_t max_fe) {
    AlgorithmConfig c = AlgorithmConfig::defaults_for(p.num_objectives, p.num_variables);
    c.max_evaluations = max_fe;
    c.seed = seed;
    return c;
}

bool same_population(const Population& a, const Population& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].decision != b[i].decision) return false;
        if (a[i].objectives != b[i].objectives) return false;
        if (a[i].birth_eval != b[i].birth_eval) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("initialize satisfies the population and corner contracts") {
    const ProblemDefinition problem = dtlz2_problem(3);
    AlgorithmConfig config = small_config(problem, 17, 30000);
    Optimizer optimizer(problem, config);
    optimizer.initialize();

    const Population& pop = optimizer.population();
    CHECK(pop.size() <= config.population_size);
    CHECK(!pop.empty());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        for (std::size_t j = 0; j < pop.size(); ++j) {
            if (i != j) CHECK_FALSE(dominates(pop[i].objectives, pop[j].objectives));
        }
    }
    const Population& corners = optimizer.corners();
    CHECK(corners.size() <= 2 * 3);
    for (const auto& c : corners) {
        bool found = false;
        for (const auto& s : pop) {
            if (s.decision == c.decision) found = true;
        }
        CHECK(found);
    }
    CHECK(optimizer.evaluations() == config.population_size);
}

TEST_CASE("a degenerate constant problem keeps the full random population") {
    ProblemDefinition problem;
    problem.name = "constant";
    problem.num_objectives = 2;
    problem.num_variables = 3;
    problem.lower.assign(3, 0.0);
    problem.upper.assign(3, 1.0);
    problem.evaluate = [](const DecisionVector&) { return ObjectiveVector{0.0, 0.0}; };

    AlgorithmConfig config = AlgorithmConfig::defaults_for(2, 3);
    config.population_size = 4;
    config.max_evaluations = 4;
    config.seed = 5;
    Optimizer optimizer(problem, config);
    optimizer.initialize();
    CHECK(optimizer.population().size() == 4);  // equal vectors never dominate
}

TEST_CASE("initialization is deterministic in the seed") {
    const ProblemDefinition problem = dtlz2_problem(3);
    const AlgorithmConfig config = small_config(problem, 99, 30000);
    Optimizer a(problem, config), b(problem, config);
    a.initialize();
    b.initialize();
    CHECK(same_population(a.population(), b.population()));
}

TEST_CASE("step keeps |P| = N and advances fe by N") {
    const ProblemDefinition problem = dtlz2_problem(3);
    const AlgorithmConfig config = small_config(problem, 3, 30000);
    Optimizer optimizer(problem, config);
    optimizer.initialize();
    std::uint64_t fe = optimizer.evaluations();
    for (int t = 0; t < 5; ++t) {
        optimizer.step();
        CHECK(optimizer.population().size() == config.population_size);
        CHECK(optimizer.evaluations() == fe + config.population_size);
        fe = optimizer.evaluations();
    }
}

TEST_CASE("stepping replays identically under the same seed") {
    const ProblemDefinition problem = dtlz2_problem(3);
    const AlgorithmConfig config = small_config(problem, 41, 30000);
    Optimizer a(problem, config), b(problem, config);
    a.initialize();
    b.initialize();
    for (int t = 0; t < 5; ++t) {
        a.step();
        b.step();
        CHECK(same_population(a.population(), b.population()));
        CHECK(same_population(a.corners(), b.corners()));
    }
}

TEST_CASE("run stops at the budget edge without a step when max_fe = N") {
    const ProblemDefinition problem = dtlz2_problem(2);
    AlgorithmConfig config = AlgorithmConfig::defaults_for(2, problem.num_variables);
    config.population_size = 20;
    config.max_evaluations = 20;
    config.seed = 1;
    const RunResult result = run(problem, config);
    CHECK(result.total_evaluations == 20);
    CHECK(result.trace.size() == 1);  // initialization record only
}

TEST_CASE("the budget overshoot is bounded by one batch") {
    const ProblemDefinition problem = dtlz2_problem(2);
    AlgorithmConfig config = AlgorithmConfig::defaults_for(2, problem.num_variables);
    config.population_size = 30;
    config.max_evaluations = 100;  // not a multiple of N
    config.seed = 2;
    const RunResult result = run(problem, config);
    CHECK(result.total_evaluations >= 100);
    CHECK(result.total_evaluations < 100 + 30);
}

TEST_CASE("a short DTLZ2 run yields a nondominated population near the front") {
    const ProblemDefinition problem = dtlz2_problem(3);
    const AlgorithmConfig config = small_config(problem, 2026, 5000);
    const RunResult result = run(problem, config);
    CHECK(result.final_population.size() == config.population_size);
    for (std::size_t i = 0; i < result.final_population.size(); ++i) {
        for (std::size_t j = 0; j < result.final_population.size(); ++j) {
            if (i != j) {
                CHECK_FALSE(dominates(result.final_population[i].objectives,
                                      result.final_population[j].objectives));
            }
        }
        for (double f : result.final_population[i].objectives) {
            CHECK(f >= 0.0);
            CHECK(f <= 3.0);
        }
    }
}

TEST_CASE("full runs are bitwise reproducible") {
    const ProblemDefinition problem = dtlz2_problem(3);
    const AlgorithmConfig config = small_config(problem, 31337, 4000);
    const RunResult a = run(problem, config);
    const RunResult b = run(problem, config);
    CHECK(same_population(a.final_population, b.final_population));
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t t = 0; t < a.trace.size(); ++t) {
        CHECK(a.trace[t].ideal == b.trace[t].ideal);
        CHECK(a.trace[t].nadir == b.trace[t].nadir);
        CHECK(a.trace[t].delta == b.trace[t].delta);
        CHECK(a.trace[t].corner_count == b.trace[t].corner_count);
    }
    CHECK(a.total_evaluations == b.total_evaluations);
    CHECK(a.seed == b.seed);
}

TEST_CASE("trace invariants: fe accounting, ideal monotone, delta latches once") {
    const ProblemDefinition problem = dtlz2_problem(3);
    AlgorithmConfig config = small_config(problem, 7, 8000);
    config.learning_period = 10;  // give the latch a chance to fire in-budget
    const RunResult result = run(problem, config);

    REQUIRE(!result.trace.empty());
    CHECK(result.trace.front().evaluations == config.population_size);
    for (std::size_t t = 1; t < result.trace.size(); ++t) {
        const auto& prev = result.trace[t - 1];
        const auto& cur = result.trace[t];
        CHECK(cur.iteration == prev.iteration + 1);
        CHECK(cur.evaluations == prev.evaluations + config.population_size);
        for (std::size_t i = 0; i < cur.ideal.size(); ++i) {
            CHECK(cur.ideal[i] <= prev.ideal[i]);  // running minimum
        }
        CHECK(cur.corner_count <= 2 * 3);
    }
    CHECK(result.total_evaluations == result.trace.back().evaluations);

    // delta takes at most two values, in order delta0 then 1 - delta0.
    bool switched = false;
    for (const auto& rec : result.trace) {
        if (!switched && rec.delta != config.delta0) switched = true;
        if (switched) CHECK(rec.delta == doctest::Approx(1.0 - config.delta0));
    }
}

TEST_CASE("non-finite evaluator output aborts the run with a diagnostic") {
    ProblemDefinition problem;
    problem.name = "broken";
    problem.num_objectives = 2;
    problem.num_variables = 2;
    problem.lower.assign(2, 0.0);
    problem.upper.assign(2, 1.0);
    problem.evaluate = [](const DecisionVector& x) {
        return ObjectiveVector{x[0], std::numeric_limits<double>::quiet_NaN()};
    };
    AlgorithmConfig config = AlgorithmConfig::defaults_for(2, 2);
    config.population_size = 4;
    config.max_evaluations = 8;
    config.seed = 3;
    CHECK_THROWS_AS(run(problem, config), std::runtime_error);
}
