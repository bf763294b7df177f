#pragma once

#include <cstdint>

#include "maocs/core.hpp"

namespace maocs {

/// All optimizer parameters. `defaults_for(m, D)` fills the standard values:
/// N = 25m, delta0 = 0.9, threshold = 0.001m, len = 50, pc = 1, eta_c = 20,
/// pm = 1/D, eta_m = 20, max_fe = max(100000, 10000 D).
struct AlgorithmConfig {
    std::size_t population_size = 0;  // N
    double delta0 = 0.9;              // initial exploitative probability
    double switch_threshold = 0.0;    // absolute threshold on the nadir drift
    int learning_period = 50;         // len
    double crossover_prob = 1.0;      // pc
    double eta_c = 20.0;
    double mutation_prob = 0.0;       // pm, both mutation operators
    double eta_m = 20.0;
    std::uint64_t max_evaluations = 0;  // max_fe
    std::uint64_t seed = 1;

    // Extensions, both off by default (see DsaOptions).
    bool recompute_ideal = false;
    bool translate_corner_by_ideal = false;

    static AlgorithmConfig defaults_for(int num_objectives, int num_variables);

    void validate() const;
};

}  // namespace maocs
