#pragma once

#include <string>
#include <vector>

#include "hire/core.hpp"
#include "hire/rng.hpp"

namespace hire::datagen {

enum class GenMode { neg_corr, pos_corr, no_corr, knapsack };

GenMode parse_mode(const std::string& name);  // neg | pos | none | knapsack
const char* mode_name(GenMode mode);

// Identical specs produce bit-identical instances.
struct GeneratorSpec {
    int n = 100;
    GenMode mode = GenMode::no_corr;
    uint64_t seed = 0;
    double pareto_shape = 1.5;  // knapsack sizes
    double pareto_scale = 0.01;
};

// Values uniform on [0,1]; probabilities Beta-coupled to the value:
// neg-corr Beta(10(1-v), 10v), pos-corr Beta(10v, 10(1-v)), no-corr
// Uniform[0,1]. Values are clamped to [1e-6, 1-1e-6] before forming Beta
// shapes.
std::vector<Candidate> gen_correlated(const GeneratorSpec& spec);

// Budgeted pool: sizes from a Pareto truncated to (0,1], values
// Beta(10 sqrt(s), 10(1-sqrt(s))), probabilities uniform; budget = 1.
// k is unused by the budgeted variant and set to 1.
Instance gen_knapsack(const GeneratorSpec& spec, int t = 10);

// The four named instances used throughout the test suites.
Instance example1();                                    // n=4, k=2, t=3
Instance example2(int t);                               // 2t-1 candidates, k=2
Instance gap_instance(double q = 0.63667, double v = 1e6);  // k=2, t=3
Instance lp_star(int n);                                // p=1/n, v=1, k=1, t=n

// String entry point for the CLI: example1 | example2 | gap | lp-star.
// `param` carries t for example2 and n for lp-star (ignored otherwise).
Instance special_instance(const std::string& name, int param = 0);

}  // namespace hire::datagen
