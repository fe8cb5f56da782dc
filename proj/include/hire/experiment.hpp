#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "hire/core.hpp"
#include "hire/rng.hpp"

namespace hire::experiment {

enum class GreedyKey { expected_value, value };

// Full candidate ordering by p*v (GE) or v (GV), ties by index; executed
// sequentially until k acceptances or t offers.
std::vector<int> greedy_baseline(const Instance& inst, GreedyKey key);

// A named offer strategy. exact_value is set when the expected value has a
// closed form; simulate runs one realization and returns the realized value.
struct Strategy {
    std::string name;
    std::optional<double> exact_value;
    std::function<double(const Instance&, Rng&)> simulate;
};

struct StrategyOptions {
    int paralg_samples = 100;   // best-of sample count
    long mLstar_trials = 1000;  // simulated m_L* trials
};

// seqalg | paralg | parheur | GE | GV | LP | inf | approx | greedy.
// build_rng feeds the randomized constructions (paralg paths, parheur
// partition, simulated m_L*).
Strategy make_strategy(const std::string& name, const Instance& inst, Rng& build_rng,
                       const StrategyOptions& opts = {});

// Closed form when available, otherwise trials independent simulations
// with per-trial seeds mixed from (master_seed, trial index, name tag).
EvalResult mc_evaluate(const Strategy& strategy, const Instance& inst, long trials,
                       uint64_t master_seed);

struct SweepSpec {
    std::vector<Candidate> candidates;
    int k = 1;
    std::optional<double> budget;
    std::vector<int> t_values;
    std::vector<std::string> algorithms;
    long trials = 2000;
    uint64_t master_seed = 0;
    StrategyOptions options;
};

struct SweepRow {
    std::string algorithm;
    int t = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
    long trials = 0;  // 0 for closed-form rows
    uint64_t seed = 0;
};

// One row per (t, algorithm); all randomness is derived from the spec, so
// identical specs produce identical rows.
std::vector<SweepRow> sweep(const SweepSpec& spec);

// The simulation configurations behind the paper-style figures:
// neg | pos | none (n=100, k=20, t in 20..100) and knapsack (n=100).
SweepSpec paper_figure_spec(const std::string& which, long trials, uint64_t master_seed);

std::string emit_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(std::istream& in);

// 800x500 line chart, one polyline per algorithm, legend included.
std::string emit_svg(const std::vector<SweepRow>& rows);

}  // namespace hire::experiment
