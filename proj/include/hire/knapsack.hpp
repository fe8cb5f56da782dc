#pragma once

#include <span>
#include <vector>

#include "hire/core.hpp"
#include "hire/rng.hpp"

namespace hire {

// Candidate i mapped into the 2-dimensional stochastic knapsack: expected
// value v' = p v, expected size mu = [p s, 1/t] against capacity [1, 1].
struct KnapsackItem {
    int index = -1;
    double vprime = 0.0;
    double mu1 = 0.0;    // p * s
    double mu2 = 0.0;    // 1 / t
    double norm1 = 0.0;  // mu1 + mu2

    double density() const;  // vprime / norm1
};

KnapsackItem expected_size(const Candidate& c, int t, int index);
std::vector<KnapsackItem> expected_sizes(const Instance& inst);

// Items with ||mu||_1 <= 1/3 sorted by non-increasing density, ties by index.
std::vector<KnapsackItem> build_small_item_list(const std::vector<KnapsackItem>& items);

// m_L = sum over the density-greedy prefix of v'_i (1 - sum_{j<=i} mu1(j)),
// factors clamped at 0. The prefix is the longest one whose ||mu||_1 total
// stays strictly below 1.
double lower_bound_mL(const std::vector<KnapsackItem>& list);
int mL_prefix_length(const std::vector<KnapsackItem>& list);

// Monte-Carlo estimate of the small-list branch's true expected value.
EvalResult estimate_mL_star(const std::vector<KnapsackItem>& list, const Instance& inst,
                            long trials, Rng& rng);

enum class KnapsackBranch { single_best, small_list };

struct KnapsackPolicy {
    KnapsackBranch branch = KnapsackBranch::single_best;
    int single_best = -1;            // item with highest v'
    std::vector<KnapsackItem> list;  // the small-item list L
    int prefix_len = 0;              // prefix used by m_L
    double m1 = 0.0;
    double mL = 0.0;  // analytic bound, or the m_L* estimate in simulated mode

    std::vector<int> probe_order() const;
};

// Two-branch policy: probe the single best item if m1 >= m_L, otherwise
// run the small-item list until the knapsack is full.
KnapsackPolicy knapsack_policy(const Instance& inst);

// Variant that replaces the analytic m_L with a simulated estimate of the
// branch's true expected value.
KnapsackPolicy knapsack_policy_simulated(const Instance& inst, long trials, Rng& rng);

// Probes `order` one item per step, at most t probes: an active item is
// hired while the hired size stays within capacity; an active item that
// would overflow is discarded and the run ends.
double simulate_knapsack(std::span<const int> order, const AcceptanceRealization& real,
                         const Instance& inst);

// Baseline variant without the termination rule: an overflowing item is
// skipped and probing continues. Carries no guarantee.
double simulate_knapsack_skip(std::span<const int> order, const AcceptanceRealization& real,
                              const Instance& inst);

// All items by non-increasing p v / s (+inf when s = 0), ties by index.
std::vector<int> greedy_density_baseline(const Instance& inst);

}  // namespace hire
