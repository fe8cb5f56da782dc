#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hire/core.hpp"

namespace hire::oracle {

// Exhaustive-search caps; tables stay well under 10^7 entries.
inline constexpr int seq_cap = 12;
inline constexpr int par_cap = 8;
inline constexpr int knap_cap = 10;

// Optimal adaptive expected value with sequential offers, via
//   opt(S, l, s) = max_{i in S} p_i (v_i + opt(S\{i}, l-1, s-1))
//                              + (1-p_i) opt(S\{i}, l, s-1)
// memoized over (subset, slots, steps). Stopping is always allowed.
double opt_sequential(const Instance& inst);

// Candidate ids whose root offer attains the optimum (within 1e-9).
std::vector<int> opt_sequential_first_offers(const Instance& inst);

// Optimal adaptive expected value when each step may offer to any subset
// of remaining candidates no larger than the unfilled slot count.
double opt_parallel(const Instance& inst);

// Optimal adaptive expected value for the budgeted variant; only items
// that still fit are offerable.
double opt_knapsack(const Instance& inst);

// Expected value of offering a fixed sequence in order until k accept:
// sum_i v_i p_i Pr[fewer than k acceptances among the first i-1], with the
// acceptance-count distribution computed by exact convolution.
double eval_fixed_sequence(const Instance& inst, std::span<const int> seq, int k);

struct NonadaptiveResult {
    double value = 0.0;
    std::vector<int> sequence;
};

// Best fixed offer sequence, maximizing eval_fixed_sequence over all
// value-sorted subsets of size <= t (value order is sufficient).
NonadaptiveResult best_nonadaptive(const Instance& inst);

// Exact expectation of a realization-valued function by enumerating all
// 2^n outcome vectors.
template <typename Fn>
double exact_expected_value(const Instance& inst, Fn&& realized_value) {
    const int n = inst.n();
    if (n > 20) throw std::invalid_argument("instance too large for realization enumeration");
    AcceptanceRealization real;
    real.accepts.assign(n, 0);
    double total = 0.0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        double prob = 1.0;
        for (int i = 0; i < n; ++i) {
            const bool on = (mask >> i) & 1u;
            real.accepts[i] = on ? 1 : 0;
            prob *= on ? inst.candidates[i].p : 1.0 - inst.candidates[i].p;
        }
        if (prob == 0.0) continue;
        total += prob * realized_value(static_cast<const AcceptanceRealization&>(real));
    }
    return total;
}

}  // namespace hire::oracle
