#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "hire/core.hpp"
#include "hire/rng.hpp"

namespace hire {

// Value-ordered offer policy from the recurrence
//
//   S(i, l, s) = max{ p_i (v_i + S(i+1, l-1, s-1)) + (1-p_i) S(i+1, l, s-1),
//                     S(i+1, l, s) }
//
// over candidates sorted by non-increasing value. Declining a candidate
// costs no time; an offer consumes one step. Slots and horizon are clamped
// to n (an optimal strategy never needs more offers than candidates).
struct SequentialPolicy {
    std::vector<int> order;  // value-sorted candidate ids
    std::vector<double> p;   // acceptance probabilities in sorted order
    std::vector<double> v;   // values in sorted order
    int n = 0;
    int slots = 0;    // min(k, n)
    int horizon = 0;  // min(t, n)

    std::vector<double> table;   // S, flattened (n+1) x (slots+1) x (horizon+1)
    std::vector<uint8_t> offer;  // 1 where the offer branch attains the max

    size_t idx(int i, int l, int s) const {
        return (static_cast<size_t>(i) * (slots + 1) + l) * (horizon + 1) + s;
    }
    double at(int i, int l, int s) const { return table[idx(i, l, s)]; }
    bool offer_at(int i, int l, int s) const { return offer[idx(i, l, s)] != 0; }
    double value() const { return at(0, slots, horizon); }
};

struct PolicyState {
    int pos = 0;    // position in sorted order
    int slots = 0;  // slots remaining
    int steps = 0;  // steps remaining
};

// DP over an explicit horizon (k, t); used directly by the parallel solver
// with horizon k*t.
SequentialPolicy solve_value_ordered(const Instance& inst, int k, int t);

// seqalg: the 2-approximate policy for the instance's own k and t.
SequentialPolicy solve_sequential(const Instance& inst);

// Optimal adaptive policy when k = 1 (offers must be value-ordered).
SequentialPolicy solve_single_slot(const Instance& inst);

// Position of the next candidate the policy offers from `state`, or
// nullopt to stop. Skipped positions consume no time.
std::optional<int> next_offer(const SequentialPolicy& policy, PolicyState state);

// Expected value of offering everyone in value order with unlimited time,
// keeping the first k acceptors; upper-bounds solve_sequential for every t.
double infinite_horizon_value(const Instance& inst);

// Realized value of running the policy against a fixed outcome vector.
double execute_policy(const SequentialPolicy& policy, const AcceptanceRealization& real);

// Table dump: i,l,s,S,offer rows (i is the 0-based position in sorted order).
void export_policy_csv(const SequentialPolicy& policy, std::ostream& out);

}  // namespace hire
