#include "hire/sequential_dp.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "hire/kernels/dp_kernel.hpp"

namespace hire {

SequentialPolicy solve_value_ordered(const Instance& inst, int k, int t) {
    validate_instance(inst);
    if (k < 1 || t < 1) throw std::invalid_argument("k and t must be >= 1");

    SequentialPolicy pol;
    pol.n = inst.n();
    pol.slots = std::min(k, pol.n);
    pol.horizon = std::min(t, pol.n);
    pol.order = value_sort(inst);
    pol.p.reserve(pol.n);
    pol.v.reserve(pol.n);
    for (int id : pol.order) {
        pol.p.push_back(inst.candidates[id].p);
        pol.v.push_back(inst.candidates[id].v);
    }

    const size_t cells = static_cast<size_t>(pol.n + 1) * (pol.slots + 1) * (pol.horizon + 1);
    pol.table.assign(cells, 0.0);
    pol.offer.assign(cells, 0);

    for (int i = pol.n - 1; i >= 0; --i) {
        for (int l = 1; l <= pol.slots; ++l) {
            kernels::dp_row_update(pol.p[i], pol.v[i],
                                   &pol.table[pol.idx(i + 1, l - 1, 0)],
                                   &pol.table[pol.idx(i + 1, l, 0)],
                                   &pol.table[pol.idx(i, l, 0)],
                                   &pol.offer[pol.idx(i, l, 0)], pol.horizon);
        }
    }
    return pol;
}

SequentialPolicy solve_sequential(const Instance& inst) {
    if (inst.has_budget())
        throw std::invalid_argument("sequential solver does not take budgeted instances");
    return solve_value_ordered(inst, inst.k, inst.t);
}

SequentialPolicy solve_single_slot(const Instance& inst) {
    if (inst.k != 1) throw std::invalid_argument("single-slot solver requires k = 1");
    if (inst.has_budget())
        throw std::invalid_argument("sequential solver does not take budgeted instances");
    return solve_value_ordered(inst, 1, inst.t);
}

std::optional<int> next_offer(const SequentialPolicy& policy, PolicyState state) {
    if (state.pos < 0 || state.pos > policy.n || state.slots < 0 ||
        state.slots > policy.slots || state.steps < 0 || state.steps > policy.horizon)
        throw std::out_of_range("policy state out of table bounds");
    if (state.slots == 0 || state.steps == 0) return std::nullopt;
    for (int i = state.pos; i < policy.n; ++i)
        if (policy.offer_at(i, state.slots, state.steps)) return i;
    return std::nullopt;
}

double infinite_horizon_value(const Instance& inst) {
    validate_instance(inst);
    const int n = inst.n();
    const int k = std::min(inst.k, n);
    const std::vector<int> order = value_sort(inst);

    // No skip branch: every candidate gets an offer while slots remain.
    std::vector<double> next(k + 1, 0.0), cur(k + 1, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        const Candidate& c = inst.candidates[order[i]];
        cur[0] = 0.0;
        for (int l = 1; l <= k; ++l)
            cur[l] = c.p * (c.v + next[l - 1]) + (1.0 - c.p) * next[l];
        std::swap(cur, next);
    }
    return next[k];
}

double execute_policy(const SequentialPolicy& policy, const AcceptanceRealization& real) {
    PolicyState st{0, policy.slots, policy.horizon};
    double value = 0.0;
    while (true) {
        const std::optional<int> i = next_offer(policy, st);
        if (!i) break;
        const int cand = policy.order[*i];
        st.pos = *i + 1;
        st.steps -= 1;
        if (real.accepts[cand]) {
            value += policy.v[*i];
            st.slots -= 1;
        }
    }
    return value;
}

void export_policy_csv(const SequentialPolicy& policy, std::ostream& out) {
    out << "i,l,s,S,offer\n";
    char buf[64];
    for (int i = 0; i < policy.n; ++i)
        for (int l = 0; l <= policy.slots; ++l)
            for (int s = 0; s <= policy.horizon; ++s) {
                std::snprintf(buf, sizeof buf, "%.17g", policy.at(i, l, s));
                out << i << ',' << l << ',' << s << ',' << buf << ','
                    << (policy.offer_at(i, l, s) ? 1 : 0) << '\n';
            }
}

}  // namespace hire
