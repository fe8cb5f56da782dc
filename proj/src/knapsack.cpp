#include "hire/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hire {

namespace {

void require_budgeted(const Instance& inst) {
    validate_instance(inst);
    if (!inst.has_budget())
        throw std::invalid_argument("knapsack solver requires a budgeted instance");
}

}  // namespace

double KnapsackItem::density() const {
    return norm1 > 0.0 ? vprime / norm1 : std::numeric_limits<double>::infinity();
}

KnapsackItem expected_size(const Candidate& c, int t, int index) {
    if (!c.s) throw std::invalid_argument("candidate has no size");
    KnapsackItem item;
    item.index = index;
    item.vprime = c.p * c.v;
    item.mu1 = c.p * *c.s;
    item.mu2 = 1.0 / t;
    item.norm1 = item.mu1 + item.mu2;
    return item;
}

std::vector<KnapsackItem> expected_sizes(const Instance& inst) {
    require_budgeted(inst);
    std::vector<KnapsackItem> items;
    items.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i)
        items.push_back(expected_size(inst.candidates[i], inst.t, i));
    return items;
}

std::vector<KnapsackItem> build_small_item_list(const std::vector<KnapsackItem>& items) {
    std::vector<KnapsackItem> list;
    for (const KnapsackItem& item : items)
        if (item.norm1 <= 1.0 / 3.0) list.push_back(item);
    std::stable_sort(list.begin(), list.end(), [](const KnapsackItem& a, const KnapsackItem& b) {
        return a.density() > b.density();
    });
    return list;
}

int mL_prefix_length(const std::vector<KnapsackItem>& list) {
    double total = 0.0;
    int len = 0;
    for (const KnapsackItem& item : list) {
        total += item.norm1;
        if (total >= 1.0) break;
        ++len;
    }
    return len;
}

double lower_bound_mL(const std::vector<KnapsackItem>& list) {
    const int len = mL_prefix_length(list);
    double bound = 0.0, mu1_sum = 0.0;
    for (int i = 0; i < len; ++i) {
        mu1_sum += list[i].mu1;
        bound += list[i].vprime * std::max(0.0, 1.0 - mu1_sum);
    }
    return bound;
}

EvalResult estimate_mL_star(const std::vector<KnapsackItem>& list, const Instance& inst,
                            long trials, Rng& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<int> order;
    order.reserve(list.size());
    for (const KnapsackItem& item : list) order.push_back(item.index);

    double sum = 0.0, sumsq = 0.0;
    for (long trial = 0; trial < trials; ++trial) {
        const AcceptanceRealization real = sample_realization(inst, rng);
        const double x = simulate_knapsack(order, real, inst);
        sum += x;
        sumsq += x * x;
    }
    EvalResult res;
    res.trials = trials;
    res.mean = sum / trials;
    if (trials > 1) {
        const double var = std::max(0.0, (sumsq - sum * sum / trials) / (trials - 1));
        res.stderr_ = std::sqrt(var / trials);
    }
    return res;
}

std::vector<int> KnapsackPolicy::probe_order() const {
    if (branch == KnapsackBranch::single_best)
        return single_best >= 0 ? std::vector<int>{single_best} : std::vector<int>{};
    std::vector<int> order;
    order.reserve(list.size());
    for (const KnapsackItem& item : list) order.push_back(item.index);
    return order;
}

static KnapsackPolicy make_policy(const Instance& inst, double mL_or_estimate,
                                  std::vector<KnapsackItem> list) {
    KnapsackPolicy pol;
    pol.list = std::move(list);
    pol.prefix_len = mL_prefix_length(pol.list);
    pol.mL = mL_or_estimate;

    const std::vector<KnapsackItem> items = expected_sizes(inst);
    pol.m1 = 0.0;
    pol.single_best = 0;
    for (const KnapsackItem& item : items)
        if (item.vprime > pol.m1) {
            pol.m1 = item.vprime;
            pol.single_best = item.index;
        }
    pol.branch = pol.m1 >= pol.mL ? KnapsackBranch::single_best : KnapsackBranch::small_list;
    return pol;
}

KnapsackPolicy knapsack_policy(const Instance& inst) {
    require_budgeted(inst);
    std::vector<KnapsackItem> list = build_small_item_list(expected_sizes(inst));
    const double mL = lower_bound_mL(list);
    return make_policy(inst, mL, std::move(list));
}

KnapsackPolicy knapsack_policy_simulated(const Instance& inst, long trials, Rng& rng) {
    require_budgeted(inst);
    std::vector<KnapsackItem> list = build_small_item_list(expected_sizes(inst));
    const double mL_star = estimate_mL_star(list, inst, trials, rng).mean;
    return make_policy(inst, mL_star, std::move(list));
}

double simulate_knapsack(std::span<const int> order, const AcceptanceRealization& real,
                         const Instance& inst) {
    double value = 0.0, used = 0.0;
    int probes = 0;
    for (int id : order) {
        if (probes >= inst.t) break;
        ++probes;
        if (!real.accepts[id]) continue;
        const double s = *inst.candidates[id].s;
        if (used + s > 1.0) break;  // overflow: item discarded, run ends
        used += s;
        value += inst.candidates[id].v;
        if (used >= 1.0) break;  // capacity exactly met
    }
    return value;
}

double simulate_knapsack_skip(std::span<const int> order, const AcceptanceRealization& real,
                              const Instance& inst) {
    double value = 0.0, used = 0.0;
    int probes = 0;
    for (int id : order) {
        if (probes >= inst.t) break;
        ++probes;
        if (!real.accepts[id]) continue;
        const double s = *inst.candidates[id].s;
        if (used + s > 1.0) continue;  // skip and keep probing
        used += s;
        value += inst.candidates[id].v;
    }
    return value;
}

std::vector<int> greedy_density_baseline(const Instance& inst) {
    require_budgeted(inst);
    std::vector<int> order(inst.n());
    std::iota(order.begin(), order.end(), 0);
    auto density = [&](int i) {
        const Candidate& c = inst.candidates[i];
        const double s = *c.s;
        return s > 0.0 ? c.p * c.v / s : std::numeric_limits<double>::infinity();
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return density(a) > density(b); });
    return order;
}

}  // namespace hire
