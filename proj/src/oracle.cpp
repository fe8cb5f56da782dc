#include "hire/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "hire/core.hpp"

namespace hire::oracle {

namespace {

struct SeqTable {
    int n, k, t;
    std::vector<double> memo;  // -1 = unset; true values are >= 0

    SeqTable(const Instance& inst, int cap, const char* what) {
        validate_instance(inst);
        n = inst.n();
        if (n > cap)
            throw std::invalid_argument(std::string("instance too large for ") + what +
                                        " oracle (n > " + std::to_string(cap) + ")");
        k = std::min(inst.k, n);
        t = std::min(inst.t, n);
        memo.assign((size_t(1) << n) * (k + 1) * (t + 1), -1.0);
    }
    size_t idx(uint32_t mask, int l, int s) const {
        return (size_t(mask) * (k + 1) + l) * (t + 1) + s;
    }
};

double seq_value(const Instance& inst, SeqTable& tab, uint32_t mask, int l, int s) {
    if (l == 0 || s == 0 || mask == 0) return 0.0;
    double& slot = tab.memo[tab.idx(mask, l, s)];
    if (slot >= 0.0) return slot;
    double best = 0.0;  // stopping is always available
    for (int i = 0; i < tab.n; ++i) {
        if (!((mask >> i) & 1u)) continue;
        const Candidate& c = inst.candidates[i];
        const uint32_t rest = mask & ~(1u << i);
        const double val = c.p * (c.v + seq_value(inst, tab, rest, l - 1, s - 1)) +
                           (1.0 - c.p) * seq_value(inst, tab, rest, l, s - 1);
        best = std::max(best, val);
    }
    return slot = best;
}

}  // namespace

double opt_sequential(const Instance& inst) {
    if (inst.has_budget())
        throw std::invalid_argument("sequential oracle does not take budgeted instances");
    SeqTable tab(inst, seq_cap, "sequential");
    return seq_value(inst, tab, (uint32_t(1) << tab.n) - 1, tab.k, tab.t);
}

std::vector<int> opt_sequential_first_offers(const Instance& inst) {
    if (inst.has_budget())
        throw std::invalid_argument("sequential oracle does not take budgeted instances");
    SeqTable tab(inst, seq_cap, "sequential");
    const uint32_t full = (uint32_t(1) << tab.n) - 1;
    const double opt = seq_value(inst, tab, full, tab.k, tab.t);
    std::vector<int> firsts;
    for (int i = 0; i < tab.n; ++i) {
        const Candidate& c = inst.candidates[i];
        const uint32_t rest = full & ~(1u << i);
        const double val = c.p * (c.v + seq_value(inst, tab, rest, tab.k - 1, tab.t - 1)) +
                           (1.0 - c.p) * seq_value(inst, tab, rest, tab.k, tab.t - 1);
        if (val >= opt - 1e-9) firsts.push_back(i);
    }
    return firsts;
}

namespace {

struct ParTable {
    int n, k, t;
    std::vector<double> memo;

    explicit ParTable(const Instance& inst) {
        validate_instance(inst);
        n = inst.n();
        if (n > par_cap)
            throw std::invalid_argument("instance too large for parallel oracle (n > " +
                                        std::to_string(par_cap) + ")");
        k = std::min(inst.k, n);
        t = inst.t;  // parallel steps are not interchangeable with offers
        memo.assign((size_t(1) << n) * (k + 1) * (t + 1), -1.0);
    }
    size_t idx(uint32_t mask, int l, int s) const {
        return (size_t(mask) * (k + 1) + l) * (t + 1) + s;
    }
};

double par_value(const Instance& inst, ParTable& tab, uint32_t mask, int l, int s) {
    if (l == 0 || s == 0 || mask == 0) return 0.0;
    double& slot = tab.memo[tab.idx(mask, l, s)];
    if (slot >= 0.0) return slot;

    double best = 0.0;
    // Actions: nonempty subsets A of the remaining pool with |A| <= l.
    for (uint32_t a = mask; a; a = (a - 1) & mask) {
        if (std::popcount(a) > l) continue;
        double immediate = 0.0;
        std::vector<double> count_dist{1.0};  // acceptance-count distribution over A
        for (int i = 0; i < tab.n; ++i) {
            if (!((a >> i) & 1u)) continue;
            const Candidate& c = inst.candidates[i];
            immediate += c.p * c.v;
            count_dist.push_back(0.0);
            for (int j = static_cast<int>(count_dist.size()) - 1; j >= 1; --j)
                count_dist[j] = count_dist[j] * (1.0 - c.p) + count_dist[j - 1] * c.p;
            count_dist[0] *= 1.0 - c.p;
        }
        double val = immediate;
        const uint32_t rest = mask & ~a;
        for (size_t j = 0; j < count_dist.size(); ++j)
            if (count_dist[j] > 0.0)
                val += count_dist[j] * par_value(inst, tab, rest, l - static_cast<int>(j), s - 1);
        best = std::max(best, val);
    }
    return slot = best;
}

}  // namespace

double opt_parallel(const Instance& inst) {
    if (inst.has_budget())
        throw std::invalid_argument("parallel oracle does not take budgeted instances");
    ParTable tab(inst);
    return par_value(inst, tab, (uint32_t(1) << tab.n) - 1, tab.k, tab.t);
}

namespace {

struct KnapMemo {
    const Instance& inst;
    int n;
    std::unordered_map<uint64_t, double> memo;

    explicit KnapMemo(const Instance& inst_) : inst(inst_) {
        validate_instance(inst);
        if (!inst.has_budget())
            throw std::invalid_argument("knapsack oracle requires a budgeted instance");
        n = inst.n();
        if (n > knap_cap)
            throw std::invalid_argument("instance too large for knapsack oracle (n > " +
                                        std::to_string(knap_cap) + ")");
        if (inst.t > 2000)
            throw std::invalid_argument("instance too large for knapsack oracle (t > 2000)");
    }

    // Budget is continuous; key it at nanobudget resolution to stay exact.
    static uint64_t key(uint32_t mask, int s, double b) {
        const int64_t nano = std::llround(std::max(0.0, b) * 1e9);
        return (uint64_t(mask) << 42) | (uint64_t(s) << 31) | uint64_t(nano);
    }

    double value(uint32_t mask, int s, double b) {
        if (s == 0 || mask == 0 || b <= 0.0) return 0.0;
        const uint64_t k = key(mask, s, b);
        if (const auto it = memo.find(k); it != memo.end()) return it->second;
        double best = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!((mask >> i) & 1u)) continue;
            const Candidate& c = inst.candidates[i];
            const double size = *c.s;
            if (size > b + 1e-12) continue;  // cannot fit: never probed
            const uint32_t rest = mask & ~(1u << i);
            const double val = c.p * (c.v + value(rest, s - 1, b - size)) +
                               (1.0 - c.p) * value(rest, s - 1, b);
            best = std::max(best, val);
        }
        memo.emplace(k, best);
        return best;
    }
};

}  // namespace

double opt_knapsack(const Instance& inst) {
    KnapMemo memo(inst);
    return memo.value((uint32_t(1) << memo.n) - 1, inst.t, 1.0);
}

double eval_fixed_sequence(const Instance& inst, std::span<const int> seq, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (static_cast<int>(seq.size()) > inst.t)
        throw std::invalid_argument("sequence longer than the deadline");
    std::vector<uint8_t> seen(inst.n(), 0);
    for (int id : seq) {
        if (id < 0 || id >= inst.n()) throw std::invalid_argument("candidate id out of range");
        if (seen[id]++) throw std::invalid_argument("duplicate candidate in sequence");
    }
    // dist[c] = Pr[c acceptances so far], truncated at k (mass at >= k is
    // dropped: no further value accrues there).
    std::vector<double> dist(k, 0.0);
    dist[0] = 1.0;
    double value = 0.0;
    for (int id : seq) {
        const Candidate& c = inst.candidates[id];
        double open = 0.0;
        for (double d : dist) open += d;
        value += open * c.p * c.v;
        for (int j = k - 1; j >= 1; --j) dist[j] = dist[j] * (1.0 - c.p) + dist[j - 1] * c.p;
        dist[0] *= 1.0 - c.p;
    }
    return value;
}

NonadaptiveResult best_nonadaptive(const Instance& inst) {
    validate_instance(inst);
    if (inst.has_budget())
        throw std::invalid_argument("non-adaptive oracle does not take budgeted instances");
    const int n = inst.n();
    if (n > 7)
        throw std::invalid_argument("instance too large for non-adaptive oracle (n > 7)");

    const std::vector<int> order = value_sort(inst);
    NonadaptiveResult best;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > inst.t) continue;
        std::vector<int> seq;
        for (int id : order)
            if ((mask >> id) & 1u) seq.push_back(id);
        const double val = eval_fixed_sequence(inst, seq, inst.k);
        if (val > best.value) {
            best.value = val;
            best.sequence = std::move(seq);
        }
    }
    return best;
}

}  // namespace hire::oracle
