#pragma once

// Shared helpers for the test suites: instance builders, random instance
// generators, and small independent reference implementations used as
// oracles for the library code.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "hire/core.hpp"
#include "hire/lp_bound.hpp"
#include "hire/rng.hpp"

namespace testutil {

inline hire::Instance make_inst(const std::vector<std::pair<double, double>>& pv, int k, int t) {
    hire::Instance inst;
    inst.k = k;
    inst.t = t;
    for (const auto& [p, v] : pv) inst.candidates.push_back({p, v, {}});
    return inst;
}

inline hire::Instance make_knap(const std::vector<std::array<double, 3>>& pvs, int t) {
    hire::Instance inst;
    inst.k = 1;
    inst.t = t;
    inst.budget = 1.0;
    for (const auto& pv : pvs) inst.candidates.push_back({pv[0], pv[1], pv[2]});
    return inst;
}

inline hire::Instance random_inst(hire::Rng& rng, int max_n, int max_k, int max_t) {
    hire::Instance inst;
    const int n = 1 + static_cast<int>(rng.uniform() * max_n);
    inst.k = 1 + static_cast<int>(rng.uniform() * max_k);
    inst.t = 1 + static_cast<int>(rng.uniform() * max_t);
    for (int i = 0; i < n; ++i) inst.candidates.push_back({rng.uniform(), rng.uniform(), {}});
    return inst;
}

inline hire::Instance random_knap(hire::Rng& rng, int max_n, int max_t) {
    hire::Instance inst;
    inst.k = 1;
    inst.t = 1 + static_cast<int>(rng.uniform() * max_t);
    inst.budget = 1.0;
    const int n = 1 + static_cast<int>(rng.uniform() * max_n);
    for (int i = 0; i < n; ++i)
        inst.candidates.push_back({rng.uniform(), rng.uniform(), rng.uniform(0.01, 1.0)});
    return inst;
}

// Plain recursion for the optimal adaptive sequential value; no memo, no
// shared code with the library oracle.
inline double opt_seq_reference(const hire::Instance& inst, uint32_t mask, int slots, int steps) {
    if (slots == 0 || steps == 0) return 0.0;
    double best = 0.0;
    for (int i = 0; i < inst.n(); ++i) {
        if (!((mask >> i) & 1u)) continue;
        const hire::Candidate& c = inst.candidates[i];
        const uint32_t rest = mask & ~(1u << i);
        best = std::max(best, c.p * (c.v + opt_seq_reference(inst, rest, slots - 1, steps - 1)) +
                                  (1.0 - c.p) * opt_seq_reference(inst, rest, slots, steps - 1));
    }
    return best;
}

inline double opt_seq_reference(const hire::Instance& inst) {
    return opt_seq_reference(inst, (1u << inst.n()) - 1, std::min(inst.k, inst.n()),
                             std::min(inst.t, inst.n()));
}

// Direct offer/skip recursion over a value-sorted order: the best adaptive
// strategy restricted to value order, evaluated without tables.
inline double value_ordered_reference(const hire::Instance& inst, const std::vector<int>& order,
                                      size_t pos, int slots, int steps) {
    if (pos == order.size() || slots == 0 || steps == 0) return 0.0;
    const hire::Candidate& c = inst.candidates[order[pos]];
    const double offer =
        c.p * (c.v + value_ordered_reference(inst, order, pos + 1, slots - 1, steps - 1)) +
        (1.0 - c.p) * value_ordered_reference(inst, order, pos + 1, slots, steps - 1);
    const double skip = value_ordered_reference(inst, order, pos + 1, slots, steps);
    return std::max(offer, skip);
}

// Vertex enumeration for programs with two aggregate rows plus box bounds:
// at a vertex at most two variables are fractional, pinned by tight rows.
inline double lp_vertex_reference(const hire::LpProgram& lp) {
    const int n = static_cast<int>(lp.objective.size());
    const auto& r0 = lp.rows.at(0);
    const auto& r1 = lp.rows.at(1);
    double best = 0.0;  // x = 0 is always feasible

    std::vector<int> state(n, 0);  // 0 = at 0, 1 = at upper, 2 = fractional
    auto feasible_value = [&](const std::vector<double>& x) -> double {
        double a = 0.0, b = 0.0, val = 0.0;
        for (int i = 0; i < n; ++i) {
            if (x[i] < -1e-9 || x[i] > lp.upper[i] + 1e-9) return -1.0;
            a += r0.coeffs[i] * x[i];
            b += r1.coeffs[i] * x[i];
            val = std::fma(lp.objective[i], x[i], val);
        }
        if (a > r0.rhs + 1e-9 || b > r1.rhs + 1e-9) return -1.0;
        return val;
    };

    const long total = static_cast<long>(std::pow(3.0, n) + 0.5);
    for (long code = 0; code < total; ++code) {
        long rem = code;
        std::vector<int> frac;
        std::vector<double> x(n, 0.0);
        for (int i = 0; i < n; ++i) {
            state[i] = rem % 3;
            rem /= 3;
            if (state[i] == 1) x[i] = lp.upper[i];
            if (state[i] == 2) frac.push_back(i);
        }
        if (frac.size() > 2) continue;

        if (frac.empty()) {
            best = std::max(best, feasible_value(x));
        } else if (frac.size() == 1) {
            const int f = frac[0];
            for (const auto* row : {&r0, &r1}) {
                if (std::abs(row->coeffs[f]) < 1e-12) continue;
                double fixed = 0.0;
                for (int i = 0; i < n; ++i)
                    if (i != f) fixed += row->coeffs[i] * x[i];
                x[f] = (row->rhs - fixed) / row->coeffs[f];
                best = std::max(best, feasible_value(x));
            }
        } else {
            const int f = frac[0], g = frac[1];
            double c0 = 0.0, c1 = 0.0;
            for (int i = 0; i < n; ++i) {
                if (i == f || i == g) continue;
                c0 += r0.coeffs[i] * x[i];
                c1 += r1.coeffs[i] * x[i];
            }
            const double a = r0.coeffs[f], b = r0.coeffs[g];
            const double c = r1.coeffs[f], d = r1.coeffs[g];
            const double det = a * d - b * c;
            if (std::abs(det) < 1e-12) continue;
            x[f] = ((r0.rhs - c0) * d - b * (r1.rhs - c1)) / det;
            x[g] = (a * (r1.rhs - c1) - (r0.rhs - c0) * c) / det;
            best = std::max(best, feasible_value(x));
        }
    }
    return best;
}

inline double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double stderr_of(const std::vector<double>& xs) {
    const double m = mean_of(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / (static_cast<double>(xs.size()) - 1.0) /
                     static_cast<double>(xs.size()));
}

}  // namespace testutil
