#include "hire/lp_bound.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hire {

namespace {
constexpr double kTol = 1e-9;
}

LpSolution simplex_solve(const LpProgram& program) {
    const int n = static_cast<int>(program.objective.size());
    if (static_cast<int>(program.upper.size()) != n)
        throw std::invalid_argument("objective/upper size mismatch");
    for (double c : program.objective)
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite objective coefficient");
    for (double u : program.upper)
        if (!(u >= 0.0)) throw std::invalid_argument("upper bounds must be nonnegative");

    // Rows: the aggregate constraints followed by one bound row per variable.
    const int m = static_cast<int>(program.rows.size()) + n;
    const int cols = n + m + 1;  // structural + slack + rhs
    std::vector<std::vector<double>> tab(m + 1, std::vector<double>(cols, 0.0));
    std::vector<int> basis(m);

    for (size_t r = 0; r < program.rows.size(); ++r) {
        const LpProgram::Row& row = program.rows[r];
        if (static_cast<int>(row.coeffs.size()) != n)
            throw std::invalid_argument("row size mismatch");
        if (row.rhs < 0.0)
            throw std::invalid_argument("negative rhs: zero start infeasible");
        for (int j = 0; j < n; ++j) tab[r][j] = row.coeffs[j];
        tab[r][cols - 1] = row.rhs;
    }
    for (int j = 0; j < n; ++j) {
        const int r = static_cast<int>(program.rows.size()) + j;
        tab[r][j] = 1.0;
        tab[r][cols - 1] = program.upper[j];
    }
    for (int r = 0; r < m; ++r) {
        tab[r][n + r] = 1.0;
        basis[r] = n + r;
    }
    // Objective row holds -c so that a negative entry marks an improving column.
    for (int j = 0; j < n; ++j) tab[m][j] = -program.objective[j];

    LpSolution sol;
    const int max_iters = 50 * (m + n) + 1000;
    for (;;) {
        // Bland: entering column = smallest index with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (tab[m][j] < -kTol) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        // Ratio test; ties by smallest basic variable index.
        int leave = -1;
        double best_ratio = 0.0;
        for (int r = 0; r < m; ++r) {
            if (tab[r][enter] <= kTol) continue;
            const double ratio = tab[r][cols - 1] / tab[r][enter];
            if (leave < 0 || ratio < best_ratio - kTol ||
                (ratio < best_ratio + kTol && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw std::runtime_error("simplex: unbounded program (missing box bound?)");

        const double pivot = tab[leave][enter];
        for (int j = 0; j < cols; ++j) tab[leave][j] /= pivot;
        for (int r = 0; r <= m; ++r) {
            if (r == leave) continue;
            const double factor = tab[r][enter];
            if (factor == 0.0) continue;
            for (int j = 0; j < cols; ++j) tab[r][j] -= factor * tab[leave][j];
        }
        basis[leave] = enter;

        if (++sol.iterations > max_iters)
            throw std::runtime_error("simplex: iteration limit hit after " +
                                     std::to_string(sol.iterations) + " pivots (n=" +
                                     std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }

    sol.x.assign(n, 0.0);
    for (int r = 0; r < m; ++r)
        if (basis[r] < n) sol.x[basis[r]] = tab[r][cols - 1];
    sol.value = tab[m][cols - 1];
    return sol;
}

LpProgram hiring_lp(const Instance& inst) {
    validate_instance(inst);
    if (inst.has_budget())
        throw std::invalid_argument("hiring LP does not take budgeted instances");
    const int n = inst.n();
    LpProgram lp;
    lp.objective.resize(n);
    lp.upper.assign(n, 1.0);
    LpProgram::Row probes{std::vector<double>(n, 1.0), static_cast<double>(inst.t)};
    LpProgram::Row slots{std::vector<double>(n), static_cast<double>(inst.k)};
    for (int i = 0; i < n; ++i) {
        lp.objective[i] = inst.candidates[i].p * inst.candidates[i].v;
        slots.coeffs[i] = inst.candidates[i].p;
    }
    lp.rows.push_back(std::move(probes));
    lp.rows.push_back(std::move(slots));
    return lp;
}

LpSolution solve_hiring_lp(const Instance& inst) { return simplex_solve(hiring_lp(inst)); }

LpProgram knapsack_lp(const Instance& inst) {
    validate_instance(inst);
    if (!inst.has_budget())
        throw std::invalid_argument("knapsack LP requires a budgeted instance");
    const int n = inst.n();
    LpProgram lp;
    lp.objective.resize(n);
    lp.upper.assign(n, 1.0);
    LpProgram::Row probes{std::vector<double>(n, 1.0), static_cast<double>(inst.t)};
    LpProgram::Row budget{std::vector<double>(n), 1.0};
    for (int i = 0; i < n; ++i) {
        const Candidate& c = inst.candidates[i];
        lp.objective[i] = c.p * c.v;
        budget.coeffs[i] = c.p * *c.s;
    }
    lp.rows.push_back(std::move(probes));
    lp.rows.push_back(std::move(budget));
    return lp;
}

LpSolution solve_knapsack_lp(const Instance& inst) { return simplex_solve(knapsack_lp(inst)); }

}  // namespace hire
