#pragma once

#include <vector>

#include "hire/core.hpp"

namespace hire {

// max c'x  s.t.  rows: a'x <= rhs,  0 <= x <= upper.
struct LpProgram {
    struct Row {
        std::vector<double> coeffs;
        double rhs = 0.0;
    };
    std::vector<double> objective;
    std::vector<Row> rows;
    std::vector<double> upper;
};

struct LpSolution {
    double value = 0.0;
    std::vector<double> x;
    int iterations = 0;
};

// Dense primal simplex with Bland's anti-cycling rule; box bounds become
// explicit rows, so x = 0 with slack basis is feasible and no phase 1 is
// needed (all rhs must be nonnegative).
LpSolution simplex_solve(const LpProgram& program);

// Aggregate relaxation of the hiring problem:
//   max sum p_i v_i x_i   s.t.  sum x_i <= t,  sum p_i x_i <= k,  0 <= x <= 1.
LpProgram hiring_lp(const Instance& inst);
LpSolution solve_hiring_lp(const Instance& inst);

// Budgeted analog: probe constraint sum x_i <= t and expected-size
// constraint sum p_i s_i x_i <= 1. Experimental comparator only.
LpProgram knapsack_lp(const Instance& inst);
LpSolution solve_knapsack_lp(const Instance& inst);

}  // namespace hire
