#pragma once

#include <vector>

#include "thiele/rational.hpp"

namespace thiele {

/// One equality constraint: coefficients (dense, length num_vars) and the
/// right-hand side.
struct LpRow {
    std::vector<Rational> coefficients;
    Rational rhs;
};

/// Closed interval bound on one variable.
struct LpBounds {
    Rational lower;
    Rational upper;
};

/// A maximization LP in equality-plus-box form:
///   maximize  c . v   subject to   A v = b,  lower <= v <= upper.
/// Bounds default to [0, 1] per variable.
struct LpProblem {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<LpRow> eq_constraints;
    std::vector<LpBounds> var_bounds;

    static LpProblem with_unit_box(int num_vars);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Result of solve(). When status is Optimal, point is a basic solution:
/// a vertex of the feasible polytope, certified by basic_vars (the basic
/// variable set) together with the tight bound chosen for each nonbasic
/// variable (at_upper).
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> point;
    Rational objective_value;
    std::vector<int> basic_vars;
    std::vector<bool> at_upper;
};

/// Solves the LP with an exact bounded-variable revised simplex. Box bounds
/// are handled natively (no slack rows); phase 1 uses auxiliary variables on
/// the equality rows. Pivoting is most-negative-reduced-cost with a switch
/// to Bland's rule under prolonged degeneracy, so the solver cannot cycle.
/// All tie-breaking is by lowest variable index; output is deterministic.
LpSolution solve(const LpProblem& problem);

/// True iff point is feasible and the active constraints (all equality rows
/// plus the tight variable bounds) have rank num_vars, i.e. the point is a
/// vertex of the feasible polytope.
bool verify_vertex(const LpProblem& problem,
                   const std::vector<Rational>& point);

/// True iff all equality constraints hold exactly and every variable lies
/// within its bounds.
bool check_feasible(const LpProblem& problem,
                    const std::vector<Rational>& point);

}  // namespace thiele
