#pragma once

#include <vector>

#include "thiele/core.hpp"
#include "thiele/ratlp.hpp"

namespace thiele {

/// A feasible point of the relaxation: candidate values x (length m) and
/// per-voter auxiliary values y^i (length k each), all in [0, 1].
struct FractionalSolution {
    std::vector<Rational> x;
    std::vector<std::vector<Rational>> y;
};

/// The LP relaxation of the Thiele selection program together with its
/// variable layout. Variables are ordered x_1..x_m, then y^1_1..y^1_k,
/// y^2_1..., voter-major; constraint rows are the committee-size row
/// followed by one consistency row per voter. The layout is fixed so that
/// traces and tests are reproducible.
struct ThieleLp {
    LpProblem problem;
    int num_voters = 0;
    int num_candidates = 0;
    int committee_size = 0;

    int x_index(int candidate) const { return candidate; }
    int y_index(int voter, int level) const {
        return num_candidates + voter * committee_size + level;
    }
};

/// Builds the relaxation: maximize sum_i sum_l w^i_l y^i_l subject to
/// sum_j x_j = k and, per voter, sum_{j in C_i} x_j = sum_l y^i_l, with all
/// variables in [0, 1]. Throws WeightsNotNonIncreasing / WeightsNegative if
/// the weight system violates the standing assumptions; the model would be
/// wrong without them.
ThieleLp build_lp(const Election& election, const WeightSystem& weights);

/// The dominant y for a given x: voter i with representation value
/// r_i = sum_{j in C_i} x_j gets floor(r_i) leading ones, the fractional
/// remainder in the next slot, zeros beyond. Throws RepresentationOverflow
/// if some r_i exceeds k.
std::vector<std::vector<Rational>> canonicalize_y(const Election& election,
                                                  const std::vector<Rational>& x);

/// Objective value of x, i.e. of (x, y*) with the canonical y*.
Rational fractional_objective(const Election& election,
                              const WeightSystem& weights,
                              const std::vector<Rational>& x);

}  // namespace thiele
