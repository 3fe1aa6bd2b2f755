#pragma once

#include <utility>
#include <vector>

#include "thiele/core.hpp"
#include "thiele/thiele_lp.hpp"

namespace thiele {

/// One weight transfer between candidate selection variables: `amount` moved
/// from the donor (whose supporter set is strictly contained in the
/// recipient's) onto the recipient.
struct ShiftStep {
    int recipient = 0;
    int donor = 0;
    Rational amount;
};

/// The subinstance left after fixing all integral selection values. The
/// fractional candidates keep their original indices in column_map;
/// residual_matrix is the induced submatrix (all voters, fractional columns
/// re-indexed 0..|C'|-1). Per voter, fixed_coverage counts approved
/// candidates already fixed into the committee, and residual_weights is the
/// weight vector shifted past that coverage.
struct ResidualInstance {
    std::vector<int> excluded;        // selection value 0
    std::vector<int> selected;        // selection value 1
    std::vector<int> column_map;      // fractional candidates, original indices
    int residual_size = 0;            // committee seats left to fill
    std::vector<int> fixed_coverage;
    WeightSystem residual_weights;
    ApprovalMatrix residual_matrix;
};

/// Full record of one solve: the LP vertex, the shifting steps, the residual
/// instance with its integral solution, and the final committee.
struct SolveTrace {
    std::vector<Rational> lp_point;
    std::vector<ShiftStep> shift_steps;
    ResidualInstance residual;
    std::vector<Rational> residual_point;
    Committee final_committee;
    Rational final_score;
};

struct SolveResult {
    Committee committee;
    Rational score;
    SolveTrace trace;
};

/// Repeatedly transfers selection weight from a dominated candidate with
/// positive value to a dominating candidate with value below one, always
/// choosing the feasible pair maximizing |N_recipient \ N_donor| (ties by
/// smallest recipient index, then smallest donor index) and transferring
/// min(1 - x_recipient, x_donor) at once. On return no feasible pair
/// remains, so the fractional-support submatrix is domination-free.
std::pair<std::vector<Rational>, std::vector<ShiftStep>> dominance_shift(
    const Election& election, std::vector<Rational> x);

/// Builds the residual instance for a post-shift x with integral total.
/// Throws NotShifted if a feasible recipient-donor pair still exists.
ResidualInstance build_residual(const Election& election,
                                const WeightSystem& weights,
                                const std::vector<Rational>& x);

/// Exact Thiele winner determination: solve the LP relaxation, shift
/// dominated weight, fix integral candidates, and solve the residual LP
/// whose basic optimum is integral on interval-structured domains. Throws
/// DomainViolation if the residual vertex is fractional (a certificate that
/// the matrix lies outside the supported domains) or, with validate_domain,
/// if the domination-free residual matrix is not candidate-interval.
SolveResult solve_thiele(const Election& election, const WeightSystem& weights,
                         bool validate_domain = false);

/// Shortcut for strictly decreasing positive weights: any basic optimal
/// solution of the full LP is already integral, so a single solve suffices.
/// Throws WeightsNotStrictlyDecreasingPositive if the weight flag fails and
/// DomainViolation if the vertex is fractional.
std::pair<Committee, Rational> solve_extreme_point(const Election& election,
                                                   const WeightSystem& weights);

}  // namespace thiele
