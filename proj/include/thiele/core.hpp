#pragma once

#include <optional>
#include <vector>

#include "thiele/errors.hpp"
#include "thiele/rational.hpp"

namespace thiele {

/// 0-1 approval matrix stored both row-wise and column-wise. Voters and
/// candidates are 0-based everywhere inside the library; the file formats
/// and the CLI use 1-based indices and convert at the boundary.
///
/// Invariant: i appears in supporters_by_candidate[j] iff j appears in
/// approvals_by_voter[i]; all index lists are sorted ascending.
struct ApprovalMatrix {
    int num_voters = 0;
    int num_candidates = 0;
    std::vector<std::vector<int>> approvals_by_voter;
    std::vector<std::vector<int>> supporters_by_candidate;

    bool approves(int voter, int candidate) const;
};

/// An approval election: matrix plus committee size k, 1 <= k <= m.
struct Election {
    ApprovalMatrix matrix;
    int committee_size = 0;
};

/// Per-voter weight vectors (w^i_1, ..., w^i_k). The flags summarize the
/// structural assumptions the solvers depend on, and are computed once at
/// construction.
struct WeightSystem {
    std::vector<std::vector<Rational>> vectors;
    bool non_increasing = false;
    bool nonnegative = false;
    bool strictly_decreasing_positive = false;
};

/// A set of candidates, kept sorted ascending. Solvers always return
/// committees of exactly k members.
struct Committee {
    std::vector<int> members;

    bool operator==(const Committee&) const = default;
};

enum class Rule { Av, Cc, Pav, Explicit };

/// Builds an Election from per-voter approval sets (0-based candidate
/// indices, in any order, duplicates ignored). Throws IndexOutOfRange if an
/// approval references a candidate outside [0, m), InvalidCommitteeSize if
/// k < 1 or k > m.
Election build_election(const std::vector<std::vector<int>>& approvals,
                        int num_candidates, int committee_size);

/// Builds the matrix alone (no committee-size check); same index validation
/// as build_election.
ApprovalMatrix build_matrix(const std::vector<std::vector<int>>& approvals,
                            int num_candidates);

/// Weight vectors for the classical rules: AV = (1,...,1), CC = (1,0,...,0),
/// PAV = (1, 1/2, ..., 1/k), identical across voters. For Rule::Explicit the
/// supplied vectors are validated (LengthMismatch if any has length != k)
/// and the structural flags computed.
WeightSystem make_rule_weights(
    Rule rule, const Election& election,
    const std::optional<std::vector<std::vector<Rational>>>& explicit_vectors =
        std::nullopt);

/// Thiele score of committee W: sum over voters i of
/// w^i_1 + ... + w^i_{|W cap C_i|}. Exact. Requires |W| <= k.
Rational score_committee(const Election& election, const WeightSystem& weights,
                         const Committee& committee);

}  // namespace thiele
