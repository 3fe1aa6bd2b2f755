#include "thiele/core.hpp"

#include <algorithm>
#include <set>

namespace thiele {

bool ApprovalMatrix::approves(int voter, int candidate) const {
    const auto& row = approvals_by_voter[voter];
    return std::binary_search(row.begin(), row.end(), candidate);
}

ApprovalMatrix build_matrix(const std::vector<std::vector<int>>& approvals,
                            int num_candidates) {
    ApprovalMatrix m;
    m.num_voters = static_cast<int>(approvals.size());
    m.num_candidates = num_candidates;
    m.approvals_by_voter.resize(approvals.size());
    m.supporters_by_candidate.resize(num_candidates);
    for (std::size_t i = 0; i < approvals.size(); ++i) {
        std::set<int> row(approvals[i].begin(), approvals[i].end());
        for (int j : row) {
            if (j < 0 || j >= num_candidates)
                throw IndexOutOfRange("voter " + std::to_string(i + 1) +
                                      " approves candidate index " +
                                      std::to_string(j) + " outside range");
            m.supporters_by_candidate[j].push_back(static_cast<int>(i));
        }
        m.approvals_by_voter[i].assign(row.begin(), row.end());
    }
    return m;
}

Election build_election(const std::vector<std::vector<int>>& approvals,
                        int num_candidates, int committee_size) {
    if (committee_size < 1 || committee_size > num_candidates)
        throw InvalidCommitteeSize("committee size " +
                                   std::to_string(committee_size) +
                                   " not in [1, " +
                                   std::to_string(num_candidates) + "]");
    return Election{build_matrix(approvals, num_candidates), committee_size};
}

namespace {

void compute_flags(WeightSystem& w) {
    w.non_increasing = true;
    w.nonnegative = true;
    w.strictly_decreasing_positive = true;
    for (const auto& vec : w.vectors) {
        for (std::size_t l = 0; l + 1 < vec.size(); ++l) {
            if (vec[l] < vec[l + 1]) w.non_increasing = false;
            if (vec[l] <= vec[l + 1]) w.strictly_decreasing_positive = false;
        }
        if (!vec.empty()) {
            if (vec.back() < 0) w.nonnegative = false;
            if (vec.back() <= 0) w.strictly_decreasing_positive = false;
        }
    }
}

}  // namespace

WeightSystem make_rule_weights(
    Rule rule, const Election& election,
    const std::optional<std::vector<std::vector<Rational>>>& explicit_vectors) {
    const int n = election.matrix.num_voters;
    const int k = election.committee_size;
    WeightSystem w;
    switch (rule) {
        case Rule::Av:
            w.vectors.assign(n, std::vector<Rational>(k, Rational(1)));
            break;
        case Rule::Cc: {
            std::vector<Rational> v(k, Rational(0));
            v[0] = 1;
            w.vectors.assign(n, v);
            break;
        }
        case Rule::Pav: {
            std::vector<Rational> v(k);
            for (int l = 0; l < k; ++l) v[l] = Rational(1, l + 1);
            w.vectors.assign(n, v);
            break;
        }
        case Rule::Explicit: {
            if (!explicit_vectors)
                throw LengthMismatch("explicit rule requires weight vectors");
            if (static_cast<int>(explicit_vectors->size()) != n)
                throw LengthMismatch(
                    "expected one weight vector per voter, got " +
                    std::to_string(explicit_vectors->size()));
            for (const auto& vec : *explicit_vectors)
                if (static_cast<int>(vec.size()) != k)
                    throw LengthMismatch("weight vector length " +
                                         std::to_string(vec.size()) +
                                         " != committee size " +
                                         std::to_string(k));
            w.vectors = *explicit_vectors;
            break;
        }
    }
    compute_flags(w);
    return w;
}

Rational score_committee(const Election& election, const WeightSystem& weights,
                         const Committee& committee) {
    if (static_cast<int>(committee.members.size()) > election.committee_size)
        throw std::invalid_argument("committee larger than k");
    Rational total(0);
    for (int i = 0; i < election.matrix.num_voters; ++i) {
        const auto& row = election.matrix.approvals_by_voter[i];
        std::size_t covered = 0;
        for (int j : committee.members)
            if (std::binary_search(row.begin(), row.end(), j)) ++covered;
        for (std::size_t l = 0; l < covered; ++l) total += weights.vectors[i][l];
    }
    return total;
}

}  // namespace thiele
