#include "thiele/thiele_lp.hpp"

#include <stdexcept>

namespace thiele {

ThieleLp build_lp(const Election& election, const WeightSystem& weights) {
    if (!weights.non_increasing)
        throw WeightsNotNonIncreasing("weight vectors must be non-increasing");
    if (!weights.nonnegative)
        throw WeightsNegative("weight vectors must be nonnegative");

    const int n = election.matrix.num_voters;
    const int m = election.matrix.num_candidates;
    const int k = election.committee_size;

    ThieleLp lp;
    lp.num_voters = n;
    lp.num_candidates = m;
    lp.committee_size = k;
    lp.problem = LpProblem::with_unit_box(m + n * k);

    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l)
            lp.problem.objective[lp.y_index(i, l)] = weights.vectors[i][l];

    LpRow size_row;
    size_row.coefficients.assign(lp.problem.num_vars, Rational(0));
    for (int j = 0; j < m; ++j) size_row.coefficients[lp.x_index(j)] = 1;
    size_row.rhs = k;
    lp.problem.eq_constraints.push_back(std::move(size_row));

    for (int i = 0; i < n; ++i) {
        LpRow row;
        row.coefficients.assign(lp.problem.num_vars, Rational(0));
        for (int j : election.matrix.approvals_by_voter[i])
            row.coefficients[lp.x_index(j)] = 1;
        for (int l = 0; l < k; ++l) row.coefficients[lp.y_index(i, l)] = -1;
        row.rhs = 0;
        lp.problem.eq_constraints.push_back(std::move(row));
    }
    return lp;
}

std::vector<std::vector<Rational>> canonicalize_y(const Election& election,
                                                  const std::vector<Rational>& x) {
    const int m = election.matrix.num_candidates;
    const int k = election.committee_size;
    if (static_cast<int>(x.size()) != m)
        throw std::invalid_argument("x length != number of candidates");
    for (const Rational& v : x)
        if (v < 0 || v > 1) throw std::invalid_argument("x entry outside [0,1]");

    std::vector<std::vector<Rational>> y;
    y.reserve(election.matrix.num_voters);
    for (const auto& approved : election.matrix.approvals_by_voter) {
        Rational r(0);
        for (int j : approved) r += x[j];
        if (r > k)
            throw RepresentationOverflow("representation value " +
                                         rational_to_string(r) + " exceeds k");
        const int whole = static_cast<int>(rational_floor(r));
        std::vector<Rational> yi(k, Rational(0));
        for (int l = 0; l < whole; ++l) yi[l] = 1;
        Rational frac = r - whole;
        if (frac != 0) yi[whole] = std::move(frac);
        y.push_back(std::move(yi));
    }
    return y;
}

Rational fractional_objective(const Election& election,
                              const WeightSystem& weights,
                              const std::vector<Rational>& x) {
    auto y = canonicalize_y(election, x);
    Rational total(0);
    for (int i = 0; i < election.matrix.num_voters; ++i)
        for (int l = 0; l < election.committee_size; ++l)
            if (y[i][l] != 0) total += weights.vectors[i][l] * y[i][l];
    return total;
}

}  // namespace thiele
