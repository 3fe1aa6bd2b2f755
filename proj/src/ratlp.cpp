#include "thiele/ratlp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace thiele {

LpProblem LpProblem::with_unit_box(int num_vars) {
    LpProblem p;
    p.num_vars = num_vars;
    p.objective.assign(num_vars, Rational(0));
    p.var_bounds.assign(num_vars, LpBounds{Rational(0), Rational(1)});
    return p;
}

namespace {

void validate(const LpProblem& p) {
    if (p.num_vars < 0) throw std::invalid_argument("negative num_vars");
    if (static_cast<int>(p.objective.size()) != p.num_vars)
        throw std::invalid_argument("objective length != num_vars");
    if (static_cast<int>(p.var_bounds.size()) != p.num_vars)
        throw std::invalid_argument("var_bounds length != num_vars");
    for (const auto& b : p.var_bounds)
        if (b.lower > b.upper)
            throw std::invalid_argument("lower bound exceeds upper bound");
    for (const auto& row : p.eq_constraints)
        if (static_cast<int>(row.coefficients.size()) != p.num_vars)
            throw std::invalid_argument("constraint length != num_vars");
}

// After this many consecutive degenerate pivots the pricing switches from
// largest reduced cost to Bland's rule until the objective strictly improves.
constexpr int kDegenerateSwitch = 50;

struct ColumnEntry {
    int row;
    Rational coeff;
};

class Simplex {
  public:
    explicit Simplex(const LpProblem& p)
        : structural_(p.num_vars), rows_(static_cast<int>(p.eq_constraints.size())) {
        cols_ = structural_;
        columns_.resize(structural_);
        for (int r = 0; r < rows_; ++r)
            for (int j = 0; j < structural_; ++j)
                if (p.eq_constraints[r].coefficients[j] != 0)
                    columns_[j].push_back({r, p.eq_constraints[r].coefficients[j]});
        lo_.reserve(structural_);
        up_.reserve(structural_);
        for (const auto& b : p.var_bounds) {
            lo_.push_back(b.lower);
            up_.push_back(b.upper);
        }
        obj_ = p.objective;
        rhs_.reserve(rows_);
        for (const auto& row : p.eq_constraints) rhs_.push_back(row.rhs);
    }

    LpSolution run() {
        crash_basis();
        if (needs_phase1_) {
            std::vector<Rational> phase1(cols_, Rational(0));
            for (int j = structural_; j < cols_; ++j) phase1[j] = -1;
            optimize(phase1);
            Rational infeasibility(0);
            for (int r = 0; r < rows_; ++r)
                if (basis_[r] >= structural_) infeasibility += xb_[r];
            for (int j = structural_; j < cols_; ++j)
                if (pos_in_basis_[j] < 0 && at_upper_[j]) infeasibility += up_[j];
            if (infeasibility != 0) return LpSolution{LpStatus::Infeasible, {}, Rational(0), {}, {}};
            // Pin every auxiliary variable at zero for phase 2.
            for (int j = structural_; j < cols_; ++j) {
                up_[j] = 0;
                at_upper_[j] = false;
            }
        }
        std::vector<Rational> phase2 = obj_;
        phase2.resize(cols_, Rational(0));
        optimize(phase2);
        return extract();
    }

  private:
    // Sets every structural variable to its lower bound, then covers each
    // row with a singleton column when its implied value fits the bounds,
    // and with a fresh auxiliary variable otherwise. The resulting basis
    // matrix is diagonal, so the inverse is immediate.
    void crash_basis() {
        std::vector<Rational> residual = rhs_;
        for (int j = 0; j < structural_; ++j) {
            if (lo_[j] == 0) continue;
            for (const auto& e : columns_[j]) residual[e.row] -= e.coeff * lo_[j];
        }
        std::vector<std::vector<int>> singletons(rows_);
        for (int j = 0; j < structural_; ++j)
            if (columns_[j].size() == 1) singletons[columns_[j][0].row].push_back(j);

        basis_.assign(rows_, -1);
        at_upper_.assign(cols_, false);
        pos_in_basis_.assign(cols_, -1);
        std::vector<Rational> diag(rows_);
        needs_phase1_ = false;
        for (int r = 0; r < rows_; ++r) {
            for (int j : singletons[r]) {
                if (pos_in_basis_[j] >= 0) continue;
                Rational value = lo_[j] + residual[r] / columns_[j][0].coeff;
                if (value >= lo_[j] && value <= up_[j]) {
                    basis_[r] = j;
                    pos_in_basis_[j] = r;
                    diag[r] = columns_[j][0].coeff;
                    xb_.push_back(std::move(value));
                    break;
                }
            }
            if (basis_[r] >= 0) continue;
            // Auxiliary variable with coefficient +/-1 so its value is the
            // absolute row residual.
            int j = cols_++;
            Rational coeff = residual[r] >= 0 ? Rational(1) : Rational(-1);
            columns_.push_back({{r, coeff}});
            Rational value = residual[r] * coeff;
            lo_.push_back(Rational(0));
            up_.push_back(value);
            at_upper_.push_back(false);
            pos_in_basis_.push_back(r);
            basis_[r] = j;
            diag[r] = coeff;
            xb_.push_back(std::move(value));
            if (xb_.back() != 0) needs_phase1_ = true;
        }
        binv_.assign(rows_, std::vector<Rational>(rows_, Rational(0)));
        for (int r = 0; r < rows_; ++r) binv_[r][r] = 1 / diag[r];
    }

    // Reduced costs need y = c_B B^{-1}; zero basic costs are skipped.
    void compute_duals(const std::vector<Rational>& cost, std::vector<Rational>& y) const {
        y.assign(rows_, Rational(0));
        for (int r = 0; r < rows_; ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) continue;
            const auto& row = binv_[r];
            for (int c = 0; c < rows_; ++c)
                if (row[c] != 0) y[c] += cb * row[c];
        }
    }

    Rational reduced_cost(const std::vector<Rational>& cost, const std::vector<Rational>& y,
                          int j) const {
        Rational d = cost[j];
        for (const auto& e : columns_[j])
            if (y[e.row] != 0) d -= y[e.row] * e.coeff;
        return d;
    }

    void ftran(int j, std::vector<Rational>& w) const {
        w.assign(rows_, Rational(0));
        for (const auto& e : columns_[j])
            for (int i = 0; i < rows_; ++i)
                if (binv_[i][e.row] != 0) w[i] += binv_[i][e.row] * e.coeff;
    }

    void optimize(const std::vector<Rational>& cost) {
        std::vector<Rational> y, w;
        int degenerate_run = 0;
        bool bland = false;
        while (true) {
            compute_duals(cost, y);
            int entering = -1;
            bool increase = true;
            Rational best_score(0);
            for (int j = 0; j < cols_; ++j) {
                if (pos_in_basis_[j] >= 0 || lo_[j] == up_[j]) continue;
                Rational d = reduced_cost(cost, y, j);
                bool up_dir = !at_upper_[j];
                if (up_dir ? d <= 0 : d >= 0) continue;
                if (bland) {
                    entering = j;
                    increase = up_dir;
                    break;
                }
                Rational score = up_dir ? d : -d;
                if (entering < 0 || score > best_score) {
                    entering = j;
                    increase = up_dir;
                    best_score = std::move(score);
                }
            }
            if (entering < 0) return;  // optimal for this cost vector

            ftran(entering, w);
            // Ratio test: entering moves by t >= 0 in its direction; the
            // blocking event with the smallest t wins, ties by lowest
            // variable index (the entering variable's own span counts as a
            // candidate under its own index).
            Rational tmax = up_[entering] - lo_[entering];
            int blocking = entering;  // variable index, not row
            int blocking_row = -1;
            bool blocking_to_upper = false;
            int dir = increase ? 1 : -1;
            for (int i = 0; i < rows_; ++i) {
                if (w[i] == 0) continue;
                int bj = basis_[i];
                Rational rate = w[i] * dir;  // basic value changes by -rate * t
                Rational limit;
                bool to_upper;
                if (rate > 0) {
                    limit = (xb_[i] - lo_[bj]) / rate;
                    to_upper = false;
                } else {
                    limit = (up_[bj] - xb_[i]) / -rate;
                    to_upper = true;
                }
                if (limit < tmax || (limit == tmax && bj < blocking)) {
                    tmax = std::move(limit);
                    blocking = bj;
                    blocking_row = i;
                    blocking_to_upper = to_upper;
                }
            }

            if (tmax == 0) {
                ++degenerate_run;
                if (degenerate_run > kDegenerateSwitch) bland = true;
            } else {
                degenerate_run = 0;
                bland = false;
            }

            if (tmax != 0)
                for (int i = 0; i < rows_; ++i)
                    if (w[i] != 0) xb_[i] -= tmax * dir * w[i];

            if (blocking_row < 0) {
                at_upper_[entering] = increase;  // bound-to-bound flip
                continue;
            }
            int leaving = basis_[blocking_row];
            pos_in_basis_[leaving] = -1;
            at_upper_[leaving] = blocking_to_upper;
            basis_[blocking_row] = entering;
            pos_in_basis_[entering] = blocking_row;
            xb_[blocking_row] =
                (increase ? lo_[entering] : up_[entering]) + dir * tmax;
            pivot_update(blocking_row, w);
        }
    }

    // B^{-1} <- E B^{-1} for the elementary matrix of the pivot column w.
    void pivot_update(int r, const std::vector<Rational>& w) {
        auto& pivot_row = binv_[r];
        const Rational inv = 1 / w[r];
        for (int c = 0; c < rows_; ++c)
            if (pivot_row[c] != 0) pivot_row[c] *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || w[i] == 0) continue;
            auto& row = binv_[i];
            for (int c = 0; c < rows_; ++c)
                if (pivot_row[c] != 0) row[c] -= w[i] * pivot_row[c];
        }
    }

    LpSolution extract() const {
        LpSolution s;
        s.status = LpStatus::Optimal;
        s.point.resize(structural_);
        for (int j = 0; j < structural_; ++j) {
            int r = pos_in_basis_[j];
            s.point[j] = r >= 0 ? xb_[r] : (at_upper_[j] ? up_[j] : lo_[j]);
        }
        s.objective_value = 0;
        for (int j = 0; j < structural_; ++j)
            if (obj_[j] != 0) s.objective_value += obj_[j] * s.point[j];
        for (int r = 0; r < rows_; ++r)
            if (basis_[r] < structural_) s.basic_vars.push_back(basis_[r]);
        std::sort(s.basic_vars.begin(), s.basic_vars.end());
        s.at_upper.assign(structural_, false);
        for (int j = 0; j < structural_; ++j)
            s.at_upper[j] = pos_in_basis_[j] < 0 && at_upper_[j];
        return s;
    }

    int structural_;
    int rows_;
    int cols_;
    std::vector<std::vector<ColumnEntry>> columns_;
    std::vector<Rational> lo_, up_, obj_, rhs_;
    std::vector<int> basis_;          // row -> variable
    std::vector<int> pos_in_basis_;   // variable -> row or -1
    std::vector<bool> at_upper_;
    std::vector<Rational> xb_;
    std::vector<std::vector<Rational>> binv_;
    bool needs_phase1_ = false;
};

}  // namespace

LpSolution solve(const LpProblem& problem) {
    validate(problem);
    return Simplex(problem).run();
}

bool check_feasible(const LpProblem& problem, const std::vector<Rational>& point) {
    validate(problem);
    if (static_cast<int>(point.size()) != problem.num_vars)
        throw std::invalid_argument("point length != num_vars");
    for (int j = 0; j < problem.num_vars; ++j)
        if (point[j] < problem.var_bounds[j].lower ||
            point[j] > problem.var_bounds[j].upper)
            return false;
    for (const auto& row : problem.eq_constraints) {
        Rational lhs(0);
        for (int j = 0; j < problem.num_vars; ++j)
            if (row.coefficients[j] != 0) lhs += row.coefficients[j] * point[j];
        if (lhs != row.rhs) return false;
    }
    return true;
}

bool verify_vertex(const LpProblem& problem, const std::vector<Rational>& point) {
    if (!check_feasible(problem, point)) return false;
    // Tight bounds contribute unit rows, so the active system has full rank
    // iff the equality columns of the remaining (loose) variables are
    // linearly independent.
    std::vector<int> loose;
    for (int j = 0; j < problem.num_vars; ++j)
        if (point[j] != problem.var_bounds[j].lower &&
            point[j] != problem.var_bounds[j].upper)
            loose.push_back(j);
    if (loose.empty()) return true;
    std::vector<std::vector<Rational>> m;
    m.reserve(problem.eq_constraints.size());
    for (const auto& row : problem.eq_constraints) {
        std::vector<Rational> r(loose.size());
        for (std::size_t c = 0; c < loose.size(); ++c)
            r[c] = row.coefficients[loose[c]];
        m.push_back(std::move(r));
    }
    // Gaussian elimination; rank must reach the number of loose columns.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < loose.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) return false;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational factor = m[i][col] / m[rank][col];
            for (std::size_t c = col; c < loose.size(); ++c)
                if (m[rank][c] != 0) m[i][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return true;
}

}  // namespace thiele
