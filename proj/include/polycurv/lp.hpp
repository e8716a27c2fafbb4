#pragma once

// Exact feasibility of small linear systems with strict, weak and equality
// constraints, via a dense rational simplex with Bland's rule.

#include "polycurv/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace polycurv {

enum class Relation { LessEqual, Less, Equal };

/// <normal, x> (relation) rhs
struct LinearConstraint {
    RatVector normal;
    Rational rhs;
    Relation relation = Relation::LessEqual;
};

struct LpResult {
    bool feasible = false;
    RatVector witness;  // meaningful only when feasible
    explicit operator bool() const { return feasible; }
};

namespace detail {

/// Maximises cost.y subject to rows.y = rhs, y >= 0, rhs >= 0.
/// Returns the optimal y, or nullopt when infeasible. The caller guarantees
/// boundedness.
class DenseSimplex {
public:
    DenseSimplex(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs)
        : t_(std::move(rows)), rhs_(std::move(rhs))
    {
        m_ = t_.size();
        n_ = m_ ? t_.front().size() : 0;
        // artificial columns n_ .. n_+m_-1 form the starting basis
        for (std::size_t i = 0; i < m_; ++i) {
            t_[i].resize(n_ + m_);
            t_[i][n_ + i] = 1;
            basis_.push_back(n_ + i);
        }
    }

    std::optional<std::vector<Rational>> maximize(const std::vector<Rational>& cost)
    {
        std::vector<Rational> phase1(n_ + m_);
        for (std::size_t j = n_; j < n_ + m_; ++j) phase1[j] = -1;
        run(phase1, n_ + m_);
        Rational infeas = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= n_) infeas += rhs_[i];
        if (sgn(infeas) != 0) return std::nullopt;

        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(t_[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col == n_) {
                t_.erase(t_.begin() + static_cast<long>(i));
                rhs_.erase(rhs_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
                --m_;
                continue;
            }
            pivot(i, col);
            ++i;
        }

        std::vector<Rational> c2(n_ + m_);
        for (std::size_t j = 0; j < n_ && j < cost.size(); ++j) c2[j] = cost[j];
        if (!run(c2, n_)) return std::nullopt;  // unbounded: caller bug

        std::vector<Rational> y(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) y[basis_[i]] = rhs_[i];
        return y;
    }

private:
    // Returns false if unbounded. Columns >= allowed never enter.
    bool run(const std::vector<Rational>& cost, std::size_t allowed)
    {
        for (;;) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                Rational red = j < cost.size() ? cost[j] : Rational(0);
                for (std::size_t i = 0; i < m_; ++i)
                    if (sgn(t_[i][j]) != 0) red -= cost[basis_[i]] * t_[i][j];
                if (sgn(red) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed) return true;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                Rational ratio = rhs_[i] / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        Rational inv = 1 / t_[r][c];
        for (auto& x : t_[r]) x *= inv;
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(t_[i][c]) == 0) continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j < t_[i].size(); ++j)
                if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        basis_[r] = c;
    }

    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::size_t m_ = 0;
    std::size_t n_ = 0;
};

}  // namespace detail

/// Exact check that a point satisfies a constraint.
inline bool satisfies(const LinearConstraint& c, const RatVector& x)
{
    Rational lhs = dot(c.normal, x);
    switch (c.relation) {
        case Relation::LessEqual: return lhs <= c.rhs;
        case Relation::Less: return lhs < c.rhs;
        case Relation::Equal: return lhs == c.rhs;
    }
    return false;
}

/// Decides whether the system has a real (hence rational) solution and
/// returns one. Strict rows are handled by maximising a common slack t
/// added to every strict row; the system is feasible iff t* > 0.
inline LpResult lp_feasible(const std::vector<LinearConstraint>& constraints, std::size_t dim)
{
    for (const auto& c : constraints)
        if (c.normal.size() != dim) throw Error("constraint dimension mismatch");

    RatVector origin(dim);
    if (std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) { return satisfies(c, origin); }))
        return {true, std::move(origin)};

    bool has_strict = false;
    std::size_t weak_rows = 0;
    for (const auto& c : constraints) {
        if (c.relation == Relation::Less) has_strict = true;
        if (c.relation != Relation::Equal) ++weak_rows;
    }

    // Columns: x+ (dim), x- (dim), [t], slacks.
    const std::size_t t_col = 2 * dim;
    const std::size_t first_slack = t_col + (has_strict ? 1 : 0);
    const std::size_t cols = first_slack + weak_rows + (has_strict ? 1 : 0);

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::size_t slack = first_slack;
    for (const auto& c : constraints) {
        std::vector<Rational> row(cols);
        for (std::size_t j = 0; j < dim; ++j) {
            row[j] = c.normal[j];
            row[dim + j] = -c.normal[j];
        }
        if (c.relation == Relation::Less) row[t_col] = 1;
        if (c.relation != Relation::Equal) row[slack++] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(c.rhs);
    }
    if (has_strict) {  // t <= 1 keeps the objective bounded
        std::vector<Rational> row(cols);
        row[t_col] = 1;
        row[slack++] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(1);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rhs[i]) < 0) {
            for (auto& x : rows[i]) x = -x;
            rhs[i] = -rhs[i];
        }
    }

    std::vector<Rational> cost(cols);
    if (has_strict) cost[t_col] = 1;

    if (rows.empty()) return {true, RatVector(dim)};

    detail::DenseSimplex lp(std::move(rows), std::move(rhs));
    auto y = lp.maximize(cost);
    if (!y) return {false, {}};
    if (has_strict && sgn((*y)[t_col]) <= 0) return {false, {}};

    RatVector x(dim);
    for (std::size_t j = 0; j < dim; ++j) x[j] = (*y)[j] - (*y)[dim + j];
    return {true, std::move(x)};
}

inline LpResult lp_feasible(const std::vector<LinearConstraint>& constraints)
{
    if (constraints.empty()) throw Error("dimension unknown for an empty system; pass it explicitly");
    return lp_feasible(constraints, constraints.front().normal.size());
}

}  // namespace polycurv
