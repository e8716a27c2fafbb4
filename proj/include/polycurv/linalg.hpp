#pragma once

// Exact linear algebra over Q: rank, row-reduced bases, null spaces,
// orthogonal projections and affine hulls.

#include "polycurv/rational.hpp"

#include <utility>
#include <vector>

namespace polycurv {

namespace detail {

/// Scales a rational row to an integer row with the same span.
inline std::vector<Integer> integer_row(const RatVector& v)
{
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
    return out;
}

}  // namespace detail

/// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t rank(const std::vector<RatVector>& rows)
{
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != n) throw Error("matrix is not rectangular");
        m.push_back(detail::integer_row(r));
    }

    std::size_t r = 0;
    Integer prev_pivot = 1;
    for (std::size_t col = 0; col < n && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev_pivot = m[r][col];
        ++r;
    }
    return r;
}

inline std::size_t rank(const RatMatrix& m) { return rank(m.row_list()); }

/// Reduced row echelon basis of the row space. Unique for a given subspace,
/// so two subspaces are equal iff their bases compare equal.
inline std::vector<RatVector> row_basis(std::vector<RatVector> rows, std::size_t n)
{
    std::vector<RatVector> out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rational inv = 1 / rows[r][col];
        rows[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

/// Basis of {x : <row, x> = 0 for every row}.
inline std::vector<RatVector> null_space(const std::vector<RatVector>& rows, std::size_t n)
{
    auto rref = row_basis(rows, n);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (const auto& row : rref) {
        std::size_t c = 0;
        while (sgn(row[c]) == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < rref.size(); ++i) v[pivot_col[i]] = -rref[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Gram-Schmidt without normalisation; output spans the same space and is
/// pairwise orthogonal. Dependent inputs are dropped.
inline std::vector<RatVector> orthogonal_basis(const std::vector<RatVector>& vs)
{
    std::vector<RatVector> out;
    std::vector<Rational> norms;
    for (const auto& v : vs) {
        RatVector w = v;
        for (std::size_t i = 0; i < out.size(); ++i) w -= out[i] * (dot(w, out[i]) / norms[i]);
        if (w.is_zero()) continue;
        norms.push_back(dot(w, w));
        out.push_back(std::move(w));
    }
    return out;
}

/// Removes from v its components along an orthogonal basis.
inline RatVector reject(const RatVector& v, const std::vector<RatVector>& orthogonal)
{
    RatVector w = v;
    for (const auto& b : orthogonal) w -= b * (dot(v, b) / dot(b, b));
    return w;
}

struct AffineHull {
    RatVector basepoint;
    std::vector<RatVector> basis;  // reduced row echelon form
    std::size_t dim() const { return basis.size(); }
};

inline AffineHull affine_hull(const std::vector<RatVector>& points)
{
    if (points.empty()) throw Error("empty point set");
    const auto& p0 = points.front();
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - p0);
    return {p0, row_basis(std::move(diffs), p0.size())};
}

}  // namespace polycurv
