#pragma once

// Polyhedral and conic cell complexes and the angle identities they satisfy:
// the complex curvature G(Z,x), the alternating outer-angle sum over a conic
// complex, the face sum of outer angles of a cone, the local Euler relation,
// and the combinatorial curvature from reciprocal vertex counts.

#include "polycurv/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace polycurv {

/// Outcome of comparing two evaluations of the same quantity.
struct IdentityCheck {
    double lhs = 0;
    double lhs_error = 0;
    double rhs = 0;
    double rhs_error = 0;
    double tolerance = 0;
    bool pass = false;

    static IdentityCheck compare(double lhs, double lhs_error, double rhs, double rhs_error, double tolerance)
    {
        return {lhs, lhs_error, rhs, rhs_error, tolerance,
                std::fabs(lhs - rhs) <= tolerance + lhs_error + rhs_error};
    }
};

/// Face-closed set of polytopes meeting pairwise in common faces. Only
/// validate_complex constructs one.
class CellComplex {
public:
    CellComplex() = default;

    const std::vector<ConvexPolytope>& cells() const { return cells_; }
    std::size_t ambient_dim() const { return n_; }

    /// Cells that are not a proper face of another cell.
    std::vector<ConvexPolytope> maximal_cells() const
    {
        std::vector<ConvexPolytope> out;
        for (const auto& c : cells_) {
            bool covered = false;
            for (const auto& d : cells_) {
                if (d.dim() <= c.dim()) continue;
                if (std::includes(d.vertices().begin(), d.vertices().end(), c.vertices().begin(),
                                  c.vertices().end())) {
                    covered = true;
                    break;
                }
            }
            if (!covered) out.push_back(c);
        }
        return out;
    }

    /// |Z| as a union of its maximal cells.
    Polyhedron support() const { return Polyhedron(n_, maximal_cells()); }

    bool has_vertex(const RatVector& x) const
    {
        for (const auto& c : cells_)
            if (c.dim() == 0 && c.vertices().front() == x) return true;
        return false;
    }

private:
    friend CellComplex validate_complex(std::vector<ConvexPolytope> cells);
    std::size_t n_ = 0;
    std::vector<ConvexPolytope> cells_;
};

namespace detail {

inline bool is_face_of(const std::vector<RatVector>& vertices, const ConvexPolytope& p)
{
    for (const auto& f : p.all_faces())
        if (f.vertices == vertices) return true;
    return false;
}

}  // namespace detail

/// Checks the complex axioms exactly. Throws naming the first violation.
inline CellComplex validate_complex(std::vector<ConvexPolytope> cells)
{
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    CellComplex z;
    if (cells.empty()) return z;
    z.n_ = cells.front().ambient_dim();
    for (const auto& c : cells)
        if (c.ambient_dim() != z.n_) throw Error("complex cells of mixed dimension");

    std::set<std::vector<RatVector>> present;
    for (const auto& c : cells) present.insert(c.vertices());
    for (const auto& c : cells)
        for (const auto& f : c.all_faces())
            if (!present.count(f.vertices))
                throw Error("missing face: " + hull(f.vertices).str() + " of cell " + c.str());

    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            const auto& a = cells[i];
            const auto& b = cells[j];
            auto meet = intersect(a, b);
            if (!meet) continue;
            if (!detail::is_face_of(meet->vertices(), a) || !detail::is_face_of(meet->vertices(), b))
                throw Error("improper intersection: " + a.str() + " and " + b.str() + " meet in " + meet->str());
        }
    }
    z.cells_ = std::move(cells);
    return z;
}

/// All faces of the given polytopes, as polytopes.
inline std::vector<ConvexPolytope> face_closure(const std::vector<ConvexPolytope>& polytopes)
{
    std::set<std::vector<RatVector>> seen;
    std::vector<ConvexPolytope> out;
    for (const auto& p : polytopes)
        for (const auto& f : p.all_faces())
            if (seen.insert(f.vertices).second) out.push_back(hull(f.vertices));
    return out;
}

inline long euler_characteristic_complex(const CellComplex& z)
{
    long chi = 0;
    for (const auto& c : z.cells()) chi += c.dim() % 2 == 0 ? 1 : -1;
    return chi;
}

/// G(Z,x) = sum over cells Z' containing x of (-1)^dim Z' Gamma(Tan(Z',x)).
inline CurvatureValue complex_curvature_G(const CellComplex& z, const RatVector& x, const McConfig& mc = {})
{
    CurvatureValue out{0, 0, x};
    for (const auto& c : z.cells()) {
        if (!c.contains(x)) continue;
        auto g = outer_angle(tangent_cone_of_polytope(c, x), mc);
        out.value += (c.dim() % 2 == 0 ? 1 : -1) * g.value;
        out.abs_error += g.abs_error;
    }
    return out;
}

/// G(Z,x) against the outer angle of the union of the maximal cells at x.
inline IdentityCheck brin_check(const CellComplex& z, const RatVector& x, double tolerance = 1e-9,
                                const McConfig& mc = {})
{
    auto g = complex_curvature_G(z, x, mc);
    auto k = hadwiger_curvature(z.support(), x, mc);
    return IdentityCheck::compare(g.value, g.abs_error, k.value, k.abs_error, tolerance);
}

/// C(Z,x) = sum over cells containing x of (-1)^dim / (number of vertices);
/// zero unless {x} is a cell.
inline Rational combinatorial_curvature_C(const CellComplex& z, const RatVector& x)
{
    if (!z.has_vertex(x)) return 0;
    Rational total = 0;
    for (const auto& c : z.cells()) {
        if (!c.contains(x)) continue;
        Rational term(1, static_cast<unsigned long>(c.vertices().size()));
        if (c.dim() % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Conic complexes

class ConicComplex {
public:
    ConicComplex() = default;

    const std::vector<PolyhedralCone>& cones() const { return cones_; }
    std::size_t ambient_dim() const { return n_; }

    std::vector<PolyhedralCone> maximal_cones() const
    {
        std::vector<PolyhedralCone> out;
        for (const auto& c : cones_) {
            bool covered = false;
            for (const auto& d : cones_)
                if (d.dim() > c.dim() && contains_cone(d, c)) {
                    covered = true;
                    break;
                }
            if (!covered) out.push_back(c);
        }
        return out;
    }

    static bool contains_cone(const PolyhedralCone& outer, const PolyhedralCone& inner)
    {
        for (const auto& r : inner.rays())
            if (!outer.contains(r)) return false;
        for (const auto& l : inner.lineality())
            if (!outer.contains(l) || !outer.contains(-l)) return false;
        return true;
    }

private:
    friend ConicComplex validate_conic_complex(std::vector<PolyhedralCone> cones);
    std::size_t n_ = 0;
    std::vector<PolyhedralCone> cones_;
};

inline ConicComplex validate_conic_complex(std::vector<PolyhedralCone> cones)
{
    ConicComplex z;
    if (cones.empty()) return z;
    z.n_ = cones.front().ambient_dim();
    std::vector<PolyhedralCone> unique;
    for (auto& c : cones) {
        if (c.ambient_dim() != z.n_) throw Error("complex cones of mixed dimension");
        if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(std::move(c));
    }
    auto listed = [&](const PolyhedralCone& f) { return std::find(unique.begin(), unique.end(), f) != unique.end(); };
    auto is_face = [](const PolyhedralCone& f, const PolyhedralCone& c) {
        auto fs = c.faces();
        return std::find(fs.begin(), fs.end(), f) != fs.end();
    };
    for (const auto& c : unique)
        for (const auto& f : c.faces())
            if (!listed(f)) throw Error("missing face: " + f.str() + " of cone " + c.str());
    for (std::size_t i = 0; i < unique.size(); ++i)
        for (std::size_t j = i + 1; j < unique.size(); ++j) {
            auto meet = intersect_cones(unique[i], unique[j]);
            if (!is_face(meet, unique[i]) || !is_face(meet, unique[j]))
                throw Error("improper intersection: " + unique[i].str() + " and " + unique[j].str());
        }
    std::sort(unique.begin(), unique.end(), [](const PolyhedralCone& a, const PolyhedralCone& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        if (a.rays() != b.rays()) return a.rays() < b.rays();
        return a.lineality() < b.lineality();
    });
    z.cones_ = std::move(unique);
    return z;
}

/// Gamma(|Z|), extended over the maximal cones, against the alternating
/// sum of Gamma over all cones of Z.
inline IdentityCheck conic_gamma_sum(const ConicComplex& z, double tolerance = 1e-9, const McConfig& mc = {})
{
    if (z.cones().empty()) return IdentityCheck::compare(0, 0, 0, 0, tolerance);
    TangentCone support{z.ambient_dim(), z.maximal_cones()};
    auto lhs = extend_to_union(dual_valuation(sigma_valuation(mc)), support);
    double rhs = 0, rhs_error = 0;
    for (const auto& c : z.cones()) {
        auto g = outer_angle(c, mc);
        rhs += (c.dim() % 2 == 0 ? 1 : -1) * g.value;
        rhs_error += g.abs_error;
    }
    return IdentityCheck::compare(lhs.value, lhs.abs_error, rhs, rhs_error, tolerance);
}

/// Sum over faces F of C of (-1)^dim F Gamma(F), against Gamma(C).
inline IdentityCheck sommerville_check(const PolyhedralCone& c, double tolerance = 1e-9, const McConfig& mc = {})
{
    double lhs = 0, lhs_error = 0;
    for (const auto& f : c.faces()) {
        auto g = outer_angle(f, mc);
        lhs += (f.dim() % 2 == 0 ? 1 : -1) * g.value;
        lhs_error += g.abs_error;
    }
    auto g = outer_angle(c, mc);
    return IdentityCheck::compare(lhs, lhs_error, g.value, g.abs_error, tolerance);
}

// ---------------------------------------------------------------------------
// Local Euler relation

struct EulerSumCheck {
    long sum = 0;
    bool pass = false;
};

/// Sum of (-1)^dim F over faces F of P containing the proper face G.
inline EulerSumCheck local_euler_check(const ConvexPolytope& p, const Face& g)
{
    if (g.vertices.empty() || g.vertices == p.vertices())
        throw PreconditionError("face must be proper and nonempty");
    if (!detail::is_face_of(g.vertices, p)) throw PreconditionError("not a face of the polytope: " + hull(g.vertices).str());
    EulerSumCheck out;
    for (const auto& f : p.all_faces())
        if (std::includes(f.vertices.begin(), f.vertices.end(), g.vertices.begin(), g.vertices.end()))
            out.sum += f.dim % 2 == 0 ? 1 : -1;
    out.pass = out.sum == 0;
    return out;
}

inline EulerSumCheck local_euler_check(const PolyhedralCone& c, const PolyhedralCone& g)
{
    if (g == c) throw PreconditionError("face must be proper and nonempty");
    const auto fs = c.faces();
    if (std::find(fs.begin(), fs.end(), g) == fs.end())
        throw PreconditionError("not a face of the cone: " + g.str());
    EulerSumCheck out;
    for (const auto& f : fs)
        if (ConicComplex::contains_cone(f, g)) out.sum += f.dim() % 2 == 0 ? 1 : -1;
    out.pass = out.sum == 0;
    return out;
}

}  // namespace polycurv
