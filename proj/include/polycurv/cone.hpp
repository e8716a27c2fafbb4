#pragma once

// Polyhedral cones with apex at the origin. Both representations are kept in
// canonical form, so duality is a swap and equality is a field comparison:
//
//   rays       extreme rays, orthogonal to the lineality space, primitive
//   lineality  reduced row echelon basis of the largest contained subspace
//   facets     normals a with C in {<a,x> <= 0}, orthogonal to equations
//   equations  reduced row echelon basis of span(C)^perp

#include "polycurv/dd.hpp"
#include "polycurv/linalg.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace polycurv {

class PolyhedralCone {
public:
    /// The trivial cone {o}.
    explicit PolyhedralCone(std::size_t n = 0) : n_(n)
    {
        for (std::size_t i = 0; i < n; ++i) equations_.push_back(unit_vector(n, i));
    }

    static PolyhedralCone origin(std::size_t n) { return PolyhedralCone(n); }

    static PolyhedralCone full_space(std::size_t n)
    {
        PolyhedralCone c(n);
        c.equations_.clear();
        for (std::size_t i = 0; i < n; ++i) c.lineality_.push_back(unit_vector(n, i));
        return c;
    }

    /// cone(generators) + span(lineality)
    static PolyhedralCone from_generators(std::size_t n, const std::vector<RatVector>& generators,
                                          const std::vector<RatVector>& lineality = {})
    {
        check_dims(n, generators);
        check_dims(n, lineality);
        // Facets of C are the extreme rays of C°, computed from C's generators.
        auto dual = dd::solve(n, to_int(generators), to_int(lineality));
        PolyhedralCone c(n);
        c.equations_ = row_basis(from_int(dual.lineality), n);
        std::vector<RatVector> normals = from_int(dual.rays);
        std::vector<RatVector> constraint_rows = normals;
        constraint_rows.insert(constraint_rows.end(), c.equations_.begin(), c.equations_.end());
        c.lineality_ = row_basis(null_space(constraint_rows, n), n);
        c.rays_ = c.extreme_among(generators, normals);
        c.facets_ = c.facets_among(normals);
        return c;
    }

    /// {x : <a,x> <= 0 for a in normals, <e,x> = 0 for e in equations}
    static PolyhedralCone from_halfspaces(std::size_t n, const std::vector<RatVector>& normals,
                                          const std::vector<RatVector>& equations = {})
    {
        check_dims(n, normals);
        check_dims(n, equations);
        auto gens = dd::solve(n, to_int(normals), to_int(equations));
        PolyhedralCone c(n);
        c.lineality_ = row_basis(from_int(gens.lineality), n);
        std::vector<RatVector> rays = from_int(gens.rays);
        std::vector<RatVector> spanning = rays;
        spanning.insert(spanning.end(), c.lineality_.begin(), c.lineality_.end());
        c.equations_ = row_basis(null_space(spanning, n), n);
        c.rays_ = c.extreme_among(rays, normals);
        c.facets_ = c.facets_among(normals);
        return c;
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return n_ - equations_.size(); }
    const std::vector<RatVector>& rays() const { return rays_; }
    const std::vector<RatVector>& lineality() const { return lineality_; }
    const std::vector<RatVector>& facets() const { return facets_; }
    const std::vector<RatVector>& equations() const { return equations_; }

    bool is_pointed() const { return lineality_.empty(); }
    bool is_full_dimensional() const { return equations_.empty(); }
    bool is_origin() const { return rays_.empty() && lineality_.empty(); }
    bool is_full_space() const { return lineality_.size() == n_; }
    bool is_subspace() const { return rays_.empty(); }

    bool contains(const RatVector& v) const
    {
        if (v.size() != n_) throw Error("point dimension does not match cone");
        for (const auto& e : equations_)
            if (sgn(dot(e, v)) != 0) return false;
        for (const auto& a : facets_)
            if (sgn(dot(a, v)) > 0) return false;
        return true;
    }

    /// C° = {y : <y,x> <= 0 for all x in C}
    PolyhedralCone dual() const
    {
        PolyhedralCone d(n_);
        d.rays_ = facets_;
        d.lineality_ = equations_;
        d.facets_ = rays_;
        d.equations_ = lineality_;
        return d;
    }

    /// All faces, from the lineality space up to C itself, ordered by
    /// dimension and then by their ray lists.
    std::vector<PolyhedralCone> faces() const
    {
        // A face is determined by the set of extreme rays it contains; those
        // sets are the intersections of facet ray-sets, plus the full set.
        std::set<std::vector<std::size_t>> seen;
        std::vector<std::vector<std::size_t>> queue;
        std::vector<std::size_t> all(rays_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        seen.insert(all);
        queue.push_back(all);
        std::vector<std::vector<std::size_t>> facet_sets;
        for (const auto& a : facets_) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < rays_.size(); ++i)
                if (sgn(dot(a, rays_[i])) == 0) s.push_back(i);
            facet_sets.push_back(std::move(s));
        }
        for (std::size_t q = 0; q < queue.size(); ++q) {
            for (const auto& f : facet_sets) {
                std::vector<std::size_t> s;
                std::set_intersection(queue[q].begin(), queue[q].end(), f.begin(), f.end(), std::back_inserter(s));
                if (seen.insert(s).second) queue.push_back(s);
            }
        }
        std::vector<PolyhedralCone> out;
        for (const auto& s : seen) {
            if (s.size() == rays_.size()) {
                out.push_back(*this);
                continue;
            }
            std::vector<RatVector> gens;
            for (std::size_t i : s) gens.push_back(rays_[i]);
            out.push_back(from_generators(n_, gens, lineality_));
        }
        std::sort(out.begin(), out.end(), [](const PolyhedralCone& a, const PolyhedralCone& b) {
            if (a.dim() != b.dim()) return a.dim() < b.dim();
            return a.rays_ < b.rays_;
        });
        return out;
    }

    friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b)
    {
        return a.n_ == b.n_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_ && a.facets_ == b.facets_ &&
               a.equations_ == b.equations_;
    }

    std::string str() const
    {
        std::string s = "cone[n=" + std::to_string(n_) + ", dim=" + std::to_string(dim()) + ", rays={";
        for (std::size_t i = 0; i < rays_.size(); ++i) s += (i ? "," : "") + rays_[i].str();
        s += "}, lineality={";
        for (std::size_t i = 0; i < lineality_.size(); ++i) s += (i ? "," : "") + lineality_[i].str();
        return s + "}]";
    }

private:
    static void check_dims(std::size_t n, const std::vector<RatVector>& vs)
    {
        for (const auto& v : vs)
            if (v.size() != n) throw Error("cone generator dimension mismatch");
    }

    static std::vector<dd::IntVec> to_int(const std::vector<RatVector>& vs)
    {
        std::vector<dd::IntVec> out;
        for (const auto& v : vs)
            if (!v.is_zero()) out.push_back(dd::to_integer(v));
        return out;
    }

    static std::vector<RatVector> from_int(const std::vector<dd::IntVec>& vs)
    {
        std::vector<RatVector> out;
        for (const auto& v : vs) out.push_back(dd::to_rational(v));
        return out;
    }

    // Candidates reduced modulo lineality; keeps those whose tight facets
    // (with the equations) have rank n - dim(lineality) - 1.
    std::vector<RatVector> extreme_among(const std::vector<RatVector>& candidates,
                                         const std::vector<RatVector>& normals) const
    {
        if (lineality_.size() == n_) return {};
        auto ortho = orthogonal_basis(lineality_);
        std::set<RatVector> out;
        const std::size_t target = n_ - lineality_.size() - 1;
        for (const auto& g : candidates) {
            RatVector r = primitive(reject(g, ortho));
            if (r.is_zero() || out.count(r)) continue;
            std::vector<RatVector> tight = equations_;
            for (const auto& a : normals)
                if (sgn(dot(a, r)) == 0) tight.push_back(a);
            if (rank(tight) == target) out.insert(std::move(r));
        }
        return {out.begin(), out.end()};
    }

    // Candidates reduced modulo the equation space; keeps those whose tight
    // rays (with the lineality) span a space of dimension dim(C) - 1.
    std::vector<RatVector> facets_among(const std::vector<RatVector>& candidates) const
    {
        auto ortho = orthogonal_basis(equations_);
        std::set<RatVector> out;
        const std::size_t d = dim();
        if (d == 0) return {};
        for (const auto& a : candidates) {
            RatVector f = primitive(reject(a, ortho));
            if (f.is_zero() || out.count(f)) continue;
            std::vector<RatVector> tight = lineality_;
            for (const auto& r : rays_)
                if (sgn(dot(f, r)) == 0) tight.push_back(r);
            if (rank(tight) == d - 1) out.insert(std::move(f));
        }
        return {out.begin(), out.end()};
    }

    std::size_t n_ = 0;
    std::vector<RatVector> rays_;
    std::vector<RatVector> lineality_;
    std::vector<RatVector> facets_;
    std::vector<RatVector> equations_;
};

/// Exact basis of the largest linear subspace contained in C.
inline std::vector<RatVector> lineality_space(const PolyhedralCone& c) { return c.lineality(); }

inline PolyhedralCone dual_cone(const PolyhedralCone& c) { return c.dual(); }

inline std::vector<PolyhedralCone> cone_faces(const PolyhedralCone& c) { return c.faces(); }

inline PolyhedralCone intersect_cones(const PolyhedralCone& a, const PolyhedralCone& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw Error("cones live in different dimensions");
    auto normals = a.facets();
    normals.insert(normals.end(), b.facets().begin(), b.facets().end());
    auto eqs = a.equations();
    eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
    return PolyhedralCone::from_halfspaces(a.ambient_dim(), normals, eqs);
}

}  // namespace polycurv
