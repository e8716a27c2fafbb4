#pragma once

// Convex polytopes in R^n, stored by their exact vertex set with the
// irredundant inequality description derived at construction. Lower
// dimensional polytopes are first-class: their affine hull is carried as a
// list of equations and facets are taken relative to it.

#include "polycurv/cone.hpp"
#include "polycurv/dd.hpp"
#include "polycurv/linalg.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

namespace polycurv {

/// {x : <normal, x> <= offset}
struct Halfspace {
    RatVector normal;
    Rational offset;
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
    friend bool operator<(const Halfspace& a, const Halfspace& b)
    {
        if (a.normal == b.normal) return a.offset < b.offset;
        return a.normal < b.normal;
    }
};

/// {x : <normal, x> = offset}
struct Equation {
    RatVector normal;
    Rational offset;
    friend bool operator==(const Equation&, const Equation&) = default;
};

struct Face {
    std::vector<RatVector> vertices;  // sorted
    std::size_t dim = 0;
    friend bool operator==(const Face&, const Face&) = default;
};

class ConvexPolytope {
public:
    /// Convex hull; redundant and repeated points are dropped exactly.
    static ConvexPolytope hull(const std::vector<RatVector>& points)
    {
        if (points.empty()) throw Error("empty point set");
        const std::size_t n = points.front().size();
        for (const auto& p : points)
            if (p.size() != n) throw Error("points of mixed dimension");
        std::set<RatVector> unique;
        for (auto p : points) {
            p.canonicalize();
            unique.insert(std::move(p));
        }
        std::vector<RatVector> pts(unique.begin(), unique.end());

        ConvexPolytope P;
        P.n_ = n;
        if (pts.size() == 1) {
            P.vertices_ = pts;
            for (std::size_t i = 0; i < n; ++i) P.equations_.push_back({unit_vector(n, i), pts[0][i]});
            P.dim_ = 0;
            return P;
        }

        // Dual of the homogenised cone {(a, beta) : <a,v> + beta <= 0}.
        std::vector<dd::IntVec> rows;
        for (const auto& p : pts) {
            RatVector h(n + 1);
            for (std::size_t i = 0; i < n; ++i) h[i] = p[i];
            h[n] = 1;
            rows.push_back(dd::to_integer(h));
        }
        auto dual = dd::solve(n + 1, rows, {});

        std::vector<RatVector> aug;
        for (const auto& l : dual.lineality) {
            RatVector r(n + 1);
            for (std::size_t i = 0; i < n; ++i) r[i] = Rational(l[i]);
            r[n] = -Rational(l[n]);
            aug.push_back(std::move(r));
        }
        for (const auto& r : row_basis(std::move(aug), n + 1)) {
            RatVector a(n);
            for (std::size_t i = 0; i < n; ++i) a[i] = r[i];
            P.equations_.push_back({std::move(a), r[n]});
        }
        P.dim_ = n - P.equations_.size();

        std::vector<RatVector> eq_normals;
        for (const auto& e : P.equations_) eq_normals.push_back(e.normal);
        auto ortho = orthogonal_basis(eq_normals);
        std::set<Halfspace> facets;
        for (const auto& ray : dual.rays) {
            RatVector a(n);
            for (std::size_t i = 0; i < n; ++i) a[i] = Rational(ray[i]);
            a = primitive(reject(a, ortho));
            if (a.is_zero()) continue;
            Rational best = dot(a, pts.front());
            for (const auto& p : pts) best = std::max(best, dot(a, p));
            facets.insert({std::move(a), best});
        }
        P.facets_.assign(facets.begin(), facets.end());

        // A point is a vertex iff it is the only point on the smallest face
        // containing it.
        std::vector<boost::dynamic_bitset<>> tight(pts.size(), boost::dynamic_bitset<>(P.facets_.size()));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t f = 0; f < P.facets_.size(); ++f)
                if (dot(P.facets_[f].normal, pts[i]) == P.facets_[f].offset) tight[i].set(f);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            bool alone = true;
            for (std::size_t j = 0; j < pts.size() && alone; ++j)
                if (j != i && tight[i].is_subset_of(tight[j])) alone = false;
            if (alone) P.vertices_.push_back(pts[i]);
        }
        return P;
    }

    /// The polytope {<a,x> <= b, <e,x> = f}, or nullopt when that set is
    /// empty. The set must be bounded.
    static std::optional<ConvexPolytope> from_inequalities(std::size_t n, const std::vector<Halfspace>& halfspaces,
                                                          const std::vector<Equation>& equations)
    {
        // Homogenise: (x, t) with <a,x> - b t <= 0, t >= 0.
        std::vector<dd::IntVec> ineq, eq;
        for (const auto& h : halfspaces) {
            RatVector r(n + 1);
            for (std::size_t i = 0; i < n; ++i) r[i] = h.normal[i];
            r[n] = -h.offset;
            ineq.push_back(dd::to_integer(r));
        }
        RatVector t_nonneg(n + 1);
        t_nonneg[n] = -1;
        ineq.push_back(dd::to_integer(t_nonneg));
        for (const auto& e : equations) {
            RatVector r(n + 1);
            for (std::size_t i = 0; i < n; ++i) r[i] = e.normal[i];
            r[n] = -e.offset;
            eq.push_back(dd::to_integer(r));
        }
        auto gens = dd::solve(n + 1, ineq, eq);
        std::vector<RatVector> points;
        for (const auto& r : gens.rays) {
            if (r[n] == 0) {
                if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; }))
                    throw Error("inequality system is unbounded");
                continue;
            }
            RatVector p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = Rational(r[i], r[n]);
            for (auto& x : p) x.canonicalize();
            points.push_back(std::move(p));
        }
        if (!gens.lineality.empty() && !points.empty()) throw Error("inequality system is unbounded");
        if (points.empty()) return std::nullopt;
        return hull(points);
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return dim_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<Equation>& equations() const { return equations_; }

    bool contains(const RatVector& x) const
    {
        if (x.size() != n_) throw Error("point dimension does not match polytope");
        for (const auto& e : equations_)
            if (dot(e.normal, x) != e.offset) return false;
        for (const auto& h : facets_)
            if (dot(h.normal, x) > h.offset) return false;
        return true;
    }

    bool is_vertex(const RatVector& x) const { return std::binary_search(vertices_.begin(), vertices_.end(), x); }

    /// Every nonempty face, sorted by dimension then vertex list.
    const std::vector<Face>& all_faces() const
    {
        std::call_once(cache_->once, [this] { cache_->faces = compute_faces(); });
        return cache_->faces;
    }

    std::vector<Face> faces(std::size_t k) const
    {
        std::vector<Face> out;
        for (const auto& f : all_faces())
            if (f.dim == k) out.push_back(f);
        return out;
    }

    /// The face where <xi, .> attains its maximum.
    Face support_set(const RatVector& xi) const
    {
        if (xi.is_zero()) throw PreconditionError("direction must be nonzero");
        Rational best = dot(xi, vertices_.front());
        for (const auto& v : vertices_) best = std::max(best, dot(xi, v));
        Face f;
        for (const auto& v : vertices_)
            if (dot(xi, v) == best) f.vertices.push_back(v);
        f.dim = affine_hull(f.vertices).dim();
        return f;
    }

    /// Pulling triangulation in lexicographic vertex order: the smallest
    /// vertex is coned over triangulations of the facets avoiding it.
    /// Consistent on shared faces, so the simplices and their faces form a
    /// simplicial complex.
    std::vector<ConvexPolytope> triangulate() const
    {
        const auto& faces = all_faces();
        std::vector<std::vector<RatVector>> simplices = pull(faces, faces.size() - 1);
        std::vector<ConvexPolytope> out;
        for (const auto& s : simplices) out.push_back(hull(s));
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.vertices_ < b.vertices_; });
        return out;
    }

    friend bool operator==(const ConvexPolytope& a, const ConvexPolytope& b)
    {
        return a.n_ == b.n_ && a.vertices_ == b.vertices_;
    }
    friend bool operator<(const ConvexPolytope& a, const ConvexPolytope& b)
    {
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
        return a.vertices_ < b.vertices_;
    }

    std::string str() const
    {
        std::string s = "conv{";
        for (std::size_t i = 0; i < vertices_.size(); ++i) s += (i ? "," : "") + vertices_[i].str();
        return s + "}";
    }

private:
    struct FaceCache {
        std::once_flag once;
        std::vector<Face> faces;
    };

    ConvexPolytope() : cache_(std::make_shared<FaceCache>()) {}

    std::vector<Face> compute_faces() const
    {
        const std::size_t nv = vertices_.size();
        std::vector<std::vector<std::size_t>> facet_sets;
        for (const auto& h : facets_) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < nv; ++i)
                if (dot(h.normal, vertices_[i]) == h.offset) s.push_back(i);
            facet_sets.push_back(std::move(s));
        }
        std::set<std::vector<std::size_t>> seen;
        std::vector<std::vector<std::size_t>> queue;
        std::vector<std::size_t> all(nv);
        for (std::size_t i = 0; i < nv; ++i) all[i] = i;
        seen.insert(all);
        queue.push_back(all);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            for (const auto& f : facet_sets) {
                std::vector<std::size_t> s;
                std::set_intersection(queue[q].begin(), queue[q].end(), f.begin(), f.end(), std::back_inserter(s));
                if (!s.empty() && seen.insert(s).second) queue.push_back(s);
            }
        }
        std::vector<Face> out;
        for (const auto& s : seen) {
            Face f;
            for (std::size_t i : s) f.vertices.push_back(vertices_[i]);
            f.dim = affine_hull(f.vertices).dim();
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.vertices < b.vertices;
        });
        return out;
    }

    static std::vector<std::vector<RatVector>> pull(const std::vector<Face>& faces, std::size_t which)
    {
        const Face& F = faces[which];
        if (F.dim == 0) return {F.vertices};
        const RatVector& apex = F.vertices.front();
        std::vector<std::vector<RatVector>> out;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const Face& G = faces[i];
            if (G.dim + 1 != F.dim) continue;
            if (!std::includes(F.vertices.begin(), F.vertices.end(), G.vertices.begin(), G.vertices.end()))
                continue;
            if (std::binary_search(G.vertices.begin(), G.vertices.end(), apex)) continue;
            for (auto s : pull(faces, i)) {
                s.push_back(apex);
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
        }
        return out;
    }

    std::size_t n_ = 0;
    std::size_t dim_ = 0;
    std::vector<RatVector> vertices_;
    std::vector<Halfspace> facets_;
    std::vector<Equation> equations_;
    std::shared_ptr<FaceCache> cache_;
};

inline ConvexPolytope hull(const std::vector<RatVector>& points) { return ConvexPolytope::hull(points); }

/// Exact intersection; nullopt when empty.
inline std::optional<ConvexPolytope> intersect(const ConvexPolytope& a, const ConvexPolytope& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw Error("polytopes live in different dimensions");
    auto hs = a.facets();
    hs.insert(hs.end(), b.facets().begin(), b.facets().end());
    auto eqs = a.equations();
    eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
    return ConvexPolytope::from_inequalities(a.ambient_dim(), hs, eqs);
}

/// Inequality description: facets relative to the affine hull plus the
/// affine hull equations.
inline std::pair<std::vector<Halfspace>, std::vector<Equation>> v_to_h(const ConvexPolytope& p)
{
    return {p.facets(), p.equations()};
}

inline std::vector<Face> faces(const ConvexPolytope& p, std::size_t k) { return p.faces(k); }

inline Face support_set(const ConvexPolytope& p, const RatVector& xi) { return p.support_set(xi); }

/// Tan(P,x) = cone{v - x : v vertex of P}, built from the facets tight at x.
inline PolyhedralCone tangent_cone_of_polytope(const ConvexPolytope& p, const RatVector& x)
{
    if (!p.contains(x)) throw PreconditionError("point not in polytope: " + x.str());
    std::vector<RatVector> normals, eqs;
    for (const auto& h : p.facets())
        if (dot(h.normal, x) == h.offset) normals.push_back(h.normal);
    for (const auto& e : p.equations()) eqs.push_back(e.normal);
    return PolyhedralCone::from_halfspaces(p.ambient_dim(), normals, eqs);
}

}  // namespace polycurv
