#pragma once

// Polyhedra (finite unions of convex polytopes), their tangent cones, and
// the geometric-vertex test.

#include "polycurv/lp.hpp"
#include "polycurv/polytope.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace polycurv {

/// Union of an ordered list of convex polytopes. No pieces: the empty set.
class Polyhedron {
public:
    explicit Polyhedron(std::size_t n = 0) : n_(n) {}
    Polyhedron(std::size_t n, std::vector<ConvexPolytope> pieces) : n_(n), pieces_(std::move(pieces))
    {
        for (const auto& p : pieces_)
            if (p.ambient_dim() != n_) throw Error("polyhedron pieces of mixed dimension");
    }

    static Polyhedron of(std::vector<ConvexPolytope> pieces)
    {
        if (pieces.empty()) throw Error("cannot infer the dimension of an empty piece list");
        const std::size_t n = pieces.front().ambient_dim();
        return Polyhedron(n, std::move(pieces));
    }

    std::size_t ambient_dim() const { return n_; }
    const std::vector<ConvexPolytope>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    bool contains(const RatVector& x) const
    {
        for (const auto& p : pieces_)
            if (p.contains(x)) return true;
        return false;
    }

    Polyhedron translated(const RatVector& t) const
    {
        std::vector<ConvexPolytope> moved;
        for (const auto& p : pieces_) {
            std::vector<RatVector> vs;
            for (const auto& v : p.vertices()) vs.push_back(v + t);
            moved.push_back(hull(vs));
        }
        return Polyhedron(n_, std::move(moved));
    }

    Polyhedron with_piece(ConvexPolytope extra) const
    {
        Polyhedron out = *this;
        if (extra.ambient_dim() != n_) throw Error("piece dimension mismatch");
        out.pieces_.push_back(std::move(extra));
        return out;
    }

private:
    std::size_t n_;
    std::vector<ConvexPolytope> pieces_;
};

/// Finite union of convex cones; no pieces means Tan(P,x) is empty.
struct TangentCone {
    std::size_t ambient_dim = 0;
    std::vector<PolyhedralCone> pieces;

    bool empty() const { return pieces.empty(); }
    bool contains(const RatVector& v) const
    {
        for (const auto& c : pieces)
            if (c.contains(v)) return true;
        return false;
    }
};

inline TangentCone tangent_cone(const Polyhedron& p, const RatVector& x)
{
    TangentCone t{p.ambient_dim(), {}};
    for (const auto& q : p.pieces())
        if (q.contains(x)) t.pieces.push_back(tangent_cone_of_polytope(q, x));
    return t;
}

// ---------------------------------------------------------------------------
// Translation invariance of a union of cones.
//
// All facet and equation hyperplanes of the pieces form a central
// arrangement; the union S is a union of its relatively open cells. For a
// direction v and a cell F of S, the points p + eps v (p in F, small eps)
// lie in the cell whose sign vector agrees with F off the hyperplanes
// through F and with v on them. S + Rv = S iff that neighbouring cell is in
// S for every cell F of S and both v and -v. The condition depends on v only
// through its own sign vector, so it is decided per cell of the arrangement.

namespace detail {

using SignVector = std::vector<std::int8_t>;

struct ArrangementCell {
    SignVector signs;
    RatVector witness;
};

inline std::vector<RatVector> arrangement_hyperplanes(const TangentCone& t)
{
    std::set<RatVector> planes;
    auto add = [&](const RatVector& a) {
        RatVector p = primitive(a);
        if (p.is_zero()) return;
        for (const auto& x : p) {
            if (sgn(x) < 0) {
                p = -p;
                break;
            }
            if (sgn(x) > 0) break;
        }
        planes.insert(std::move(p));
    };
    for (const auto& c : t.pieces) {
        for (const auto& a : c.facets()) add(a);
        for (const auto& e : c.equations()) add(e);
    }
    return {planes.begin(), planes.end()};
}

inline std::vector<ArrangementCell> enumerate_cells(const std::vector<RatVector>& planes, std::size_t n)
{
    std::vector<ArrangementCell> cells{{{}, RatVector(n)}};
    for (std::size_t j = 0; j < planes.size(); ++j) {
        std::vector<ArrangementCell> next;
        for (const auto& cell : cells) {
            const int own = sgn(dot(planes[j], cell.witness));
            for (int s : {-1, 0, 1}) {
                ArrangementCell child{cell.signs, cell.witness};
                child.signs.push_back(static_cast<std::int8_t>(s));
                if (s != own) {
                    std::vector<LinearConstraint> sys;
                    for (std::size_t i = 0; i < child.signs.size(); ++i) {
                        const int si = child.signs[i];
                        if (si == 0) sys.push_back({planes[i], 0, Relation::Equal});
                        else sys.push_back({planes[i] * Rational(-si), 0, Relation::Less});
                    }
                    auto r = lp_feasible(sys, n);
                    if (!r) continue;
                    child.witness = std::move(r.witness);
                }
                next.push_back(std::move(child));
            }
        }
        cells = std::move(next);
    }
    return cells;
}

}  // namespace detail

/// Basis of D = {v : Tan + Rv = Tan}, the directions along which the union
/// of tangent pieces is a union of parallel lines. Empty input gives {}.
inline std::vector<RatVector> translation_invariance_space(const TangentCone& t)
{
    if (t.empty()) return {};
    const std::size_t n = t.ambient_dim;
    const auto planes = detail::arrangement_hyperplanes(t);
    const auto cells = detail::enumerate_cells(planes, n);

    std::map<detail::SignVector, bool> in_union;
    for (const auto& c : cells) in_union[c.signs] = t.contains(c.witness);

    auto preserved = [&](const detail::SignVector& dir) {
        for (const auto& f : cells) {
            if (!in_union[f.signs]) continue;
            for (int orient : {1, -1}) {
                detail::SignVector nb = f.signs;
                for (std::size_t i = 0; i < nb.size(); ++i)
                    if (nb[i] == 0) nb[i] = static_cast<std::int8_t>(orient * dir[i]);
                auto it = in_union.find(nb);
                if (it == in_union.end() || !it->second) return false;
            }
        }
        return true;
    };

    // A cell is relatively open in the subspace cut out by its zero signs,
    // so D is the sum of those subspaces over the preserving cells.
    std::vector<RatVector> span;
    for (const auto& c : cells) {
        std::vector<RatVector> zeros;
        for (std::size_t i = 0; i < planes.size(); ++i)
            if (c.signs[i] == 0) zeros.push_back(planes[i]);
        auto cell_span = null_space(zeros, n);
        if (cell_span.empty() || !preserved(c.signs)) continue;
        span.insert(span.end(), cell_span.begin(), cell_span.end());
    }
    return row_basis(std::move(span), n);
}

/// x is a geometric vertex of P iff x in P and Tan(P,x) is not a union of
/// parallel lines.
inline bool is_geometric_vertex(const Polyhedron& p, const RatVector& x)
{
    auto t = tangent_cone(p, x);
    if (t.empty()) return false;
    return translation_invariance_space(t).empty();
}

}  // namespace polycurv
