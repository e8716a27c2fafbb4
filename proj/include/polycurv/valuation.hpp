#pragma once

// Cone valuations and the vertex curvatures they induce.
//
// For a simple, normalized valuation phi on cones, kappa(P,x) is the dual
// valuation phi°(C) = phi(C°) extended additively to the tangent cone
// Tan(P,x), a finite union of convex cones. The extension is the
// inclusion–exclusion sum over subfamilies of the pieces containing x.

#include "polycurv/angle.hpp"
#include "polycurv/family.hpp"

#include <functional>
#include <string>
#include <vector>

namespace polycurv {

struct ValueWithError {
    double value = 0;
    double abs_error = 0;
};

struct ConeValuation {
    std::string name;
    std::function<AngleEstimate(const PolyhedralCone&)> eval;
    bool simple = false;
    bool normalized = false;

    AngleEstimate operator()(const PolyhedralCone& c) const { return eval(c); }
};

struct CurvatureValue {
    double value = 0;
    double abs_error = 0;
    RatVector point;
};

/// C -> sigma(C ∩ S^{n-1}); simple and normalized.
inline ConeValuation sigma_valuation(const McConfig& mc = {})
{
    return {"sigma", [mc](const PolyhedralCone& c) { return solid_angle(c, mc); }, true, true};
}

/// C -> mu(C ∩ S^{n-1}) with the measure's declared flags.
inline ConeValuation measure_valuation(const SphereMeasure& mu, const McConfig& mc = {})
{
    if (mu.kind == SphereMeasure::Kind::Uniform) return sigma_valuation(mc);
    return {mu.name, [mu, mc](const PolyhedralCone& c) { return measure_of_cone(mu, c, mc); },
            mu.vanishes_on_great_subspheres, mu.normalized};
}

/// phi°(C) = phi(C°). The flags describe phi, not phi°, so they are cleared.
inline ConeValuation dual_valuation(const ConeValuation& phi)
{
    return {phi.name + "°", [eval = phi.eval](const PolyhedralCone& c) { return eval(c.dual()); }, false, false};
}

/// Inclusion–exclusion extension of phi to the union of the pieces.
inline ValueWithError extend_to_union(const ConeValuation& phi, const TangentCone& u,
                                      std::size_t cap = default_piece_cap)
{
    check_piece_cap(u.pieces.size(), cap, "local pieces");
    ValueWithError total;
    const auto& pieces = u.pieces;
    // Depth-first over index sets {i1 < ... < ir}, intersecting incrementally.
    std::function<void(const PolyhedralCone&, std::size_t, int)> visit = [&](const PolyhedralCone& c,
                                                                           std::size_t next, int sign) {
        auto e = phi(c);
        total.value += sign * e.value;
        total.abs_error += e.abs_error;
        for (std::size_t j = next; j < pieces.size(); ++j) visit(intersect_cones(c, pieces[j]), j + 1, -sign);
    };
    for (std::size_t i = 0; i < pieces.size(); ++i) visit(pieces[i], i + 1, 1);
    return total;
}

inline void require_theorem_hypotheses(const ConeValuation& phi)
{
    if (!phi.simple || !phi.normalized)
        throw PreconditionError("valuation '" + phi.name +
                                "' must be simple and normalized to define a vertex curvature");
}

/// kappa(P,x) = phi°(Tan(P,x)); zero off P.
inline CurvatureValue vertex_curvature(const ConeValuation& phi, const Polyhedron& p, const RatVector& x,
                                       std::size_t cap = default_piece_cap)
{
    require_theorem_hypotheses(phi);
    if (x.size() != p.ambient_dim()) throw Error("point dimension does not match polyhedron");
    auto t = tangent_cone(p, x);
    if (t.empty()) return {0, 0, x};
    auto v = extend_to_union(dual_valuation(phi), t, cap);
    return {v.value, v.abs_error, x};
}

/// Outer angle of the tangent cone, additively extended.
inline CurvatureValue hadwiger_curvature(const Polyhedron& p, const RatVector& x, const McConfig& mc = {})
{
    return vertex_curvature(sigma_valuation(mc), p, x);
}

// ---------------------------------------------------------------------------
// Index of a height function

inline void require_generic(const std::vector<PieceIntersection>& family, const RatVector& xi)
{
    for (const auto& q : family) {
        auto face = q.polytope.support_set(xi);
        if (face.dim != 0)
            throw PreconditionError("ξ not generic for P: " + xi.str() + " is maximized on a face of dimension " +
                                    std::to_string(face.dim) + " of the intersection of pieces " + q.label());
    }
}

inline void require_direction(const RatVector& xi, std::size_t n)
{
    if (xi.size() != n) throw Error("direction dimension does not match polyhedron");
    if (xi.is_zero()) throw PreconditionError("direction ξ must be nonzero");
}

/// Index from a precomputed family whose genericity has been checked.
inline CurvatureValue index_in_family(const std::vector<PieceIntersection>& family, const RatVector& x,
                                      const RatVector& xi)
{
    long total = 0;
    for (const auto& q : family) {
        if (!q.polytope.contains(x)) continue;
        auto face = q.polytope.support_set(xi);
        if (face.vertices.size() == 1 && face.vertices.front() == x) total += q.sign();
    }
    return {static_cast<double>(total), 0, x};
}

/// i(P,x,xi): inclusion–exclusion of [x is the unique xi-maximizer of Q]
/// over the nonempty piece intersections Q.
inline CurvatureValue index(const Polyhedron& p, const RatVector& x, const RatVector& xi,
                            std::size_t cap = default_piece_cap)
{
    require_direction(xi, p.ambient_dim());
    if (x.size() != p.ambient_dim()) throw Error("point dimension does not match polyhedron");
    auto family = nonempty_intersections(p, cap);
    require_generic(family, xi);
    return index_in_family(family, x, xi);
}

// ---------------------------------------------------------------------------
// Monte Carlo halfsphere estimate

namespace detail {

/// Spherical Euler characteristic of K ∩ {<u,.> >= 0} for a fixed convex cone K.
class HalfsphereChi {
public:
    explicit HalfsphereChi(const PolyhedralCone& k)
    {
        for (const auto& r : k.rays()) rays_.emplace_back(r);
        for (const auto& l : k.lineality()) lineality_.emplace_back(l);
    }

    /// 0 or 1, or nullopt when the intersection is a whole great subsphere.
    std::optional<int> operator()(std::span<const double> u) const
    {
        bool orthogonal_to_lineality = true;
        for (const auto& l : lineality_)
            if (l(u) != 0) {
                orthogonal_to_lineality = false;
                break;
            }
        if (!lineality_.empty() && !orthogonal_to_lineality) return 1;
        for (const auto& r : rays_)
            if (r(u) >= 0) return 1;
        if (!lineality_.empty()) return std::nullopt;
        return 0;
    }

private:
    std::vector<ExactDotSign> rays_;
    std::vector<ExactDotSign> lineality_;
};

}  // namespace detail

/// kappa(P,x) = 1 - E_u chi(Tan(P,x) ∩ {<u,.> >= 0} ∩ S^{n-1}) for x in P,
/// with u uniform on the sphere. Directions u for which some piece
/// intersection meets the halfspace in a great subsphere are skipped and
/// counted; more than 0.1% of N skipped is an error.
inline CurvatureValue mc_halfsphere_curvature(const Polyhedron& p, const RatVector& x, const McConfig& mc = {},
                                              std::size_t cap = default_piece_cap)
{
    if (mc.samples == 0) throw PreconditionError("sample count must be at least 1");
    if (x.size() != p.ambient_dim()) throw Error("point dimension does not match polyhedron");
    auto t = tangent_cone(p, x);
    if (t.empty()) return {0, 0, x};
    check_piece_cap(t.pieces.size(), cap, "local pieces");

    std::vector<detail::HalfsphereChi> terms;
    std::vector<int> signs;
    std::function<void(const PolyhedralCone&, std::size_t, int)> visit = [&](const PolyhedralCone& c,
                                                                           std::size_t next, int sign) {
        terms.emplace_back(c);
        signs.push_back(sign);
        for (std::size_t j = next; j < t.pieces.size(); ++j) visit(intersect_cones(c, t.pieces[j]), j + 1, -sign);
    };
    for (std::size_t i = 0; i < t.pieces.size(); ++i) visit(t.pieces[i], i + 1, 1);

    const std::uint64_t max_skips = mc.samples / 1000;
    std::uint64_t skips = 0;
    long long sum = 0;
    std::uint64_t index = 0;
    for (std::uint64_t accepted = 0; accepted < mc.samples; ++index) {
        auto u = sphere_sample(mc.seed, index, p.ambient_dim());
        long long integrand = 0;
        bool generic = true;
        for (std::size_t k = 0; k < terms.size() && generic; ++k) {
            auto chi = terms[k](u);
            if (!chi) generic = false;
            else integrand += signs[k] * *chi;
        }
        if (!generic) {
            if (++skips > max_skips)
                throw Error("halfsphere sampling hit " + std::to_string(skips) +
                            " non-generic directions, more than 0.1% of the sample count");
            continue;
        }
        sum += integrand;
        ++accepted;
    }
    const double range = static_cast<double>((std::uint64_t{1} << t.pieces.size()) - 1);
    CurvatureValue out;
    out.point = x;
    out.value = 1.0 - static_cast<double>(sum) / static_cast<double>(mc.samples);
    out.abs_error = hoeffding_bound(mc.samples, mc.confidence, range);
    return out;
}

}  // namespace polycurv
