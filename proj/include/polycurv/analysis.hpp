#pragma once

// Whole-polyhedron computations: Euler characteristic, the finite set of
// points that can carry curvature, and Gauss–Bonnet / critical-point reports.

#include "polycurv/valuation.hpp"

#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace polycurv {

/// chi by inclusion–exclusion: each nonempty convex intersection counts 1.
inline long euler_characteristic(const Polyhedron& p, std::size_t cap = default_piece_cap)
{
    long chi = 0;
    for (const auto& q : nonempty_intersections(p, cap)) chi += q.sign();
    return chi;
}

inline std::vector<RatVector> candidate_points(const std::vector<PieceIntersection>& family)
{
    std::set<RatVector> pts;
    for (const auto& q : family) pts.insert(q.polytope.vertices().begin(), q.polytope.vertices().end());
    return {pts.begin(), pts.end()};
}

/// Vertices of all nonempty piece intersections, sorted lexicographically.
/// Every point of nonzero curvature is among them.
inline std::vector<RatVector> candidate_points(const Polyhedron& p, std::size_t cap = default_piece_cap)
{
    return candidate_points(nonempty_intersections(p, cap));
}

struct GaussBonnetReport {
    std::string quantity;  // valuation name, or "index"
    std::vector<CurvatureValue> points;  // lexicographic by point
    double sum = 0;
    double sum_error = 0;
    long euler_characteristic = 0;
    double tolerance = 0;
    bool pass = false;
};

namespace detail {

inline void finish_report(GaussBonnetReport& r)
{
    r.sum = 0;
    r.sum_error = 0;
    for (const auto& c : r.points) {
        r.sum += c.value;
        r.sum_error += c.abs_error;
    }
    r.pass = std::fabs(r.sum - static_cast<double>(r.euler_characteristic)) <= r.tolerance + r.sum_error;
}

}  // namespace detail

inline GaussBonnetReport gauss_bonnet_report(const Polyhedron& p, const ConeValuation& phi, double tolerance = 1e-9,
                                             std::size_t cap = default_piece_cap)
{
    require_theorem_hypotheses(phi);
    auto family = nonempty_intersections(p, cap);
    GaussBonnetReport r;
    r.quantity = phi.name;
    r.tolerance = tolerance;
    for (const auto& q : family) r.euler_characteristic += q.sign();
    for (const auto& x : candidate_points(family)) r.points.push_back(vertex_curvature(phi, p, x, cap));
    detail::finish_report(r);
    return r;
}

inline GaussBonnetReport critical_point_report(const Polyhedron& p, const RatVector& xi, double tolerance = 1e-9,
                                               std::size_t cap = default_piece_cap)
{
    require_direction(xi, p.ambient_dim());
    auto family = nonempty_intersections(p, cap);
    require_generic(family, xi);
    GaussBonnetReport r;
    r.quantity = "index";
    r.tolerance = tolerance;
    for (const auto& q : family) r.euler_characteristic += q.sign();
    for (const auto& x : candidate_points(family)) r.points.push_back(index_in_family(family, x, xi));
    detail::finish_report(r);
    return r;
}

}  // namespace polycurv
