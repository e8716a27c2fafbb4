#pragma once

// Shared test helpers: seeded generators and oracles that do not go
// through the library's own algorithms.

#include "polycurv.hpp"
#include "polycurv/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#ifndef POLYCURV_FIXTURE_DIR
#define POLYCURV_FIXTURE_DIR "fixtures"
#endif

namespace polycurv::test {

inline std::string fixture(const std::string& name) { return std::string(POLYCURV_FIXTURE_DIR) + "/" + name; }

inline io::InputDocument load(const std::string& name) { return io::parse_input_file(fixture(name)); }

inline RatVector pt(std::initializer_list<long> xs) { return RatVector::of(xs); }

inline RatVector rat(std::initializer_list<const char*> xs)
{
    RatVector v(xs.size());
    std::size_t i = 0;
    for (const char* s : xs) v[i++] = parse_rational(s);
    return v;
}

/// Axis-parallel box [lo, hi] as a polytope.
inline ConvexPolytope box(const RatVector& lo, const RatVector& hi)
{
    const std::size_t n = lo.size();
    std::vector<RatVector> corners;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        RatVector c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        corners.push_back(std::move(c));
    }
    return hull(corners);
}

inline ConvexPolytope unit_cube(std::size_t n) { return box(RatVector(n), [&] {
    RatVector one(n);
    for (auto& x : one) x = 1;
    return one;
}()); }

// ---------------------------------------------------------------------------
// Random data. All generators take an explicit engine.

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long range, long den = 4)
{
    std::uniform_int_distribution<long> num(-range * den, range * den);
    Rational q(num(rng), den);
    q.canonicalize();
    return q;
}

inline RatVector random_point(Rng& rng, std::size_t n, long range = 10, long den = 4)
{
    RatVector v(n);
    for (auto& x : v) x = random_rational(rng, range, den);
    return v;
}

inline std::vector<RatVector> random_points(Rng& rng, std::size_t count, std::size_t n)
{
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(random_point(rng, n));
    return pts;
}

/// Random box with integer corners in [0, 6]^n and positive side lengths.
inline ConvexPolytope random_box(Rng& rng, std::size_t n)
{
    std::uniform_int_distribution<long> c(0, 5), len(1, 3);
    RatVector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        long a = c(rng);
        lo[i] = a;
        hi[i] = a + len(rng);
    }
    return box(lo, hi);
}

inline std::vector<ConvexPolytope> random_boxes(Rng& rng, std::size_t n)
{
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<ConvexPolytope> out;
    for (int i = count(rng); i > 0; --i) out.push_back(random_box(rng, n));
    return out;
}

/// Random cone in R^n: pointed, lower-dimensional, or with lineality.
inline PolyhedralCone random_cone(Rng& rng, std::size_t n)
{
    std::uniform_int_distribution<int> kind(0, 5), count(1, static_cast<int>(n) + 3), coord(-4, 4);
    auto vec = [&] {
        RatVector v(n);
        do {
            for (auto& x : v) x = coord(rng);
        } while (v.is_zero());
        return v;
    };
    std::vector<RatVector> gens, lin;
    const int k = kind(rng);
    const int m = k == 0 ? 1 : count(rng);
    for (int i = 0; i < m; ++i) gens.push_back(vec());
    if (k == 5) lin.push_back(vec());
    return PolyhedralCone::from_generators(n, gens, lin);
}

/// Star-shaped simple polygon around the origin, counterclockwise.
inline std::vector<RatVector> random_star_polygon(Rng& rng)
{
    std::uniform_int_distribution<int> count(5, 9);
    const int m = count(rng);
    // Directions on a fixed integer "clock" so that vertices are rational
    // and angularly sorted; radii vary.
    static const std::vector<std::pair<long, long>> dirs{{4, 0}, {4, 1}, {4, 3},  {3, 4},   {1, 4},  {0, 4},
                                                         {-1, 4}, {-3, 4}, {-4, 3}, {-4, 1}, {-4, 0}, {-4, -1},
                                                         {-4, -3}, {-3, -4}, {-1, -4}, {0, -4}, {1, -4}, {3, -4},
                                                         {4, -3}, {4, -1}};
    std::vector<std::size_t> idx(dirs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::size_t> chosen;
    do {
        std::shuffle(idx.begin(), idx.end(), rng);
        chosen.assign(idx.begin(), idx.begin() + m);
        std::sort(chosen.begin(), chosen.end());
        // Consecutive chosen directions must be less than a half-turn apart
        // so the origin is in the interior.
        bool ok = true;
        for (int i = 0; i < m; ++i) {
            std::size_t a = chosen[i], b = chosen[(i + 1) % m];
            std::size_t gap = (b + dirs.size() - a) % dirs.size();
            if (gap >= dirs.size() / 2) ok = false;
        }
        if (ok) break;
    } while (true);
    std::uniform_int_distribution<long> radius(2, 8);
    std::vector<RatVector> poly;
    for (auto i : chosen) {
        Rational r(radius(rng), 4);
        r.canonicalize();
        poly.push_back(RatVector{Rational(dirs[i].first) * r, Rational(dirs[i].second) * r});
    }
    return poly;
}

// ---------------------------------------------------------------------------
// Oracles

/// Twice the signed area of triangle abc.
inline Rational orient(const RatVector& a, const RatVector& b, const RatVector& c)
{
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

/// Ear clipping of a counterclockwise simple polygon.
inline std::vector<std::vector<RatVector>> ear_clip(std::vector<RatVector> poly)
{
    std::vector<std::vector<RatVector>> tris;
    auto inside = [](const RatVector& p, const RatVector& a, const RatVector& b, const RatVector& c) {
        return sgn(orient(a, b, p)) >= 0 && sgn(orient(b, c, p)) >= 0 && sgn(orient(c, a, p)) >= 0;
    };
    while (poly.size() > 3) {
        const std::size_t m = poly.size();
        bool clipped = false;
        for (std::size_t i = 0; i < m && !clipped; ++i) {
            const auto& a = poly[(i + m - 1) % m];
            const auto& b = poly[i];
            const auto& c = poly[(i + 1) % m];
            if (sgn(orient(a, b, c)) <= 0) continue;
            bool empty = true;
            for (std::size_t j = 0; j < m && empty; ++j) {
                if (j == i || j == (i + 1) % m || j == (i + m - 1) % m) continue;
                if (inside(poly[j], a, b, c)) empty = false;
            }
            if (!empty) continue;
            tris.push_back({a, b, c});
            poly.erase(poly.begin() + static_cast<long>(i));
            clipped = true;
        }
        if (!clipped) throw Error("ear clipping found no ear");
    }
    tris.push_back(poly);
    return tris;
}

/// Triangles from an interior point to every edge.
inline std::vector<std::vector<RatVector>> fan_from(const std::vector<RatVector>& poly, const RatVector& centre)
{
    std::vector<std::vector<RatVector>> tris;
    for (std::size_t i = 0; i < poly.size(); ++i) tris.push_back({centre, poly[i], poly[(i + 1) % poly.size()]});
    return tris;
}

inline CellComplex complex_of(const std::vector<std::vector<RatVector>>& cells)
{
    std::vector<ConvexPolytope> ps;
    for (const auto& c : cells) ps.push_back(hull(c));
    return validate_complex(face_closure(ps));
}

/// Exact determinant by cofactor expansion (small matrices only).
inline Rational det(const std::vector<RatVector>& rows)
{
    const std::size_t n = rows.size();
    if (n == 1) return rows[0][0];
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(rows[0][j]) == 0) continue;
        std::vector<RatVector> minor;
        for (std::size_t i = 1; i < n; ++i) {
            RatVector r(n - 1);
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) r[c++] = rows[i][k];
            minor.push_back(std::move(r));
        }
        Rational term = rows[0][j] * det(minor);
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

/// Volume of a full-dimensional simplex given by n+1 vertices in R^n.
inline Rational simplex_volume(const std::vector<RatVector>& v)
{
    std::vector<RatVector> rows;
    for (std::size_t i = 1; i < v.size(); ++i) rows.push_back(v[i] - v[0]);
    Rational d = det(rows);
    if (sgn(d) < 0) d = -d;
    Integer fact = 1;
    for (std::size_t i = 2; i < v.size(); ++i) fact *= static_cast<unsigned long>(i);
    return d / Rational(fact);
}

/// Euler characteristic of a union of boxes, from the cubical grid spanned
/// by all box coordinates: each open grid cell lies inside or outside the
/// union and contributes (-1)^dim when inside.
inline long grid_euler_characteristic(const std::vector<ConvexPolytope>& boxes, std::size_t n)
{
    if (boxes.empty()) return 0;
    std::vector<std::vector<Rational>> ticks(n);
    for (const auto& b : boxes)
        for (const auto& v : b.vertices())
            for (std::size_t i = 0; i < n; ++i) ticks[i].push_back(v[i]);
    for (auto& t : ticks) {
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
    }
    // Cell coordinate index k in [0, 2*len-1): even = a tick, odd = the open
    // interval between consecutive ticks.
    long chi = 0;
    std::vector<std::size_t> k(n, 0);
    while (true) {
        RatVector centre(n);
        std::size_t dim = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (k[i] % 2 == 0) centre[i] = ticks[i][k[i] / 2];
            else {
                centre[i] = (ticks[i][k[i] / 2] + ticks[i][k[i] / 2 + 1]) / 2;
                ++dim;
            }
        }
        bool in = false;
        for (const auto& b : boxes) {
            const auto& lo = b.vertices().front();
            const auto& hi = b.vertices().back();
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i) inside = lo[i] <= centre[i] && centre[i] <= hi[i];
            if (inside) {
                in = true;
                break;
            }
        }
        if (in) chi += dim % 2 == 0 ? 1 : -1;
        std::size_t i = 0;
        while (i < n && ++k[i] == 2 * ticks[i].size() - 1) k[i++] = 0;
        if (i == n) break;
    }
    return chi;
}

/// Exterior angle at a convex polygon vertex b (neighbours a, c), as a
/// fraction of the full turn.
inline double turning_fraction(const RatVector& a, const RatVector& b, const RatVector& c)
{
    auto d = [](const RatVector& p, const RatVector& q) {
        return std::vector<double>{Rational(q[0] - p[0]).get_d(), Rational(q[1] - p[1]).get_d()};
    };
    auto u = d(a, b), w = d(b, c);
    const double turn = std::atan2(u[0] * w[1] - u[1] * w[0], u[0] * w[0] + u[1] * w[1]);
    return turn / (2 * std::numbers::pi);
}

}  // namespace polycurv::test
