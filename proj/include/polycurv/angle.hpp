#pragma once

// Spherical measures of polyhedral cones, as fractions of the whole sphere.
//
// Exact path: after factoring out the lineality space, a cone of effective
// dimension <= 3 has a closed-form measure (half-space, planar wedge, or a
// spherical polygon via Girard's theorem). All inner products feeding the
// trigonometry are exact rationals; only the final atan2 is floating point.
// Everything else goes to Monte Carlo with a Hoeffding bound.

#include "polycurv/cone.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace polycurv {

enum class AngleMethod { ExactLowDim, SimpleZero, MonteCarlo };

inline const char* to_string(AngleMethod m)
{
    switch (m) {
        case AngleMethod::ExactLowDim: return "exact";
        case AngleMethod::SimpleZero: return "simple-zero";
        case AngleMethod::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

struct McConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    double confidence = 1.0 - 1e-6;
};

struct AngleEstimate {
    double value = 0;
    double abs_error = 0;
    AngleMethod method = AngleMethod::ExactLowDim;
    // Set only for MonteCarlo.
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double confidence = 0;

    static AngleEstimate exact(double v) { return {v, 0, AngleMethod::ExactLowDim}; }
    static AngleEstimate simple_zero() { return {0, 0, AngleMethod::SimpleZero}; }
};

/// Two-sided Hoeffding half-width for the mean of N values in a range of
/// the given width, at confidence 1 - delta.
inline double hoeffding_bound(std::uint64_t samples, double confidence, double range = 1.0)
{
    const double delta = 1.0 - confidence;
    return range * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(samples)));
}

// ---------------------------------------------------------------------------
// Counter-based sampling: sample i depends only on (seed, i).

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform in (0, 1].
inline double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t lane)
{
    std::uint64_t h = splitmix64(splitmix64(seed ^ 0xD1B54A32D192ED03ULL) + index);
    h = splitmix64(h + lane);
    return (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
}

/// Uniformly distributed unit vector number `index` of the stream `seed`.
inline std::vector<double> sphere_sample(std::uint64_t seed, std::uint64_t index, std::size_t n)
{
    std::vector<double> u(n);
    double norm2 = 0;
    for (std::size_t j = 0; j < n; j += 2) {
        double r = std::sqrt(-2.0 * std::log(counter_uniform(seed, index, j)));
        double t = 2.0 * std::numbers::pi * counter_uniform(seed, index, j + 1);
        u[j] = r * std::cos(t);
        if (j + 1 < n) u[j + 1] = r * std::sin(t);
    }
    for (double x : u) norm2 += x * x;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : u) x *= inv;
    return u;
}

/// Sign of <a, u> for exact a and floating u, with a forward error filter
/// and an exact fallback.
class ExactDotSign {
public:
    explicit ExactDotSign(const RatVector& a) : exact_(a), approx_(a.size())
    {
        for (std::size_t i = 0; i < a.size(); ++i) {
            approx_[i] = a[i].get_d();
            if (Rational(approx_[i]) != a[i]) filtered_ = false;
        }
    }

    int operator()(std::span<const double> u) const
    {
        if (filtered_) {
            double s = 0, mag = 0;
            for (std::size_t i = 0; i < u.size(); ++i) {
                double p = approx_[i] * u[i];
                s += p;
                mag += std::fabs(p);
            }
            const double err = static_cast<double>(u.size() + 2) * std::numeric_limits<double>::epsilon() * mag;
            if (s > err) return 1;
            if (s < -err) return -1;
        }
        Rational s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) s += exact_[i] * Rational(u[i]);
        return sgn(s);
    }

private:
    RatVector exact_;
    std::vector<double> approx_;
    bool filtered_ = true;
};

/// Exact membership of a floating point direction in a cone.
class ConeMembership {
public:
    explicit ConeMembership(const PolyhedralCone& c)
    {
        for (const auto& a : c.facets()) facets_.emplace_back(a);
        for (const auto& e : c.equations()) equations_.emplace_back(e);
    }

    bool operator()(std::span<const double> u) const
    {
        for (const auto& e : equations_)
            if (e(u) != 0) return false;
        for (const auto& a : facets_)
            if (a(u) > 0) return false;
        return true;
    }

private:
    std::vector<ExactDotSign> facets_;
    std::vector<ExactDotSign> equations_;
};

// ---------------------------------------------------------------------------

namespace detail {

/// Angle at the origin between a and b from exact Gram data.
inline double gram_angle(const Rational& aa, const Rational& bb, const Rational& ab)
{
    Rational cross2 = aa * bb - ab * ab;  // Lagrange identity, exact
    return std::atan2(std::sqrt(cross2.get_d()), ab.get_d());
}

/// Interior angle at vertex r of the spherical polygon with neighbours a, b.
inline double vertex_angle(const RatVector& r, const RatVector& a, const RatVector& b)
{
    const Rational rr = dot(r, r);
    const Rational ar = dot(a, r), br = dot(b, r);
    // Tangent vectors a - (ar/rr) r and b - (br/rr) r.
    const Rational ta_tb = dot(a, b) - ar * br / rr;
    const Rational ta2 = dot(a, a) - ar * ar / rr;
    const Rational tb2 = dot(b, b) - br * br / rr;
    return gram_angle(ta2, tb2, ta_tb);
}

/// Measure of a pointed cone of effective dimension 3 whose extreme rays
/// and facets are given (all lying in one 3-dimensional subspace).
inline double spherical_polygon_fraction(const std::vector<RatVector>& rays, const std::vector<RatVector>& facets)
{
    const std::size_t k = rays.size();
    std::vector<std::vector<std::size_t>> adj(k);
    for (const auto& f : facets) {
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(dot(f, rays[i])) == 0) on.push_back(i);
        if (on.size() != 2) throw Error("cone facet does not contain exactly two extreme rays");
        adj[on[0]].push_back(on[1]);
        adj[on[1]].push_back(on[0]);
    }
    std::vector<std::size_t> order{0};
    std::size_t prev = k, cur = 0;
    while (order.size() < k) {
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    double sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = rays[order[(i + k - 1) % k]];
        const auto& r = rays[order[i]];
        const auto& b = rays[order[(i + 1) % k]];
        sum += vertex_angle(r, a, b);
    }
    const double excess = sum - static_cast<double>(k - 2) * std::numbers::pi;
    return excess / (4.0 * std::numbers::pi);
}

inline AngleEstimate monte_carlo_fraction(const PolyhedralCone& c, const McConfig& mc)
{
    ConeMembership inside(c);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < mc.samples; ++i) {
        auto u = sphere_sample(mc.seed, i, c.ambient_dim());
        if (inside(u)) ++hits;
    }
    AngleEstimate e;
    e.value = static_cast<double>(hits) / static_cast<double>(mc.samples);
    e.abs_error = hoeffding_bound(mc.samples, mc.confidence);
    e.method = AngleMethod::MonteCarlo;
    e.samples = mc.samples;
    e.seed = mc.seed;
    e.confidence = mc.confidence;
    return e;
}

}  // namespace detail

/// sigma(C ∩ S^{n-1}) as a fraction of the sphere.
inline AngleEstimate solid_angle(const PolyhedralCone& c, const McConfig& mc = {})
{
    if (!c.is_full_dimensional()) return AngleEstimate::simple_zero();
    const std::size_t effective = c.ambient_dim() - c.lineality().size();
    const auto& rays = c.rays();
    switch (effective) {
        case 0: return AngleEstimate::exact(1.0);
        case 1: return AngleEstimate::exact(0.5);
        case 2: {
            if (rays.size() != 2) throw Error("planar pointed cone without two extreme rays");
            double angle = detail::gram_angle(dot(rays[0], rays[0]), dot(rays[1], rays[1]), dot(rays[0], rays[1]));
            return AngleEstimate::exact(angle / (2.0 * std::numbers::pi));
        }
        case 3: return AngleEstimate::exact(detail::spherical_polygon_fraction(rays, c.facets()));
        default: return detail::monte_carlo_fraction(c, mc);
    }
}

/// Gamma(C) = sigma(C° ∩ S^{n-1}).
inline AngleEstimate outer_angle(const PolyhedralCone& c, const McConfig& mc = {})
{
    return solid_angle(c.dual(), mc);
}

// ---------------------------------------------------------------------------
// Sphere measures

/// Sum of coefficient * prod u_i^e_i.
struct PolynomialDensity {
    struct Term {
        double coefficient = 0;
        std::vector<unsigned> exponents;
    };
    std::vector<Term> terms;

    double operator()(std::span<const double> u) const
    {
        double total = 0;
        for (const auto& t : terms) {
            double v = t.coefficient;
            for (std::size_t i = 0; i < t.exponents.size() && i < u.size(); ++i)
                for (unsigned k = 0; k < t.exponents[i]; ++k) v *= u[i];
            total += v;
        }
        return total;
    }
};

/// A probability measure on the unit sphere. The flags of density measures
/// are declarations by the caller and are not verified.
struct SphereMeasure {
    enum class Kind { Uniform, Density };

    Kind kind = Kind::Uniform;
    std::string name = "uniform";
    std::function<double(std::span<const double>)> density;  // w.r.t. sigma
    double sup_bound = 1;
    bool normalized = true;
    bool vanishes_on_great_subspheres = true;

    static SphereMeasure uniform() { return {}; }

    static SphereMeasure from_density(std::string name, std::function<double(std::span<const double>)> f,
                                      double sup_bound, bool normalized = true, bool vanishes = true)
    {
        if (!(sup_bound > 0)) throw Error("density sup bound must be positive");
        SphereMeasure m;
        m.kind = Kind::Density;
        m.name = std::move(name);
        m.density = std::move(f);
        m.sup_bound = sup_bound;
        m.normalized = normalized;
        m.vanishes_on_great_subspheres = vanishes;
        return m;
    }
};

/// mu(C ∩ S^{n-1}).
inline AngleEstimate measure_of_cone(const SphereMeasure& mu, const PolyhedralCone& c, const McConfig& mc = {})
{
    if (mu.kind == SphereMeasure::Kind::Uniform) return solid_angle(c, mc);
    if (!c.is_full_dimensional() && mu.vanishes_on_great_subspheres) return AngleEstimate::simple_zero();
    if (c.is_full_space() && mu.normalized) return AngleEstimate::exact(1.0);

    ConeMembership inside(c);
    double total = 0;
    for (std::uint64_t i = 0; i < mc.samples; ++i) {
        auto u = sphere_sample(mc.seed, i, c.ambient_dim());
        const double f = mu.density(u);
        if (f < 0) throw Error("density '" + mu.name + "' returned a negative value");
        if (f > mu.sup_bound) throw Error("density '" + mu.name + "' exceeds its declared sup bound");
        if (inside(u)) total += f;
    }
    AngleEstimate e;
    e.value = total / static_cast<double>(mc.samples);
    if (mu.normalized) e.value = std::clamp(e.value, 0.0, 1.0);
    e.abs_error = hoeffding_bound(mc.samples, mc.confidence, mu.sup_bound);
    e.method = AngleMethod::MonteCarlo;
    e.samples = mc.samples;
    e.seed = mc.seed;
    e.confidence = mc.confidence;
    return e;
}

}  // namespace polycurv
