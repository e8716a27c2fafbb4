#pragma once

// Double description method on integer data. Given homogeneous constraints
// {x : <h,x> <= 0, <e,x> = 0} in R^k, computes a lineality basis and the
// extreme rays modulo lineality. Ray arithmetic stays in primitive integer
// vectors; rays are combined only across adjacent pairs, with adjacency
// decided combinatorially from tight-constraint sets.

#include "polycurv/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <vector>

namespace polycurv::dd {

using IntVec = std::vector<Integer>;

inline Integer idot(const IntVec& a, const IntVec& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline void make_primitive(IntVec& v)
{
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// a*u + b*v, made primitive.
inline IntVec combine(const Integer& a, const IntVec& u, const Integer& b, const IntVec& v)
{
    IntVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = a * u[i] + b * v[i];
    make_primitive(w);
    return w;
}

inline IntVec to_integer(const RatVector& v)
{
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
    make_primitive(out);
    return out;
}

inline RatVector to_rational(const IntVec& v)
{
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

struct Generators {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

inline Generators solve(std::size_t k, const std::vector<IntVec>& inequalities, const std::vector<IntVec>& equalities)
{
    std::vector<IntVec> lin;
    for (std::size_t i = 0; i < k; ++i) {
        IntVec e(k);
        e[i] = 1;
        lin.push_back(std::move(e));
    }

    // Restrict the lineality space to the hyperplanes of the equalities.
    for (const auto& e : equalities) {
        std::size_t pick = lin.size();
        Integer de;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            de = idot(e, lin[i]);
            if (de != 0) {
                pick = i;
                break;
            }
        }
        if (pick == lin.size()) continue;
        IntVec l0 = lin[pick];
        lin.erase(lin.begin() + static_cast<long>(pick));
        for (auto& l : lin) {
            Integer dl = idot(e, l);
            if (dl != 0) l = combine(de, l, -dl, l0);
        }
    }

    const std::size_t m = inequalities.size();
    struct Ray {
        IntVec v;
        boost::dynamic_bitset<> tight;
    };
    std::vector<Ray> rays;
    boost::dynamic_bitset<> processed(m);

    for (std::size_t j = 0; j < m; ++j) {
        const IntVec& h = inequalities[j];

        std::size_t pick = lin.size();
        Integer d;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            d = idot(h, lin[i]);
            if (d != 0) {
                pick = i;
                break;
            }
        }

        if (pick != lin.size()) {
            IntVec l0 = lin[pick];
            if (d > 0) {
                for (auto& x : l0) x = -x;
                d = -d;
            }
            lin.erase(lin.begin() + static_cast<long>(pick));
            for (auto& l : lin) {
                Integer dl = idot(h, l);
                if (dl != 0) l = combine(-d, l, dl, l0);
            }
            for (auto& r : rays) {
                Integer dr = idot(h, r.v);
                if (dr != 0) r.v = combine(-d, r.v, dr, l0);
                r.tight.set(j);
            }
            Ray nr{std::move(l0), processed};
            rays.push_back(std::move(nr));
            processed.set(j);
            continue;
        }

        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = idot(h, rays[i].v);
            int sg = sgn(s[i]);
            if (sg > 0) pos.push_back(i);
            else if (sg < 0) neg.push_back(i);
        }

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            int sg = sgn(s[i]);
            if (sg > 0) continue;
            Ray r = rays[i];
            if (sg == 0) r.tight.set(j);
            next.push_back(std::move(r));
        }
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                boost::dynamic_bitset<> common = rays[p].tight & rays[q].tight;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.is_subset_of(rays[r].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr{combine(s[p], rays[q].v, -s[q], rays[p].v), common};
                nr.tight.set(j);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
        processed.set(j);
    }

    Generators out;
    out.lineality = std::move(lin);
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    return out;
}

}  // namespace polycurv::dd
