#pragma once

// Exact rational scalars and vectors. Every combinatorial predicate in the
// library is decided on these types; doubles only show up in angle values.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polycurv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Parses "7", "-3/4", "0.125", "1e-3" into an exact rational.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto bad = [&]() { return Error("not a rational number: '" + s + "'"); };
    if (s.empty()) throw bad();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw bad();
        if (den == 0) throw Error("zero denominator in '" + s + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mantissa = s.substr(0, e);
        try {
            std::size_t used = 0;
            exponent = std::stol(s.substr(e + 1), &used);
            if (used != s.size() - e - 1) throw bad();
        } catch (const std::logic_error&) {
            throw bad();
        }
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        mantissa.erase(0, 1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_point) throw bad();
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else {
            throw bad();
        }
    }
    if (digits.empty()) throw bad();
    Integer num(digits, 10);
    if (negative) num = -num;
    long scale = exponent - frac_digits;
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Point or direction in R^n with exact coordinates.
class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t n) : c_(n) {}
    RatVector(std::initializer_list<Rational> init) : c_(init) { canonicalize(); }
    explicit RatVector(std::vector<Rational> coords) : c_(std::move(coords)) { canonicalize(); }

    /// Convenience for integer literals: RatVector::of({1, 2, 3}).
    static RatVector of(std::initializer_list<long> ints)
    {
        RatVector v(ints.size());
        std::size_t i = 0;
        for (long x : ints) v[i++] = x;
        return v;
    }

    std::size_t size() const { return c_.size(); }
    bool empty() const { return c_.empty(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    auto begin() { return c_.begin(); }
    auto end() { return c_.end(); }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
    }

    RatVector& operator+=(const RatVector& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    RatVector& operator-=(const RatVector& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    RatVector& operator*=(const Rational& s)
    {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
    friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
    friend RatVector operator*(RatVector a, const Rational& s) { return a *= s; }
    friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }
    friend RatVector operator-(RatVector a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend bool operator==(const RatVector& a, const RatVector& b) { return a.c_ == b.c_; }
    /// Lexicographic order; used for deterministic point ordering everywhere.
    friend bool operator<(const RatVector& a, const RatVector& b)
    {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    std::vector<double> to_doubles() const
    {
        std::vector<double> d(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i].get_d();
        return d;
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].get_str();
        }
        return s + ")";
    }

    /// mpq_class built from (num, den) is not reduced until canonicalized.
    void canonicalize()
    {
        for (auto& q : c_) q.canonicalize();
    }

private:
    void check_same(const RatVector& o) const
    {
        if (o.size() != size()) throw Error("vector dimension mismatch");
    }

    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const RatVector& v) { return os << v.str(); }

inline Rational dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size()) throw Error("vector dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVector zero_vector(std::size_t n) { return RatVector(n); }

inline RatVector unit_vector(std::size_t n, std::size_t i)
{
    RatVector e(n);
    e[i] = 1;
    return e;
}

/// Positive multiple of v with coprime integer coordinates (zero stays zero).
inline RatVector primitive(const RatVector& v)
{
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    Integer g = 0;
    for (const auto& q : v) {
        Integer num = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) return v;
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i].get_num() * (l / v[i].get_den()) / g);
    return out;
}

/// Rows of equal length.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::vector<RatVector> rows) : rows_(std::move(rows))
    {
        for (const auto& r : rows_)
            if (r.size() != rows_.front().size()) throw Error("matrix is not rectangular");
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return rows_.empty() ? 0 : rows_.front().size(); }
    const RatVector& operator[](std::size_t i) const { return rows_[i]; }
    const std::vector<RatVector>& row_list() const { return rows_; }

    RatMatrix transpose() const
    {
        std::vector<RatVector> t(cols(), RatVector(rows()));
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) t[j][i] = rows_[i][j];
        return RatMatrix(std::move(t));
    }

private:
    std::vector<RatVector> rows_;
};

}  // namespace polycurv
