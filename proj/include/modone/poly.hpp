#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "modone/errors.hpp"
#include "modone/numeric.hpp"

namespace modone {

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// Storage is normalized: the last stored coefficient is nonzero, and the
/// zero polynomial stores nothing.  C is Int (exact integers) or Rat
/// (exact rationals).
template <typename C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(C constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly monomial(C coeff, std::size_t degree) {
        if (coeff == 0) return Poly();
        std::vector<C> c(degree + 1);
        c[degree] = std::move(coeff);
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(C(1), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<C>& coeffs() const { return c_; }
    /// Coefficient of x^i (0 beyond the stored range).
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
    const C& leading() const {
        if (c_.empty()) throw zero_polynomial();
        return c_.back();
    }
    C constant() const { return coeff(0); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }
    bool operator<(const Poly& o) const {  // degree, then lexicographic from top
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (std::size_t i = c_.size(); i-- > 0;)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<C> r(std::max(c_.size(), o.c_.size()), C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<C> r(c_.size() + o.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly operator*(const C& s) const {
        if (s == 0) return Poly();
        Poly r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r(C(1));
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// L(P) = sum of |coefficients|.
    C length() const {
        C s(0);
        for (const auto& v : c_) s += abs(v);
        return s;
    }

    /// x^deg(P) * P(1/x): the coefficient-reversed polynomial.
    Poly reverse() const {
        std::vector<C> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<C> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C(static_cast<long>(i));
        return Poly(std::move(r));
    }

    /// Theta = x * d/dx, iterated `power` times.
    Poly theta(unsigned power) const {
        Poly r = *this;
        for (unsigned t = 0; t < power; ++t) {
            for (std::size_t i = 0; i < r.c_.size(); ++i)
                r.c_[i] *= C(static_cast<long>(i));
            r.normalize();
        }
        return r;
    }

    /// P(-x).
    Poly compose_neg() const {
        Poly r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    template <typename V>
    V eval(const V& x) const {
        V acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const C& v = c_[i];
            if (v == 0) continue;
            if (!first) os << (v > 0 ? " + " : " - ");
            else if (v < 0) os << "-";
            C a = abs(v);
            if (a != 1 || i == 0) os << a.get_str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<C> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(c));
}

/// Exact conversion; throws if any coefficient is non-integral.
inline IntPoly to_int(const RatPoly& p) {
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        if (v.get_den() != 1) throw not_divisible();
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

/// Quotient and remainder over the rationals (divisor nonzero).
inline std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw zero_polynomial();
    std::vector<Rat> r(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    const Rat& lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rat f = r[i] / lead;
        if (f == 0) continue;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

/// Exact quotient over the rationals; throws not_divisible when inexact.
inline RatPoly exact_divide(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw not_divisible();
    return q;
}

/// Exact quotient within Z[x], or nullopt when b does not divide a there.
inline std::optional<IntPoly> try_divide_z(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw zero_polynomial();
    if (a.is_zero()) return IntPoly();
    auto [q, r] = divrem(to_rat(a), to_rat(b));
    if (!r.is_zero()) return std::nullopt;
    for (const auto& v : q.coeffs())
        if (v.get_den() != 1) return std::nullopt;
    return to_int(q);
}

/// Positive gcd of all coefficients (0 for the zero polynomial).
inline Int content(const IntPoly& p) {
    Int g(0);
    for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

/// p / content(p), sign-normalized to a positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int c = content(p);
    if (sgn(p.leading()) < 0) c = -c;
    std::vector<Int> r;
    r.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) r.push_back(v / c);
    return IntPoly(std::move(r));
}

/// Clears denominators: smallest positive multiple of p lying in Z[x].
inline IntPoly clear_denominators(const RatPoly& p) {
    Int lcm(1);
    for (const auto& v : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        Rat s = v * Rat(lcm);
        c.push_back(s.get_num());
    }
    return IntPoly(std::move(c));
}

/// Primitive positive-leading gcd in Z[x] (primitive PRS over Q underneath).
inline IntPoly gcd_z(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    RatPoly u = to_rat(a), v = to_rat(b);
    while (!v.is_zero()) {
        auto [q, r] = divrem(u, v);
        u = std::move(v);
        v = std::move(r);
        // keep coefficients small
        if (!v.is_zero()) v = to_rat(primitive_part(clear_denominators(v)));
    }
    return primitive_part(clear_denominators(u));
}

/// Largest nu with (x-1)^nu dividing p.
inline int order_at_one(const IntPoly& p) {
    if (p.is_zero()) throw zero_polynomial();
    IntPoly cur = p;
    IntPoly xm1(std::vector<Int>{Int(-1), Int(1)});
    int nu = 0;
    while (cur.template eval<Rat>(Rat(1)) == 0) {
        cur = *try_divide_z(cur, xm1);
        ++nu;
    }
    return nu;
}

/// Reverse(p) == +-p; a necessary condition for unit-modulus roots of an
/// irreducible integer polynomial.
inline bool self_reciprocal_up_to_sign(const IntPoly& p) {
    IntPoly r = p.reverse();
    return r == p || r == -p;
}

}  // namespace modone
