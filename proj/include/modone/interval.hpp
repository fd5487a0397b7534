#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "modone/errors.hpp"
#include "modone/numeric.hpp"

namespace modone {

/// Adaptive-precision ceiling for every certified decision in the library.
inline constexpr mpfr_prec_t kPrecisionCap = 65536;

/// RAII wrapper over mpfr_t.  A Real is an exact dyadic number; rounding
/// happens only where an operation names a rounding mode.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of_long(long x, mpfr_prec_t prec = 64) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of_int(const Int& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), rnd);
        return r;
    }
    static Real of_rat(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), rnd);
        return r;
    }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(const Rat& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
    int cmp(long i) const { return mpfr_cmp_si(v_, i); }

    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator==(const Real& o) const { return cmp(o) == 0; }

    /// Exact value as a rational (every finite Real is dyadic).
    Rat to_rat() const {
        Rat q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }
    Int floor() const {
        Int z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
        return z;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(std::size_t digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    mpfr_t v_;
};

/// Closed real interval [lo, hi] with dyadic endpoints; all operations round
/// outward so the result encloses the exact image.
struct Interval {
    Real lo, hi;

    Interval() = default;
    Interval(Real l, Real h) : lo(std::move(l)), hi(std::move(h)) {}

    static Interval of_rat(const Rat& q, mpfr_prec_t prec) {
        return {Real::of_rat(q, prec, MPFR_RNDD), Real::of_rat(q, prec, MPFR_RNDU)};
    }
    static Interval of_int(const Int& z, mpfr_prec_t prec) {
        return {Real::of_int(z, prec, MPFR_RNDD), Real::of_int(z, prec, MPFR_RNDU)};
    }
    static Interval of_long(long x, mpfr_prec_t prec) {
        return {Real::of_long(x, prec), Real::of_long(x, prec)};
    }
    static Interval point(const Real& x) { return {x, x}; }
    static Interval hull(const Rat& a, const Rat& b, mpfr_prec_t prec) {
        const Rat& l = a <= b ? a : b;
        const Rat& h = a <= b ? b : a;
        return {Real::of_rat(l, prec, MPFR_RNDD), Real::of_rat(h, prec, MPFR_RNDU)};
    }

    bool valid() const { return lo.cmp(hi) <= 0; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Rat& q) const { return lo.cmp(q) <= 0 && hi.cmp(q) >= 0; }
    /// Strictly inside the other interval.
    bool interior_of(const Interval& o) const { return o.lo.cmp(lo) < 0 && hi.cmp(o.hi) < 0; }
    bool disjoint(const Interval& o) const { return hi.cmp(o.lo) < 0 || o.hi.cmp(lo) < 0; }

    Real width(mpfr_prec_t prec) const {
        Real w(prec);
        mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
        return w;
    }
    Real mid(mpfr_prec_t prec) const {
        Real m(prec);
        mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        return m;
    }
    Rat width_rat() const { return hi.to_rat() - lo.to_rat(); }
};

namespace iv {

inline Interval add(const Interval& a, const Interval& b, mpfr_prec_t p) {
    Interval r{Real(p), Real(p)};
    mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
}

inline Interval sub(const Interval& a, const Interval& b, mpfr_prec_t p) {
    Interval r{Real(p), Real(p)};
    mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
    return r;
}

inline Interval neg(const Interval& a) {
    Interval r{Real(a.hi.prec()), Real(a.lo.prec())};
    mpfr_neg(r.lo.get(), a.hi.get(), MPFR_RNDD);
    mpfr_neg(r.hi.get(), a.lo.get(), MPFR_RNDU);
    return r;
}

inline Interval mul(const Interval& a, const Interval& b, mpfr_prec_t p) {
    Real cand(p);
    Interval r{Real(p), Real(p)};
    bool first = true;
    mpfr_srcptr as[2] = {a.lo.get(), a.hi.get()};
    mpfr_srcptr bs[2] = {b.lo.get(), b.hi.get()};
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(cand.get(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), cand.get(), MPFR_RNDD);
            mpfr_mul(cand.get(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), cand.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

/// 1/a for an interval excluding zero.
inline Interval recip(const Interval& a, mpfr_prec_t p) {
    if (a.contains_zero()) throw internal_error("interval reciprocal across zero");
    Interval r{Real(p), Real(p)};
    mpfr_ui_div(r.lo.get(), 1, a.hi.get(), MPFR_RNDD);
    mpfr_ui_div(r.hi.get(), 1, a.lo.get(), MPFR_RNDU);
    return r;
}

inline Interval div(const Interval& a, const Interval& b, mpfr_prec_t p) {
    return mul(a, recip(b, p), p);
}

/// Enclosure of {x^2 : x in a}; never negative.
inline Interval square(const Interval& a, mpfr_prec_t p) {
    Interval r = mul(a, a, p);
    if (a.contains_zero()) mpfr_set_zero(r.lo.get(), 1);
    return r;
}

inline Interval abs_val(const Interval& a, mpfr_prec_t p) {
    Interval r{Real(p), Real(p)};
    if (a.lo.sign() >= 0) {
        mpfr_set(r.lo.get(), a.lo.get(), MPFR_RNDD);
        mpfr_set(r.hi.get(), a.hi.get(), MPFR_RNDU);
    } else if (a.hi.sign() <= 0) {
        mpfr_neg(r.lo.get(), a.hi.get(), MPFR_RNDD);
        mpfr_neg(r.hi.get(), a.lo.get(), MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo.get(), 1);
        Real na(p);
        mpfr_neg(na.get(), a.lo.get(), MPFR_RNDU);
        if (mpfr_cmp(na.get(), a.hi.get()) > 0) mpfr_set(r.hi.get(), na.get(), MPFR_RNDU);
        else mpfr_set(r.hi.get(), a.hi.get(), MPFR_RNDU);
    }
    return r;
}

/// Enclosure of sqrt on a nonnegative interval (lo clamped to 0).
inline Interval sqrt(const Interval& a, mpfr_prec_t p) {
    Interval r{Real(p), Real(p)};
    if (a.lo.sign() <= 0) mpfr_set_zero(r.lo.get(), 1);
    else mpfr_sqrt(r.lo.get(), a.lo.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi.get(), a.hi.get(), MPFR_RNDU);
    return r;
}

inline Interval pow_ui(const Interval& a, unsigned long e, mpfr_prec_t p) {
    Interval r = Interval::of_long(1, p);
    Interval base = a;
    while (e) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline Interval join(const Interval& a, const Interval& b, mpfr_prec_t p) {
    Interval r{Real(p), Real(p)};
    mpfr_set(r.lo.get(), (a.lo.cmp(b.lo) <= 0 ? a.lo : b.lo).get(), MPFR_RNDD);
    mpfr_set(r.hi.get(), (a.hi.cmp(b.hi) >= 0 ? a.hi : b.hi).get(), MPFR_RNDU);
    return r;
}

}  // namespace iv

/// Axis-aligned complex box.
struct CBox {
    Interval re, im;

    static CBox of_rat(const Rat& q, mpfr_prec_t p) {
        return {Interval::of_rat(q, p), Interval::of_long(0, p)};
    }
    bool is_exact_real() const { return im.lo.is_zero() && im.hi.is_zero(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool disjoint(const CBox& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
    bool interior_of(const CBox& o) const { return re.interior_of(o.re) && im.interior_of(o.im); }
    CBox conj() const { return {re, iv::neg(im)}; }
};

namespace cbox {

inline CBox add(const CBox& a, const CBox& b, mpfr_prec_t p) {
    return {iv::add(a.re, b.re, p), iv::add(a.im, b.im, p)};
}
inline CBox sub(const CBox& a, const CBox& b, mpfr_prec_t p) {
    return {iv::sub(a.re, b.re, p), iv::sub(a.im, b.im, p)};
}
inline CBox mul(const CBox& a, const CBox& b, mpfr_prec_t p) {
    return {iv::sub(iv::mul(a.re, b.re, p), iv::mul(a.im, b.im, p), p),
            iv::add(iv::mul(a.re, b.im, p), iv::mul(a.im, b.re, p), p)};
}
inline CBox recip(const CBox& a, mpfr_prec_t p) {
    Interval n = iv::add(iv::square(a.re, p), iv::square(a.im, p), p);
    // n excludes zero iff the box excludes zero
    Interval ninv = iv::recip(n, p);
    return {iv::mul(a.re, ninv, p), iv::neg(iv::mul(a.im, ninv, p))};
}
inline CBox pow_ui(const CBox& a, unsigned long e, mpfr_prec_t p) {
    CBox r{Interval::of_long(1, p), Interval::of_long(0, p)};
    CBox base = a;
    while (e) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return r;
}
/// Enclosure of |z| over the box.
inline Interval mag(const CBox& a, mpfr_prec_t p) {
    return iv::sqrt(iv::add(iv::square(a.re, p), iv::square(a.im, p), p), p);
}

}  // namespace cbox

/// Interval Horner evaluation of an integer/rational-coefficient polynomial.
template <typename PolyT>
inline Interval eval_interval(const PolyT& poly, const Interval& x, mpfr_prec_t p) {
    Interval acc = Interval::of_long(0, p);
    for (std::size_t i = poly.coeffs().size(); i-- > 0;) {
        acc = iv::mul(acc, x, p);
        acc = iv::add(acc, Interval::of_rat(Rat(poly.coeffs()[i]), p), p);
    }
    return acc;
}

template <typename PolyT>
inline CBox eval_cbox(const PolyT& poly, const CBox& z, mpfr_prec_t p) {
    CBox acc{Interval::of_long(0, p), Interval::of_long(0, p)};
    for (std::size_t i = poly.coeffs().size(); i-- > 0;) {
        acc = cbox::mul(acc, z, p);
        acc.re = iv::add(acc.re, Interval::of_rat(Rat(poly.coeffs()[i]), p), p);
    }
    return acc;
}

}  // namespace modone
