#pragma once

#include <algorithm>
#include <vector>

#include "modone/interval.hpp"
#include "modone/poly.hpp"
#include "modone/real_roots.hpp"

namespace modone {

namespace detail {

// approximate complex arithmetic for the Aberth iteration (round-to-nearest)
struct CPoint {
    Real re, im;

    static CPoint zero(mpfr_prec_t p) { return {Real(p), Real(p)}; }
};

inline CPoint cp_add(const CPoint& a, const CPoint& b, mpfr_prec_t p) {
    CPoint r = CPoint::zero(p);
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}
inline CPoint cp_sub(const CPoint& a, const CPoint& b, mpfr_prec_t p) {
    CPoint r = CPoint::zero(p);
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}
inline CPoint cp_mul(const CPoint& a, const CPoint& b, mpfr_prec_t p) {
    CPoint r = CPoint::zero(p);
    Real t1(p), t2(p);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    return r;
}
inline CPoint cp_div(const CPoint& a, const CPoint& b, mpfr_prec_t p) {
    Real n(p), t1(p), t2(p);
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(n.get(), t1.get(), t2.get(), MPFR_RNDN);
    CPoint r = CPoint::zero(p);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
    return r;
}
inline Real cp_abs(const CPoint& a, mpfr_prec_t p) {
    Real r(p);
    mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
    return r;
}

template <typename PolyT>
inline CPoint cp_eval(const PolyT& poly, const CPoint& z, mpfr_prec_t p) {
    CPoint acc = CPoint::zero(p);
    for (std::size_t i = poly.coeffs().size(); i-- > 0;) {
        acc = cp_mul(acc, z, p);
        Real c(p);
        mpfr_set_z(c.get(), Int(poly.coeffs()[i]).get_mpz_t(), MPFR_RNDN);
        mpfr_add(acc.re.get(), acc.re.get(), c.get(), MPFR_RNDN);
    }
    return acc;
}

// Aberth-Ehrlich simultaneous iteration; deterministic start on a circle.
inline std::vector<CPoint> aberth(const IntPoly& p, mpfr_prec_t prec, int max_sweeps) {
    int n = p.degree();
    IntPoly dp = p.derivative();
    std::vector<CPoint> z;
    z.reserve(n);
    Real r0(prec);
    mpfr_set_ui_2exp(r0.get(), 3, static_cast<mpfr_exp_t>(cauchy_root_bound_log2(p)) - 2,
                     MPFR_RNDN);  // 0.75 * 2^bound
    Real pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (int j = 0; j < n; ++j) {
        Real theta(prec);
        mpfr_set_d(theta.get(), (2.0 * j + 0.7544) / n, MPFR_RNDN);
        mpfr_mul(theta.get(), theta.get(), pi.get(), MPFR_RNDN);
        CPoint pt = CPoint::zero(prec);
        mpfr_cos(pt.re.get(), theta.get(), MPFR_RNDN);
        mpfr_sin(pt.im.get(), theta.get(), MPFR_RNDN);
        mpfr_mul(pt.re.get(), pt.re.get(), r0.get(), MPFR_RNDN);
        mpfr_mul(pt.im.get(), pt.im.get(), r0.get(), MPFR_RNDN);
        z.push_back(pt);
    }

    Real tol(prec);
    mpfr_set_ui_2exp(tol.get(), 1, -static_cast<mpfr_exp_t>(prec - 8), MPFR_RNDN);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Real worst(prec);
        mpfr_set_zero(worst.get(), 1);
        for (int j = 0; j < n; ++j) {
            CPoint pv = cp_eval(p, z[j], prec);
            CPoint dv = cp_eval(dp, z[j], prec);
            if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) continue;
            CPoint w = cp_div(pv, dv, prec);
            CPoint s = CPoint::zero(prec);
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                CPoint d = cp_sub(z[j], z[k], prec);
                if (mpfr_zero_p(d.re.get()) && mpfr_zero_p(d.im.get())) continue;
                CPoint one = CPoint::zero(prec);
                mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
                s = cp_add(s, cp_div(one, d, prec), prec);
            }
            CPoint denom = cp_sub(CPoint{Real::of_long(1, prec), Real(prec)},
                                  cp_mul(w, s, prec), prec);
            CPoint corr = cp_div(w, denom, prec);
            z[j] = cp_sub(z[j], corr, prec);
            Real ca = cp_abs(corr, prec);
            Real za = cp_abs(z[j], prec);
            mpfr_max(za.get(), za.get(), Real::of_long(1, prec).get(), MPFR_RNDN);
            mpfr_div(ca.get(), ca.get(), za.get(), MPFR_RNDN);
            if (mpfr_cmp(ca.get(), worst.get()) > 0) worst = ca;
        }
        if (mpfr_cmp(worst.get(), tol.get()) < 0) break;
    }
    return z;
}

// Rigorous Krawczyk test: does X contain exactly one root of p?
inline bool krawczyk_contains_unique(const IntPoly& p, const IntPoly& dp, const CBox& X,
                                     mpfr_prec_t prec) {
    Real mre = X.re.mid(prec), mim = X.im.mid(prec);
    CBox m{Interval::point(mre), Interval::point(mim)};
    CBox pm = eval_cbox(p, m, prec);
    CBox dX = eval_cbox(dp, X, prec);
    CBox dm = eval_cbox(dp, m, prec);
    Interval magdm = cbox::mag(dm, prec);
    if (magdm.contains_zero()) return false;
    // c ~= 1/p'(m), taken as the midpoint of the rigorous reciprocal
    CBox dmr = cbox::recip(dm, prec);
    CBox c{Interval::point(dmr.re.mid(prec)), Interval::point(dmr.im.mid(prec))};
    CBox one{Interval::of_long(1, prec), Interval::of_long(0, prec)};
    CBox K = cbox::add(cbox::sub(m, cbox::mul(c, pm, prec), prec),
                       cbox::mul(cbox::sub(one, cbox::mul(c, dX, prec), prec),
                                 cbox::sub(X, m, prec), prec),
                       prec);
    return K.interior_of(X);
}

inline CBox box_around(const CPoint& c, const Real& h, mpfr_prec_t prec) {
    Interval re{Real(prec), Real(prec)}, im{Real(prec), Real(prec)};
    mpfr_sub(re.lo.get(), c.re.get(), h.get(), MPFR_RNDD);
    mpfr_add(re.hi.get(), c.re.get(), h.get(), MPFR_RNDU);
    mpfr_sub(im.lo.get(), c.im.get(), h.get(), MPFR_RNDD);
    mpfr_add(im.hi.get(), c.im.get(), h.get(), MPFR_RNDU);
    return {re, im};
}

}  // namespace detail

/// One Krawczyk contraction; returns the shrunk box when the test passes.
inline bool krawczyk_refine_step(const IntPoly& p, const IntPoly& dp, CBox& X, mpfr_prec_t prec) {
    using namespace detail;
    Real mre = X.re.mid(prec), mim = X.im.mid(prec);
    CBox m{Interval::point(mre), Interval::point(mim)};
    CBox pm = eval_cbox(p, m, prec);
    CBox dX = eval_cbox(dp, X, prec);
    CBox dm = eval_cbox(dp, m, prec);
    if (cbox::mag(dm, prec).contains_zero()) return false;
    CBox dmr = cbox::recip(dm, prec);
    CBox c{Interval::point(dmr.re.mid(prec)), Interval::point(dmr.im.mid(prec))};
    CBox one{Interval::of_long(1, prec), Interval::of_long(0, prec)};
    CBox K = cbox::add(cbox::sub(m, cbox::mul(c, pm, prec), prec),
                       cbox::mul(cbox::sub(one, cbox::mul(c, dX, prec), prec),
                                 cbox::sub(X, m, prec), prec),
                       prec);
    if (!K.interior_of(X)) return false;
    X = K;
    return true;
}

/// Certified isolation of all complex roots of a squarefree polynomial.
/// Real roots come from exact Descartes isolation and carry an exact-zero
/// imaginary part; non-real roots are Krawczyk-certified boxes in conjugate
/// pairs.  Boxes are pairwise disjoint, each of width <= 2^-precision, sorted
/// by (Re center, Im center).
inline std::vector<CBox> isolate_complex_roots(const IntPoly& p, long precision) {
    if (p.is_zero()) throw zero_polynomial();
    if (gcd_z(p, p.derivative()).degree() > 0) throw not_squarefree();

    int n = p.degree();
    std::vector<CBox> boxes;
    if (n == 0) return boxes;

    IntPoly dp = p.derivative();
    mpfr_prec_t store = std::max<mpfr_prec_t>(precision + 16, 64);

    auto reals = isolate_real_roots(p);
    for (auto& r : reals) {
        auto rr = refine_real_root(p, r, precision + 2);
        CBox b{Interval::hull(rr.lo, rr.hi, store), Interval::of_long(0, store)};
        boxes.push_back(b);
    }
    std::size_t n_upper = (static_cast<std::size_t>(n) - reals.size()) / 2;

    if (n_upper > 0) {
        Rat target_w = pow_rat(Rat(2), -precision);
        mpfr_prec_t work = std::max<mpfr_prec_t>(128, precision + 32);
        bool done = false;
        while (!done) {
            if (work > kPrecisionCap) throw precision_cap_exceeded("complex root isolation");
            auto approx = detail::aberth(p, work, 400);
            // near-real approximations of true real roots keep a tiny nonzero
            // imaginary part, so pick the n_upper largest-im candidates; the
            // Krawczyk pass below rejects any misselection
            std::sort(approx.begin(), approx.end(),
                      [](const detail::CPoint& a, const detail::CPoint& b) {
                          int c = a.im.cmp(b.im);
                          if (c != 0) return c > 0;
                          return a.re.cmp(b.re) < 0;
                      });
            std::vector<detail::CPoint> upper(approx.begin(), approx.begin() + n_upper);
            if (!upper.empty() && upper.back().im.sign() <= 0) {
                work *= 2;
                continue;
            }
            std::vector<CBox> certified;
            bool ok = true;
            for (auto& z : upper) {
                detail::CPoint pv = detail::cp_eval(p, z, work);
                detail::CPoint dv = detail::cp_eval(dp, z, work);
                Real h(work);
                if (dv.re.is_zero() && dv.im.is_zero()) {
                    ok = false;
                    break;
                }
                Real step = detail::cp_abs(detail::cp_div(pv, dv, work), work);
                mpfr_mul_ui(h.get(), step.get(), 4, MPFR_RNDU);
                Real floorh(work);
                Real za = detail::cp_abs(z, work);
                mpfr_mul_2si(floorh.get(), za.get(), -static_cast<long>(work) + 16, MPFR_RNDU);
                mpfr_max(h.get(), h.get(), floorh.get(), MPFR_RNDU);
                CBox X = detail::box_around(z, h, work);
                bool cert = false;
                for (int tries = 0; tries < 4 && !cert; ++tries) {
                    if (detail::krawczyk_contains_unique(p, dp, X, work)) cert = true;
                    else {
                        mpfr_mul_ui(h.get(), h.get(), 8, MPFR_RNDU);
                        X = detail::box_around(z, h, work);
                    }
                }
                if (!cert) {
                    ok = false;
                    break;
                }
                // contract to target width and strictly positive imaginary part
                int stall = 0;
                while (X.re.width_rat() > target_w || X.im.width_rat() > target_w ||
                       X.im.lo.sign() <= 0) {
                    CBox before = X;
                    if (!krawczyk_refine_step(p, dp, X, work) ||
                        !(X.re.width_rat() < before.re.width_rat() ||
                          X.im.width_rat() < before.im.width_rat())) {
                        if (++stall > 2) break;
                    } else {
                        stall = 0;
                    }
                }
                if (X.re.width_rat() > target_w || X.im.width_rat() > target_w ||
                    X.im.lo.sign() <= 0) {
                    ok = false;
                    break;
                }
                certified.push_back(X);
            }
            if (ok) {
                // pairwise disjointness across all upper boxes
                for (std::size_t i = 0; i < certified.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < certified.size() && ok; ++j)
                        if (!certified[i].disjoint(certified[j])) ok = false;
            }
            if (!ok) {
                work *= 2;
                continue;
            }
            for (auto& b : certified) {
                boxes.push_back(b);
                boxes.push_back(b.conj());
            }
            done = true;
        }
    }

    std::sort(boxes.begin(), boxes.end(), [&](const CBox& a, const CBox& b) {
        Real ar = a.re.mid(store), br = b.re.mid(store);
        int c = ar.cmp(br);
        if (c != 0) return c < 0;
        return a.im.mid(store).cmp(b.im.mid(store)) < 0;
    });
    return boxes;
}

}  // namespace modone
