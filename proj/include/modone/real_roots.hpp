#pragma once

#include <utility>
#include <vector>

#include "modone/interval.hpp"
#include "modone/poly.hpp"

namespace modone {

/// A real root enclosure with exact rational (dyadic) endpoints.
/// lo == hi marks an exact rational root.
struct RealRootInterval {
    Rat lo, hi;
    bool is_point() const { return lo == hi; }
};

namespace detail {

inline int sign_variations(const std::vector<Int>& c) {
    int v = 0, last = 0;
    for (const auto& x : c) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// p(x + t) for integer t, in place
inline void taylor_shift(std::vector<Int>& c, const Int& t) {
    if (t == 0 || c.size() <= 1) return;
    for (std::size_t i = c.size() - 1; i-- > 0;)
        for (std::size_t j = i; j + 1 < c.size(); ++j) c[j] += t * c[j + 1];
}

// 2^deg * p(x/2)
inline void scale_half(std::vector<Int>& c) {
    std::size_t d = c.size() - 1;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] <<= (d - i);
}

// variations of (x+1)^deg p(1/(x+1)): the Descartes test for (0,1)
inline int descartes_01(const std::vector<Int>& c) {
    std::vector<Int> t(c.rbegin(), c.rend());
    taylor_shift(t, Int(1));
    return sign_variations(t);
}

struct IsolationNode {
    Rat lo, hi;          // real interval
    std::vector<Int> q;  // polynomial whose (0,1) roots are the interval's roots
};

// isolates roots of p in (lo, hi), where q encodes p on (0,1)
inline void isolate_01(IsolationNode node, std::vector<RealRootInterval>& out) {
    std::vector<IsolationNode> stack{std::move(node)};
    while (!stack.empty()) {
        IsolationNode n = std::move(stack.back());
        stack.pop_back();
        int v = descartes_01(n.q);
        if (v == 0) continue;
        if (v == 1) {
            out.push_back({n.lo, n.hi});
            continue;
        }
        Rat mid = (n.lo + n.hi) / 2;
        std::vector<Int> left = n.q;
        scale_half(left);
        std::vector<Int> right = left;
        taylor_shift(right, Int(1));
        // root exactly at the midpoint shows up as a vanishing constant term
        // of the right-half polynomial
        if (!right.empty() && right[0] == 0) {
            out.push_back({mid, mid});
            // deflate the shared zero at 0 of the right half / at 1 of the left
            right.erase(right.begin());
            std::vector<Int> defl(left.size() - 1);
            // divide left by (x - 1): synthetic division
            Int carry(0);
            for (std::size_t i = left.size(); i-- > 1;) {
                carry += left[i];
                defl[i - 1] = carry;
            }
            left = std::move(defl);
        }
        stack.push_back({n.lo, mid, std::move(left)});
        stack.push_back({mid, n.hi, std::move(right)});
    }
}

}  // namespace detail

/// Power-of-two bound 2^E with all complex roots of p inside |z| < 2^E.
inline unsigned long cauchy_root_bound_log2(const IntPoly& p) {
    Int lead = abs(p.leading());
    Int maxc(0);
    for (const auto& v : p.coeffs()) {
        Int a = abs(v);
        if (a > maxc) maxc = a;
    }
    // 1 + max|a_i|/|a_n| <= 1 + ceil(max/lead)
    Int bound = 1 + (maxc + lead - 1) / lead;
    unsigned long e = 0;
    Int pw(1);
    while (pw < bound) {
        pw <<= 1;
        ++e;
    }
    return e + 1;
}

/// Exact isolation of all real roots of a squarefree integer polynomial.
/// Intervals are open, pairwise disjoint, sorted ascending; point entries are
/// exact rational roots.
inline std::vector<RealRootInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw zero_polynomial();
    std::vector<RealRootInterval> out;
    if (p.degree() == 0) return out;

    IntPoly f = primitive_part(p);
    // split off a root at zero so interval endpoints stay non-roots
    bool root_at_zero = f.constant() == 0;
    if (root_at_zero) {
        std::vector<Int> c(f.coeffs().begin() + 1, f.coeffs().end());
        f = IntPoly(std::move(c));
    }

    unsigned long e = cauchy_root_bound_log2(f);
    Rat bound = pow_rat(Rat(2), static_cast<long>(e));

    // positive side: roots of f(2^e x) in (0,1)
    std::vector<Int> pos = f.coeffs();
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] <<= (e * i);
    detail::isolate_01({Rat(0), bound, pos}, out);

    // negative side: roots of f(-2^e x) in (0,1) mirror to (-2^e, 0)
    std::vector<Int> neg = pos;
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    std::vector<RealRootInterval> nout;
    detail::isolate_01({Rat(0), bound, neg}, nout);
    for (auto& r : nout) out.push_back({-r.hi, -r.lo});

    if (root_at_zero) out.push_back({Rat(0), Rat(0)});
    std::sort(out.begin(), out.end(),
              [](const RealRootInterval& a, const RealRootInterval& b) { return a.lo < b.lo; });

    // Endpoints of open intervals may coincide with extracted rational point
    // roots (split points), where p itself vanishes.  Shrink those endpoints
    // using g = p with all point roots divided out; g keeps exactly the one
    // sign change inside each interval.
    bool has_points = false;
    for (const auto& r : out)
        if (r.is_point()) has_points = true;
    if (has_points) {
        IntPoly g = f;
        for (const auto& r : out) {
            if (!r.is_point() || r.lo == 0) continue;
            IntPoly lin(std::vector<Int>{-r.lo.get_num(), r.lo.get_den()});
            g = *try_divide_z(g, lin);
        }
        for (auto& r : out) {
            if (r.is_point()) continue;
            for (int side = 0; side < 2; ++side) {
                while (sgn(p.eval<Rat>(side == 0 ? r.lo : r.hi)) == 0) {
                    Rat mid = (r.lo + r.hi) / 2;
                    bool root_right = sgn(g.eval<Rat>(mid)) != sgn(g.eval<Rat>(r.hi));
                    if (root_right) r.lo = mid;
                    else r.hi = mid;
                }
            }
        }
    }
    return out;
}

/// Shrinks an isolating interval until hi - lo <= 2^-target_bits, by interval
/// Newton with exact-sign bisection fallback.  The enclosure stays inside the
/// input interval, so the designated root never changes.
inline RealRootInterval refine_real_root(const IntPoly& p, RealRootInterval r, long target_bits) {
    if (r.is_point()) return r;
    IntPoly dp = p.derivative();
    Rat target = pow_rat(Rat(2), -target_bits);
    int sign_lo = sgn(p.eval<Rat>(r.lo));
    if (sign_lo == 0) throw internal_error("isolating interval endpoint is a root");

    mpfr_prec_t prec = 128;
    while (r.hi - r.lo > target) {
        if (prec > kPrecisionCap) throw precision_cap_exceeded("real root refinement");
        Interval x = Interval::hull(r.lo, r.hi, prec);
        Interval dpx = eval_interval(dp, x, prec);
        bool stepped = false;
        if (!dpx.contains_zero()) {
            Real m = x.mid(prec);
            Interval pm = eval_interval(p, Interval::point(m), prec);
            Interval nstep = iv::sub(Interval::point(m), iv::div(pm, dpx, prec), prec);
            Rat nlo = nstep.lo.to_rat(), nhi = nstep.hi.to_rat();
            if (nlo < r.lo) nlo = r.lo;
            if (nhi > r.hi) nhi = r.hi;
            if (nlo <= nhi && (nhi - nlo) < (r.hi - r.lo) * Rat(3, 4)) {
                // Newton box may have lost the sign invariant at endpoints;
                // reestablish it exactly.
                int slo = sgn(p.eval<Rat>(nlo));
                int shi = sgn(p.eval<Rat>(nhi));
                if (slo == 0) {
                    r = {nlo, nlo};
                    return r;
                }
                if (shi == 0) {
                    r = {nhi, nhi};
                    return r;
                }
                if (slo != shi) {
                    r = {nlo, nhi};
                    sign_lo = slo;
                    stepped = true;
                }
            }
        }
        if (!stepped) {
            Rat mid = (r.lo + r.hi) / 2;
            int sm = sgn(p.eval<Rat>(mid));
            if (sm == 0) {
                r = {mid, mid};
                return r;
            }
            if (sm == sign_lo) r.lo = mid;
            else r.hi = mid;
            prec = prec + prec / 2;
        }
    }
    return r;
}

}  // namespace modone
