#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "modone/complex_roots.hpp"
#include "modone/factor.hpp"
#include "modone/interval.hpp"
#include "modone/poly.hpp"
#include "modone/real_roots.hpp"

namespace modone {

enum class ModulusClass { LT1, EQ1, GT1 };

enum class PisotSalemClass {
    Pisot,
    Salem,
    NeitherPisotNorSalem,
    NotRealGreaterThanOne,
    NotAlgebraicInteger,
};

inline const char* to_string(ModulusClass m) {
    switch (m) {
        case ModulusClass::LT1: return "LT1";
        case ModulusClass::EQ1: return "EQ1";
        case ModulusClass::GT1: return "GT1";
    }
    return "?";
}

inline const char* to_string(PisotSalemClass c) {
    switch (c) {
        case PisotSalemClass::Pisot: return "Pisot";
        case PisotSalemClass::Salem: return "Salem";
        case PisotSalemClass::NeitherPisotNorSalem: return "NeitherPisotNorSalem";
        case PisotSalemClass::NotRealGreaterThanOne: return "NotRealGreaterThanOne";
        case PisotSalemClass::NotAlgebraicInteger: return "NotAlgebraicInteger";
    }
    return "?";
}

/// For a self-reciprocal p of even degree 2m, the degree-m integer polynomial
/// T with p(z) = z^m T(z + 1/z).  Unit-circle roots of p correspond exactly to
/// real roots of T in (-2, 2).
inline IntPoly trace_polynomial(const IntPoly& p) {
    int d = p.degree();
    if (d < 2 || d % 2 != 0 || p.reverse() != p)
        throw internal_error("trace polynomial needs an even-degree palindrome");
    int m = d / 2;
    // C_0 = 2, C_1 = w, C_k = w C_{k-1} - C_{k-2}  (C_k(z+1/z) = z^k + z^-k)
    IntPoly w = IntPoly::x();
    IntPoly ckm1(Int(2)), ck = w;
    IntPoly t(p.coeff(static_cast<std::size_t>(m)));
    for (int k = 1; k <= m; ++k) {
        t = t + ck * p.coeff(static_cast<std::size_t>(m + k));
        IntPoly next = w * ck - ckm1;
        ckm1 = ck;
        ck = next;
    }
    return t;
}

namespace detail {

inline int count_real_roots_in_open(const IntPoly& t, const Rat& a, const Rat& b) {
    if (sgn(t.eval<Rat>(a)) == 0 || sgn(t.eval<Rat>(b)) == 0)
        throw internal_error("root at counting boundary");
    int count = 0;
    for (auto r : isolate_real_roots(t)) {
        long bits = 8;
        // shrink until the enclosure is strictly inside or strictly outside
        while (!r.is_point() && !(a < r.lo && r.hi < b) && !(r.hi <= a || b <= r.lo)) {
            r = refine_real_root(t, r, bits);
            bits *= 2;
        }
        if (r.is_point()) {
            if (a < r.lo && r.lo < b) ++count;
        } else if (a < r.lo && r.hi < b) {
            ++count;
        }
    }
    return count;
}

}  // namespace detail

/// Modulus trichotomy for every root of an irreducible primitive polynomial,
/// aligned with the deterministic root ordering.  EQ1 is decided exactly: the
/// number of unit-circle roots comes from the trace polynomial, never from
/// numerical closeness.
inline std::vector<ModulusClass> classify_root_moduli(const IntPoly& minpoly,
                                                      std::vector<CBox>& boxes) {
    int d = minpoly.degree();
    std::vector<ModulusClass> out(static_cast<std::size_t>(d), ModulusClass::LT1);
    if (d == 1) {
        int c = cmp(abs(minpoly.coeff(0)), abs(minpoly.coeff(1)));
        out[0] = c < 0 ? ModulusClass::LT1 : (c == 0 ? ModulusClass::EQ1 : ModulusClass::GT1);
        return out;
    }

    std::size_t unit_count = 0;
    if (self_reciprocal_up_to_sign(minpoly)) {
        IntPoly t = trace_polynomial(minpoly);
        if (gcd_z(t, t.derivative()).degree() > 0)
            throw internal_error("trace polynomial of an irreducible input must be squarefree");
        unit_count = 2 * static_cast<std::size_t>(
                             detail::count_real_roots_in_open(t, Rat(-2), Rat(2)));
    }

    IntPoly dp = minpoly.derivative();
    mpfr_prec_t prec = 96;
    while (true) {
        std::vector<std::size_t> straddlers;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            Interval m = cbox::mag(boxes[i], prec);
            if (m.hi.cmp(1) < 0) out[i] = ModulusClass::LT1;
            else if (m.lo.cmp(1) > 0) out[i] = ModulusClass::GT1;
            else straddlers.push_back(i);
        }
        if (straddlers.size() == unit_count) {
            for (auto i : straddlers) out[i] = ModulusClass::EQ1;
            return out;
        }
        if (prec > kPrecisionCap) throw precision_cap_exceeded("modulus classification");
        for (auto i : straddlers) {
            CBox& b = boxes[i];
            if (b.is_exact_real()) {
                RealRootInterval r{b.re.lo.to_rat(), b.re.hi.to_rat()};
                r = refine_real_root(minpoly, r, prec);
                b.re = Interval::hull(r.lo, r.hi, prec + 16);
            } else if (b.im.lo.sign() > 0) {
                for (int it = 0; it < 4; ++it) krawczyk_refine_step(minpoly, dp, b, prec + 32);
            } else {
                // lower-half mirror of some upper box: refine via its conjugate
                CBox up = b.conj();
                for (int it = 0; it < 4; ++it) krawczyk_refine_step(minpoly, dp, up, prec + 32);
                b = up.conj();
            }
        }
        prec *= 2;
    }
}

/// An algebraic number: irreducible primitive minimal polynomial plus the
/// index of the designated root in the deterministic box ordering.
class AlgebraicNumber {
  public:
    AlgebraicNumber(IntPoly minpoly, int root_index) {
        minpoly_ = primitive_part(minpoly);
        if (minpoly_.degree() < 1) throw input_error("minimal polynomial must be nonconstant");
        auto fac = factor_over_integers(minpoly_);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1)
            throw input_error("minimal polynomial must be irreducible: " + minpoly.str());
        if (root_index < 0 || root_index >= minpoly_.degree())
            throw input_error("root index out of range");
        root_index_ = root_index;
        sys_ = std::make_shared<System>();
    }

    static AlgebraicNumber of_rational(const Rat& r) {
        return AlgebraicNumber(IntPoly(std::vector<Int>{-r.get_num(), r.get_den()}), 0);
    }

    const IntPoly& minpoly() const { return minpoly_; }
    int root_index() const { return root_index_; }
    int degree() const { return minpoly_.degree(); }
    bool is_rational() const { return degree() == 1; }
    Rat rational_value() const {
        if (!is_rational()) throw internal_error("not rational");
        return Rat(-minpoly_.coeff(0)) / Rat(minpoly_.coeff(1));
    }
    bool is_algebraic_integer() const { return minpoly_.leading() == 1; }

    bool equals(const AlgebraicNumber& o) const {
        return minpoly_ == o.minpoly_ && root_index_ == o.root_index_;
    }

    /// Designated root box, width <= 2^-precision.  Refinement never changes
    /// the designated root: boxes only shrink in place.
    CBox box(long precision) const { return box_of(root_index_, precision); }

    /// Box of the idx-th conjugate (same ordering).
    CBox box_of(int idx, long precision) const {
        std::lock_guard<std::mutex> lock(sys_->mu);
        ensure_boxes_locked();
        Rat target = pow_rat(Rat(2), -precision);
        CBox& b = sys_->boxes[static_cast<std::size_t>(idx)];
        if (b.re.width_rat() <= target && b.im.width_rat() <= target) return b;
        if (b.is_exact_real()) {
            RealRootInterval r{b.re.lo.to_rat(), b.re.hi.to_rat()};
            r = refine_real_root(minpoly_, r, precision);
            b.re = Interval::hull(r.lo, r.hi,
                                  std::max<mpfr_prec_t>(64, precision + 16));
        } else {
            bool lower = b.im.hi.sign() < 0;
            CBox x = lower ? b.conj() : b;
            IntPoly dp = minpoly_.derivative();
            mpfr_prec_t prec = std::max<mpfr_prec_t>(128, precision + 32);
            while (x.re.width_rat() > target || x.im.width_rat() > target) {
                if (prec > kPrecisionCap) throw precision_cap_exceeded("root refinement");
                bool moved = false;
                for (int it = 0; it < 6; ++it)
                    if (krawczyk_refine_step(minpoly_, dp, x, prec)) moved = true;
                if (!(x.re.width_rat() > target || x.im.width_rat() > target)) break;
                if (!moved) prec *= 2;
                else prec = prec + prec / 2;
            }
            b = lower ? x.conj() : x;
        }
        return b;
    }

    bool is_real() const {
        std::lock_guard<std::mutex> lock(sys_->mu);
        ensure_boxes_locked();
        return sys_->boxes[static_cast<std::size_t>(root_index_)].is_exact_real();
    }

    /// Index of the complex conjugate of root idx (idx itself when real).
    int conjugate_root_index(int idx) const {
        std::lock_guard<std::mutex> lock(sys_->mu);
        ensure_boxes_locked();
        const CBox& b = sys_->boxes[static_cast<std::size_t>(idx)];
        if (b.is_exact_real()) return idx;
        for (std::size_t j = 0; j < sys_->boxes.size(); ++j) {
            const CBox& c = sys_->boxes[j];
            if (c.is_exact_real()) continue;
            if (static_cast<int>(j) != idx && !c.disjoint(b.conj())) return static_cast<int>(j);
        }
        throw internal_error("conjugate root not found");
    }

    const std::vector<ModulusClass>& all_modulus_classes() const {
        std::lock_guard<std::mutex> lock(sys_->mu);
        ensure_boxes_locked();
        if (!sys_->classes)
            sys_->classes = classify_root_moduli(minpoly_, sys_->boxes);
        return *sys_->classes;
    }

    ModulusClass modulus_class() const {
        return all_modulus_classes()[static_cast<std::size_t>(root_index_)];
    }

    std::optional<unsigned long> root_of_unity_order() const {
        return cyclotomic_index(minpoly_);
    }

    /// Exact decision: designated root is real and > 1.
    bool is_real_greater_than_one() const {
        if (is_rational()) return rational_value() > 1;
        if (!is_real()) return false;
        if (sgn(minpoly_.eval<Rat>(Rat(1))) == 0) throw internal_error("irreducible with root 1");
        long prec = 8;
        while (true) {
            CBox b = box(prec);
            if (b.re.lo.cmp(1) > 0) return true;
            if (b.re.hi.cmp(1) < 0) return false;
            prec *= 2;
            if (prec > kPrecisionCap) throw precision_cap_exceeded("comparison with 1");
        }
    }

    PisotSalemClass pisot_salem() const {
        if (!is_algebraic_integer()) return PisotSalemClass::NotAlgebraicInteger;
        if (!is_real_greater_than_one()) return PisotSalemClass::NotRealGreaterThanOne;
        const auto& cls = all_modulus_classes();
        bool any_eq1 = false;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (static_cast<int>(i) == root_index_) continue;
            if (cls[i] == ModulusClass::GT1) return PisotSalemClass::NeitherPisotNorSalem;
            if (cls[i] == ModulusClass::EQ1) any_eq1 = true;
        }
        return any_eq1 ? PisotSalemClass::Salem : PisotSalemClass::Pisot;
    }

    /// The algebraic number -alpha (designated root mirrored).
    AlgebraicNumber negated() const {
        IntPoly neg = primitive_part(minpoly_.compose_neg());
        AlgebraicNumber out(neg, 0);
        long prec = 16;
        CBox mine = box(prec);
        CBox want{iv::neg(mine.re), mine.is_exact_real() ? mine.im : iv::neg(mine.im)};
        while (true) {
            int hits = 0, hit = -1;
            for (int j = 0; j < out.degree(); ++j) {
                if (!out.box_of(j, prec).disjoint(want)) {
                    ++hits;
                    hit = j;
                }
            }
            if (hits == 1) {
                out.root_index_ = hit;
                return out;
            }
            prec *= 2;
            if (prec > kPrecisionCap) throw precision_cap_exceeded("negation matching");
            mine = box(prec);
            want = CBox{iv::neg(mine.re), mine.is_exact_real() ? mine.im : iv::neg(mine.im)};
        }
    }

  private:
    struct System {
        std::vector<CBox> boxes;
        std::optional<std::vector<ModulusClass>> classes;
        bool isolated = false;
        std::mutex mu;
    };

    void ensure_boxes_locked() const {
        if (!sys_->isolated) {
            sys_->boxes = isolate_complex_roots(minpoly_, 48);
            sys_->isolated = true;
        }
    }

    IntPoly minpoly_;
    int root_index_;
    std::shared_ptr<System> sys_;
};

/// Spec facade: certified boxes for all roots of a squarefree polynomial.
inline std::vector<CBox> isolate_roots(const IntPoly& p, long precision_bits) {
    return isolate_complex_roots(p, precision_bits);
}

/// Mahler measure |lc| * prod max(1, |root|), enclosed to width <= tol.
/// Unit-circle and smaller roots contribute exactly 1 via the certified
/// trichotomy; only the moduli of GT1 roots are approximated.
inline Interval mahler_measure(const IntPoly& p, const Rat& tol) {
    if (p.is_zero()) throw zero_polynomial();
    if (tol <= 0) throw input_error("tolerance must be positive");
    auto fac = factor_over_integers(p);

    Int exact = fac.content;
    struct Gt1Root {
        IntPoly poly;
        CBox box;
        int mult;
    };
    std::vector<Gt1Root> gt1;
    for (const auto& [f, mult] : fac.factors) {
        if (f.degree() == 1) {
            Int a = abs(f.coeff(1)), b = abs(f.coeff(0));
            Int m = a > b ? a : b;  // |lc| * max(1, |root|) exactly
            exact *= pow_int(m, static_cast<unsigned long>(mult));
            continue;
        }
        exact *= pow_int(abs(f.leading()), static_cast<unsigned long>(mult));
        auto boxes = isolate_complex_roots(f, 48);
        auto classes = classify_root_moduli(f, boxes);
        for (std::size_t i = 0; i < boxes.size(); ++i)
            if (classes[i] == ModulusClass::GT1) gt1.push_back({f, boxes[i], mult});
    }

    mpfr_prec_t prec = 96;
    while (true) {
        Interval prod = Interval::of_int(exact, prec);
        for (const auto& g : gt1) {
            Interval m = cbox::mag(g.box, prec);
            prod = iv::mul(prod, iv::pow_ui(m, static_cast<unsigned long>(g.mult), prec), prec);
        }
        if (prod.width_rat() <= tol) return prod;
        if (prec > kPrecisionCap) throw precision_cap_exceeded("mahler measure");
        for (auto& g : gt1) {
            if (g.box.is_exact_real()) {
                RealRootInterval r{g.box.re.lo.to_rat(), g.box.re.hi.to_rat()};
                r = refine_real_root(g.poly, r, prec);
                g.box.re = Interval::hull(r.lo, r.hi, prec + 16);
            } else {
                bool lower = g.box.im.hi.sign() < 0;
                CBox x = lower ? g.box.conj() : g.box;
                IntPoly dp = g.poly.derivative();
                for (int it = 0; it < 6; ++it) krawczyk_refine_step(g.poly, dp, x, prec + 32);
                g.box = lower ? x.conj() : x;
            }
        }
        prec *= 2;
    }
}

}  // namespace modone
