#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "modone/algebraic.hpp"
#include "modone/poly.hpp"

namespace modone {

/// A named irrational-or-unknown real constant with a rigorous enclosure
/// [approx - err, approx + err].
struct SymbolicValue {
    std::string label;
    Rat approx;
    Rat err;
    bool known_irrational = false;
};

/// Coefficient of an exponential-polynomial term: an exact rational, an exact
/// element g(alpha) of Q(alpha) for the term's own base, or a symbolic real.
class ExpolyCoefficient {
  public:
    ExpolyCoefficient() : v_(Rat(0)) {}
    explicit ExpolyCoefficient(Rat r) : v_(std::move(r)) {}
    explicit ExpolyCoefficient(RatPoly in_alpha) : v_(std::move(in_alpha)) {
        normalize();
    }
    explicit ExpolyCoefficient(SymbolicValue s) : v_(std::move(s)) {
        if (std::get<SymbolicValue>(v_).err < 0)
            throw input_error("symbolic error bound must be nonnegative");
    }

    /// Boundary constructor for user input: a symbolic coefficient must be
    /// certifiably nonzero (enclosure excludes 0, or asserted irrational).
    static ExpolyCoefficient user_symbolic(SymbolicValue s) {
        if (!s.known_irrational && abs(s.approx) <= s.err)
            throw input_error("symbolic coefficient must be certifiably nonzero: " + s.label);
        return ExpolyCoefficient(std::move(s));
    }

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_in_alpha() const { return std::holds_alternative<RatPoly>(v_); }
    bool is_symbolic() const { return std::holds_alternative<SymbolicValue>(v_); }

    const Rat& rational() const { return std::get<Rat>(v_); }
    const RatPoly& in_alpha() const { return std::get<RatPoly>(v_); }
    const SymbolicValue& symbolic() const { return std::get<SymbolicValue>(v_); }

    /// Representation in Q(alpha) for exact kinds.
    RatPoly rep() const {
        if (is_rational()) return RatPoly(rational());
        if (is_in_alpha()) return in_alpha();
        throw internal_error("symbolic coefficient has no exact representation");
    }

    bool exactly_zero() const {
        if (is_rational()) return rational() == 0;
        if (is_in_alpha()) return in_alpha().is_zero();
        return false;  // symbolic values are validated nonzero
    }

    bool operator==(const ExpolyCoefficient& o) const {
        if (is_symbolic() || o.is_symbolic()) return false;
        return rep() == o.rep();
    }

  private:
    void normalize() {
        if (is_in_alpha() && in_alpha().degree() <= 0)
            v_ = in_alpha().is_zero() ? Rat(0) : in_alpha().coeff(0);
    }
    std::variant<Rat, RatPoly, SymbolicValue> v_;
};

enum class RealnessCertificate { AllRealTerms, ConjugateClosed, Unverified };

inline const char* to_string(RealnessCertificate c) {
    switch (c) {
        case RealnessCertificate::AllRealTerms: return "AllRealTerms";
        case RealnessCertificate::ConjugateClosed: return "ConjugateClosed";
        case RealnessCertificate::Unverified: return "Unverified";
    }
    return "?";
}

struct ExpolyTerm {
    AlgebraicNumber base;
    std::vector<ExpolyCoefficient> coeffs;  // ascending degree in k

    int poly_degree() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (!coeffs[i].exactly_zero()) return static_cast<int>(i);
        return -1;
    }
    bool poly_zero() const { return poly_degree() < 0; }
    bool has_symbolic() const {
        for (const auto& c : coeffs)
            if (c.is_symbolic()) return true;
        return false;
    }
};

/// x_k = sum_i F_i(k) alpha_i^k with pairwise distinct algebraic bases.
class Expoly {
  public:
    Expoly() = default;
    explicit Expoly(std::vector<ExpolyTerm> terms) {
        for (auto& t : terms) {
            for (const auto& c : t.coeffs)
                if (c.is_in_alpha() && c.in_alpha().degree() >= t.base.degree())
                    throw input_error("in-alpha coefficient degree must be below deg(minpoly)");
            if (t.poly_zero()) continue;
            while (!t.coeffs.empty() && t.coeffs.back().exactly_zero()) t.coeffs.pop_back();
            terms_.push_back(std::move(t));
        }
        for (std::size_t i = 0; i < terms_.size(); ++i)
            for (std::size_t j = i + 1; j < terms_.size(); ++j)
                if (terms_[i].base.equals(terms_[j].base))
                    throw input_error("duplicate base in exponential polynomial");
    }

    const std::vector<ExpolyTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool all_rational() const {
        for (const auto& t : terms_) {
            if (!t.base.is_rational()) return false;
            for (const auto& c : t.coeffs)
                if (!c.is_rational()) return false;
        }
        return true;
    }

    /// Exact evaluation for all-rational inputs.
    Rat eval_rational(long k) const {
        Rat sum(0);
        for (const auto& t : terms_) {
            Rat f(0);
            for (std::size_t i = t.coeffs.size(); i-- > 0;)
                f = f * Rat(k) + t.coeffs[i].rational();
            sum += f * pow_rat(t.base.rational_value(), k);
        }
        return sum;
    }

    RealnessCertificate validate() const {
        bool all_real = true;
        for (const auto& t : terms_)
            if (!t.base.is_rational() && !t.base.is_real()) all_real = false;
        if (all_real) return RealnessCertificate::AllRealTerms;

        // try to pair each non-real base with its conjugate carrying the same
        // exact coefficient representations
        for (const auto& t : terms_) {
            if (t.base.is_rational() || t.base.is_real()) continue;
            if (t.has_symbolic()) return RealnessCertificate::Unverified;
            int cj = t.base.conjugate_root_index(t.base.root_index());
            bool paired = false;
            for (const auto& u : terms_) {
                if (!(u.base.minpoly() == t.base.minpoly()) || u.base.root_index() != cj)
                    continue;
                if (u.coeffs.size() != t.coeffs.size()) break;
                bool same = true;
                for (std::size_t i = 0; i < t.coeffs.size(); ++i)
                    if (!(t.coeffs[i] == u.coeffs[i])) same = false;
                paired = same;
                break;
            }
            if (!paired) return RealnessCertificate::Unverified;
        }
        return RealnessCertificate::ConjugateClosed;
    }

    /// R(x) = prod_i minpoly(alpha_i)^(deg F_i + 1); the sequence satisfies
    /// the recurrence with R's coefficients.
    IntPoly annihilator() const {
        IntPoly r(Int(1));
        for (const auto& t : terms_)
            r = r * t.base.minpoly().pow(static_cast<unsigned>(t.poly_degree() + 1));
        return r;
    }

  private:
    std::vector<ExpolyTerm> terms_;
};

namespace detail {

// center +- err rational interval, exact arithmetic
struct RatBall {
    Rat c, e;
    RatBall operator+(const RatBall& o) const { return {c + o.c, e + o.e}; }
    RatBall operator*(const RatBall& o) const {
        return {c * o.c, abs(c) * o.e + abs(o.c) * e + e * o.e};
    }
    static RatBall exact(const Rat& r) { return {r, Rat(0)}; }
};

inline RatBall ball_of_cbox_re(const CBox& b) {
    Rat lo = b.re.lo.to_rat(), hi = b.re.hi.to_rat();
    return {(lo + hi) / 2, (hi - lo) / 2};
}

}  // namespace detail

/// The exponential polynomial of the transformed sequence
/// x~_k = sum_s b_s x_{k+s} for Q = sum_s b_s x^s, via
/// c_{j,g} = sum_{i>=g} binom(i,g) xi_{j,i} (Theta^{i-g} Q)(alpha_j).
inline Expoly apply_q_transform(const Expoly& x, const IntPoly& q) {
    if (q.is_zero()) throw input_error("transform polynomial must be nonzero");
    std::vector<ExpolyTerm> out;
    for (const auto& t : x.terms()) {
        int f = t.poly_degree();
        const IntPoly& mp = t.base.minpoly();

        // (Theta^t Q)(alpha) as a reduced representative in Q(alpha)
        std::vector<RatPoly> theta_at;
        IntPoly th = q;
        for (int i = 0; i <= f; ++i) {
            theta_at.push_back(divrem(to_rat(th), to_rat(mp)).second);
            th = th.theta(1);
        }

        ExpolyTerm nt{t.base, {}};
        nt.coeffs.resize(static_cast<std::size_t>(f) + 1);
        bool all_zero = true;
        for (int g = 0; g <= f; ++g) {
            RatPoly exact;  // exact part, reduced in Q(alpha)
            detail::RatBall symball{Rat(0), Rat(0)};
            int n_sym = 0;               // symbolic contributions folded in
            bool affine_rational = true; // all symbolic multipliers rational
            std::optional<SymbolicValue> last_sym;
            for (int i = g; i <= f; ++i) {
                const auto& xi = t.coeffs[static_cast<std::size_t>(i)];
                if (xi.exactly_zero()) continue;
                Rat bin(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(g)));
                const RatPoly& v = theta_at[static_cast<std::size_t>(i - g)];
                if (!xi.is_symbolic()) {
                    exact = exact + divrem(xi.rep() * v * RatPoly(bin), to_rat(mp)).second;
                    continue;
                }
                detail::RatBall xb{xi.symbolic().approx, xi.symbolic().err};
                if (v.degree() <= 0) {
                    Rat mult = bin * v.coeff(0);
                    if (mult == 0) continue;
                    symball = symball + xb * detail::RatBall::exact(mult);
                } else {
                    // multiplier lives in Q(alpha) \ Q: fold via an enclosure
                    detail::RatBall ab = detail::ball_of_cbox_re(t.base.box(96));
                    detail::RatBall vb{Rat(0), Rat(0)};
                    for (std::size_t d2 = v.coeffs().size(); d2-- > 0;)
                        vb = vb * ab + detail::RatBall::exact(v.coeffs()[d2]);
                    symball = symball + xb * vb * detail::RatBall::exact(bin);
                    affine_rational = false;
                }
                ++n_sym;
                last_sym = xi.symbolic();
            }
            auto& slot = nt.coeffs[static_cast<std::size_t>(g)];
            if (n_sym == 0) {
                slot = exact.is_zero() ? ExpolyCoefficient(Rat(0)) : ExpolyCoefficient(exact);
                if (!exact.is_zero()) all_zero = false;
            } else {
                bool exact_rational = exact.degree() <= 0;
                detail::RatBall eb = exact_rational
                                         ? detail::RatBall::exact(exact.is_zero() ? Rat(0)
                                                                                  : exact.coeff(0))
                                         : [&] {
                                               detail::RatBall ab =
                                                   detail::ball_of_cbox_re(t.base.box(96));
                                               detail::RatBall acc{Rat(0), Rat(0)};
                                               for (std::size_t d2 = exact.coeffs().size();
                                                    d2-- > 0;)
                                                   acc = acc * ab +
                                                         detail::RatBall::exact(exact.coeffs()[d2]);
                                               return acc;
                                           }();
                SymbolicValue sv;
                sv.label = last_sym->label + "'";
                sv.approx = symball.c + eb.c;
                sv.err = symball.e + eb.e;
                sv.known_irrational =
                    n_sym == 1 && affine_rational && exact_rational && last_sym->known_irrational;
                slot = ExpolyCoefficient(std::move(sv));
                all_zero = false;
            }
        }
        if (!all_zero) out.push_back(std::move(nt));
    }
    return Expoly(std::move(out));
}

}  // namespace modone
