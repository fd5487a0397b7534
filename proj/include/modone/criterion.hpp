#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modone/engine.hpp"
#include "modone/expoly.hpp"
#include "modone/lengths.hpp"

namespace modone {

/// The field map Q(alpha) -> C determined by alpha |-> (target root of the
/// same minimal polynomial).  Every quantification over automorphisms of C in
/// the criteria reduces to enumerating these, because the conditions only
/// evaluate sigma on Q(alpha).
struct EmbeddingSpec {
    AlgebraicNumber source;
    int target_root_index;
};

struct EmbedCompareResult {
    bool equal = true;
    int differ_degree = -1;  // largest degree with sigma(xi_i) != zeta_i
};

/// Compares sigma(F) with G coefficientwise, where F's coefficients live in
/// Q(source) and G's in Q(target root); with reduced representatives this is
/// exact polynomial identity degree by degree.
inline EmbedCompareResult embed_compare(const std::vector<ExpolyCoefficient>& f,
                                        const EmbeddingSpec& spec,
                                        const std::vector<ExpolyCoefficient>& g) {
    if (spec.target_root_index < 0 || spec.target_root_index >= spec.source.degree())
        throw input_error("field mismatch: target root index outside the conjugate set");
    EmbedCompareResult out;
    std::size_t n = std::max(f.size(), g.size());
    for (std::size_t i = n; i-- > 0;) {
        const ExpolyCoefficient* a = i < f.size() ? &f[i] : nullptr;
        const ExpolyCoefficient* b = i < g.size() ? &g[i] : nullptr;
        if ((a && a->is_symbolic()) || (b && b->is_symbolic()))
            throw input_error("unsupported coefficient: symbolic values cannot be embedded");
        RatPoly ra = a ? a->rep() : RatPoly();
        RatPoly rb = b ? b->rep() : RatPoly();
        if (!(ra == rb)) {
            out.equal = false;
            out.differ_degree = static_cast<int>(i);
            return out;
        }
    }
    return out;
}

struct ConditionWitness {
    std::string condition;
    int term_i = -1;
    int term_j = -1;          // -1: conjugate absent from the term list (F_j = 0)
    int conjugate_index = -1; // root index of sigma(alpha_i) in its minpoly
    int differ_degree = -1;
};

struct ConditionReport {
    bool a = false, b = false, c = false, c_prime = false;
    bool d = false, d_prime = false, e = false;
    std::vector<ConditionWitness> witnesses;
    bool hypothesis_ok_for_ciff = true;

    bool any_abcd() const { return a || b || c || c_prime || d || d_prime; }
    bool any() const { return any_abcd() || e; }
};

namespace detail {

inline bool has_irrational_symbolic(const ExpolyTerm& t, int min_degree) {
    for (std::size_t i = static_cast<std::size_t>(min_degree); i < t.coeffs.size(); ++i)
        if (t.coeffs[i].is_symbolic() && t.coeffs[i].symbolic().known_irrational) return true;
    return false;
}

inline bool term_has_symbolic(const ExpolyTerm& t) { return t.has_symbolic(); }

// index of the term whose base is root `idx` of the same minimal polynomial
inline int find_term_with_root(const Expoly& x, const IntPoly& minpoly, int idx) {
    for (std::size_t j = 0; j < x.terms().size(); ++j)
        if (x.terms()[j].base.minpoly() == minpoly && x.terms()[j].base.root_index() == idx)
            return static_cast<int>(j);
    return -1;
}

}  // namespace detail

/// Checks conditions (a)-(e) plus the sufficient variants (c'), (d') for the
/// given representation, enumerating conjugates as sigma images; a conjugate
/// absent from the term list plays F_j = 0.
inline ConditionReport check_conditions(const Expoly& x) {
    ConditionReport out;
    const auto& terms = x.terms();

    auto add = [&](const char* cond, int i, int j, int conj_idx, int dd, bool& flag) {
        flag = true;
        out.witnesses.push_back({cond, i, j, conj_idx, dd});
    };

    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const auto& classes = t.base.all_modulus_classes();
        ModulusClass ci = classes[static_cast<std::size_t>(t.base.root_index())];
        bool alg_int = t.base.is_algebraic_integer();
        bool rou = t.base.root_of_unity_order().has_value();
        int fdeg = t.poly_degree();

        // hypothesis of the iff corollary, checked per base
        bool has_offcircle_conjugate = false;
        for (auto cc : classes)
            if (cc != ModulusClass::EQ1) has_offcircle_conjugate = true;
        if (!rou && !has_offcircle_conjugate) out.hypothesis_ok_for_ciff = false;

        if (ci == ModulusClass::GT1 && !alg_int)
            add("a", static_cast<int>(i), -1, -1, -1, out.a);
        if (ci == ModulusClass::EQ1 && !alg_int && fdeg >= 1)
            add("b", static_cast<int>(i), -1, -1, -1, out.b);
        if (ci == ModulusClass::GT1 && detail::has_irrational_symbolic(t, 0))
            add("c'", static_cast<int>(i), -1, -1, -1, out.c_prime);
        if ((ci == ModulusClass::GT1 || ci == ModulusClass::EQ1) &&
            detail::has_irrational_symbolic(t, 1))
            add("d'", static_cast<int>(i), -1, -1, -1, out.d_prime);

        for (int tgt = 0; tgt < t.base.degree(); ++tgt) {
            ModulusClass ct = classes[static_cast<std::size_t>(tgt)];
            int j = detail::find_term_with_root(x, t.base.minpoly(), tgt);
            bool sym_pair = detail::term_has_symbolic(t) ||
                            (j >= 0 && detail::term_has_symbolic(terms[static_cast<std::size_t>(j)]));

            // (c): |alpha_i| > 1, |sigma(alpha_i)| > 1, sigma(F_i) != F_j
            if (!out.c && ci == ModulusClass::GT1 && ct == ModulusClass::GT1) {
                if (j < 0) {
                    add("c", static_cast<int>(i), -1, tgt, -1, out.c);
                } else if (!sym_pair && j != static_cast<int>(i)) {
                    auto r = embed_compare(t.coeffs, {t.base, tgt},
                                           terms[static_cast<std::size_t>(j)].coeffs);
                    if (!r.equal)
                        add("c", static_cast<int>(i), j, tgt, r.differ_degree, out.c);
                }
            }
            // (d): both moduli >= 1, deg(sigma(F_i) - F_j) >= 1
            if (!out.d && ci != ModulusClass::LT1 && ct != ModulusClass::LT1) {
                if (j < 0) {
                    if (fdeg >= 1) add("d", static_cast<int>(i), -1, tgt, fdeg, out.d);
                } else if (!sym_pair && j != static_cast<int>(i)) {
                    auto r = embed_compare(t.coeffs, {t.base, tgt},
                                           terms[static_cast<std::size_t>(j)].coeffs);
                    if (!r.equal && r.differ_degree >= 1)
                        add("d", static_cast<int>(i), j, tgt, r.differ_degree, out.d);
                }
            }
            // (e): |alpha_i| > 1, |sigma(alpha_i)| >= 1, sigma(F_i) != F_j
            if (!out.e && ci == ModulusClass::GT1 && ct != ModulusClass::LT1) {
                if (j < 0) {
                    add("e", static_cast<int>(i), -1, tgt, -1, out.e);
                } else if (!sym_pair && j != static_cast<int>(i)) {
                    auto r = embed_compare(t.coeffs, {t.base, tgt},
                                           terms[static_cast<std::size_t>(j)].coeffs);
                    if (!r.equal)
                        add("e", static_cast<int>(i), j, tgt, r.differ_degree, out.e);
                }
            }
        }
    }
    return out;
}

enum class FinitenessKind { Finite, Infinite, OutOfScope };

inline const char* to_string(FinitenessKind k) {
    switch (k) {
        case FinitenessKind::Finite: return "Finite";
        case FinitenessKind::Infinite: return "Infinite";
        case FinitenessKind::OutOfScope: return "OutOfScope";
    }
    return "?";
}

struct FinitenessVerdict {
    FinitenessKind kind = FinitenessKind::OutOfScope;
    std::string reason;
    std::optional<ConditionWitness> witness;
    int failed_clause = 0;  // 1, 2 or 3 for Infinite via the iff conditions
};

/// The finiteness dichotomy: the limit set of ({x_k}) is finite iff clauses
/// (1) GT1 bases are algebraic integers, (2) conjugates of GT1 bases are LT1
/// or matched terms with equal embedded coefficients, (3) conjugates of
/// root-of-unity bases with deg F >= 1 are matched up to constants.
inline FinitenessVerdict finiteness_verdict(const Expoly& x) {
    FinitenessVerdict out;
    const auto& terms = x.terms();

    bool any_symbolic = false;
    for (const auto& t : terms)
        if (t.has_symbolic()) any_symbolic = true;
    if (any_symbolic) {
        auto rep = check_conditions(x);
        if (rep.c_prime || rep.d_prime) {
            out.kind = FinitenessKind::Infinite;
            out.reason = rep.c_prime ? "coefficient outside Q(alpha) on a modulus>1 base"
                                     : "nonconstant coefficient outside Q(alpha)";
            for (const auto& w : rep.witnesses)
                if (w.condition == (rep.c_prime ? "c'" : "d'")) {
                    out.witness = w;
                    break;
                }
            return out;
        }
        throw input_error(
            "unsupported coefficient: symbolic coefficients admit no finiteness decision here");
    }

    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const auto& classes = t.base.all_modulus_classes();
        bool rou = t.base.root_of_unity_order().has_value();
        bool off = false;
        for (auto cc : classes)
            if (cc != ModulusClass::EQ1) off = true;
        if (!rou && !off) {
            out.kind = FinitenessKind::OutOfScope;
            out.reason = "base " + std::to_string(i) +
                         " has all conjugates on the unit circle without being a root of unity";
            return out;
        }
    }

    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const auto& classes = t.base.all_modulus_classes();
        ModulusClass ci = classes[static_cast<std::size_t>(t.base.root_index())];
        if (ci == ModulusClass::GT1 && !t.base.is_algebraic_integer()) {
            out.kind = FinitenessKind::Infinite;
            out.failed_clause = 1;
            out.reason = "base " + std::to_string(i) + " has modulus > 1 but is not an algebraic integer";
            out.witness = ConditionWitness{"a", static_cast<int>(i), -1, -1, -1};
            return out;
        }
    }

    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const auto& classes = t.base.all_modulus_classes();
        if (classes[static_cast<std::size_t>(t.base.root_index())] != ModulusClass::GT1) continue;
        for (int tgt = 0; tgt < t.base.degree(); ++tgt) {
            if (classes[static_cast<std::size_t>(tgt)] == ModulusClass::LT1) continue;
            int j = detail::find_term_with_root(x, t.base.minpoly(), tgt);
            bool ok = false;
            if (j >= 0)
                ok = embed_compare(t.coeffs, {t.base, tgt},
                                   terms[static_cast<std::size_t>(j)].coeffs)
                         .equal;
            if (!ok) {
                out.kind = FinitenessKind::Infinite;
                out.failed_clause = 2;
                out.reason = "conjugate of modulus >= 1 of base " + std::to_string(i) +
                             (j < 0 ? " is missing from the terms" : " carries different coefficients");
                out.witness = ConditionWitness{"e", static_cast<int>(i), j, tgt, -1};
                return out;
            }
        }
    }

    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (!t.base.root_of_unity_order().has_value() || t.poly_degree() < 1) continue;
        for (int tgt = 0; tgt < t.base.degree(); ++tgt) {
            int j = detail::find_term_with_root(x, t.base.minpoly(), tgt);
            bool ok = false;
            int dd = -1;
            if (j >= 0) {
                auto r = embed_compare(t.coeffs, {t.base, tgt},
                                       terms[static_cast<std::size_t>(j)].coeffs);
                ok = r.equal || r.differ_degree <= 0;
                dd = r.differ_degree;
            }
            if (!ok) {
                out.kind = FinitenessKind::Infinite;
                out.failed_clause = 3;
                out.reason = "root-of-unity base " + std::to_string(i) +
                             " with nonconstant coefficients lacks a matching conjugate term";
                out.witness = ConditionWitness{"d", static_cast<int>(i), j, tgt, dd < 0 ? t.poly_degree() : dd};
                return out;
            }
        }
    }

    out.kind = FinitenessKind::Finite;
    out.reason = "clauses (1), (2), (3) all hold";
    return out;
}

enum class SpectrumFinClass { AllRationalsModOne, Empty };

inline const char* to_string(SpectrumFinClass c) {
    return c == SpectrumFinClass::AllRationalsModOne ? "AllRationalsModOne" : "Empty";
}

/// Classification of Spec_fin for x_k = F(k) alpha^k with real |alpha| > 1:
/// all of Q/Z when |alpha| is a Pisot number and F is exact over Q(alpha),
/// empty otherwise.
inline SpectrumFinClass spectrum_fin_class(const AlgebraicNumber& alpha,
                                           const std::vector<ExpolyCoefficient>& f) {
    bool f_nonzero = false;
    for (const auto& c : f)
        if (!c.exactly_zero()) f_nonzero = true;
    if (!f_nonzero) throw input_error("F must be nonzero");
    if (!alpha.is_rational() && !alpha.is_real())
        throw input_error("alpha must be real with |alpha| > 1");

    AlgebraicNumber abs_alpha = alpha.is_real_greater_than_one() ? alpha : alpha.negated();
    if (!abs_alpha.is_real_greater_than_one())
        throw input_error("alpha must satisfy |alpha| > 1");

    bool exact = true;
    for (const auto& c : f)
        if (c.is_symbolic()) exact = false;
    if (exact && abs_alpha.pisot_salem() == PisotSalemClass::Pisot)
        return SpectrumFinClass::AllRationalsModOne;
    return SpectrumFinClass::Empty;
}

struct ResidueBound {
    long residue = 0;
    Rat diameter;
    bool met_lambda_bound = false;  // sampled diameter >= 1/lambda estimate
};

struct MBounds {
    long modulus = 1;
    std::vector<ResidueBound> residues;
    bool some_residue_met = false;
};

struct BoundReport {
    IntPoly annihilator;
    Rat length_r;        // L(R)
    Rat inv_length;      // 1/L(R)
    Rat lambda_value;    // overreduced-length estimate
    Rat inv_lambda;      // 1/estimate (a certified lower version of 1/lambda)
    bool vacuous = false;  // none of (a)-(d) hold: the bounds are not asserted
    ConditionReport conditions;
    std::vector<MBounds> per_modulus;
};

/// L(R) and lambda(R) bound values for the annihilator of x, with sampled
/// per-residue diameters along arithmetic progressions for each M.
inline BoundReport theorem_bounds(const Expoly& x, const std::vector<long>& m_list,
                                  long horizon = 2000, int lambda_e_max = 32,
                                  const Rat& eps = Rat(1, 1000000000000),
                                  long burn_in = -1,
                                  const Rat& cluster_eps = Rat(1, 1000000)) {
    BoundReport out;
    out.conditions = check_conditions(x);
    out.vacuous = !out.conditions.any_abcd();
    out.annihilator = x.annihilator();
    out.length_r = Rat(out.annihilator.length());
    out.inv_length = Rat(1) / out.length_r;
    auto lam = overreduced_length(out.annihilator, lambda_e_max);
    out.lambda_value = lam.value;
    out.inv_lambda = Rat(1) / lam.value;

    SequenceSample s = sample(x, 1, horizon, eps);
    for (long m : m_list) {
        long bi = burn_in >= 0 ? burn_in : std::max<long>(50, horizon / 2);
        auto rep = limit_set_report(s, m, bi, cluster_eps);
        MBounds mb;
        mb.modulus = m;
        for (const auto& rr : rep.residues) {
            ResidueBound rb;
            rb.residue = rr.residue;
            rb.diameter = rr.diameter;
            rb.met_lambda_bound = rr.diameter >= out.inv_lambda;
            mb.some_residue_met = mb.some_residue_met || rb.met_lambda_bound;
            mb.residues.push_back(rb);
        }
        out.per_modulus.push_back(std::move(mb));
    }
    return out;
}

}  // namespace modone
