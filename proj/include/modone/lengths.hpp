#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modone/algebraic.hpp"
#include "modone/factor.hpp"
#include "modone/poly.hpp"
#include "modone/simplex.hpp"

namespace modone {

enum class Normalization { ConstantOne, LeadingOne };

inline const char* to_string(Normalization n) {
    return n == Normalization::ConstantOne ? "constant_one" : "leading_one";
}

/// min L(P*Q) over real Q of degree <= e with the pinned coefficient equal
/// to 1.  Solved as an exact-rational LP, so the optimum and the witness are
/// exact for the given degree.
inline std::pair<Rat, RatPoly> l1_min_fixed_degree(const RatPoly& p, int e, Normalization norm) {
    if (p.is_zero()) throw zero_polynomial();
    if (e < 0) throw input_error("degree must be nonnegative");
    int d = p.degree();
    std::size_t rows = static_cast<std::size_t>(d + e + 1);
    std::size_t pin = norm == Normalization::ConstantOne ? 0 : static_cast<std::size_t>(e);

    // columns: (q_j+, q_j-) for each free j, then (c_i+, c_i-) per row
    std::vector<std::size_t> free_idx;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(e); ++j)
        if (j != pin) free_idx.push_back(j);
    std::size_t nq = free_idx.size();
    std::size_t ncols = 2 * nq + 2 * rows;

    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(ncols, Rat(0)));
    std::vector<Rat> b(rows), c(ncols, Rat(0));
    std::vector<std::size_t> basis(rows);

    auto pc = [&](long i) { return (i >= 0 && i <= d) ? p.coeff(static_cast<std::size_t>(i)) : Rat(0); };

    for (std::size_t i = 0; i < rows; ++i) {
        b[i] = pc(static_cast<long>(i) - static_cast<long>(pin));
        for (std::size_t k = 0; k < nq; ++k) {
            Rat coef = -pc(static_cast<long>(i) - static_cast<long>(free_idx[k]));
            a[i][2 * k] = coef;
            a[i][2 * k + 1] = -coef;
        }
        a[i][2 * nq + 2 * i] = 1;
        a[i][2 * nq + 2 * i + 1] = -1;
        c[2 * nq + 2 * i] = 1;
        c[2 * nq + 2 * i + 1] = 1;
        if (b[i] >= 0) {
            basis[i] = 2 * nq + 2 * i;
        } else {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
            basis[i] = 2 * nq + 2 * i + 1;
        }
    }

    SimplexSolver lp(std::move(a), std::move(b), std::move(c), std::move(basis));
    lp.solve();

    std::vector<Rat> q(static_cast<std::size_t>(e) + 1, Rat(0));
    q[pin] = 1;
    for (std::size_t k = 0; k < nq; ++k) q[free_idx[k]] = lp.value(2 * k) - lp.value(2 * k + 1);
    RatPoly witness(std::move(q));
    // the exact objective must reproduce as L(P * witness)
    Rat value = (p * witness).length();
    return {value, witness};
}

struct ReducedLengthEstimate {
    Rat value;                 // exact L(P * witness)
    RatPoly witness;
    Normalization normalization = Normalization::ConstantOne;
    int degree_used = 0;
    Interval lower_bound;      // Mahler measure enclosure
    bool converged = false;    // improvement < tol over the last 8 degrees
    std::vector<Rat> sweep;    // best value per degree, nonincreasing
};

/// Upper estimate of the reduced length ell(P) = inf_Q L(PQ) by a degree
/// sweep over both normalizations, with a Mahler-measure lower certificate.
inline ReducedLengthEstimate reduced_length(const IntPoly& p, int e_max = 32,
                                            const Rat& tol = Rat(1, 1000000000)) {
    if (p.is_zero()) throw zero_polynomial();
    const int stall_window = 8;
    ReducedLengthEstimate out;
    bool have = false;
    int stall = 0;
    for (int e = 0; e <= e_max; ++e) {
        bool improved = false;
        for (auto norm : {Normalization::ConstantOne, Normalization::LeadingOne}) {
            auto [value, witness] = l1_min_fixed_degree(to_rat(p), e, norm);
            if (!have || value < out.value) {
                if (have && out.value - value >= tol) improved = true;
                out.value = value;
                out.witness = witness;
                out.normalization = norm;
                out.degree_used = e;
                have = true;
            }
        }
        out.sweep.push_back(out.value);
        stall = improved ? 0 : stall + 1;
        if (stall >= stall_window) out.converged = true;
    }
    out.lower_bound = mahler_measure(p, tol < Rat(1, 1000000) ? tol : Rat(1, 1000000));
    return out;
}

struct OverreducedLengthEstimate {
    Rat value;
    IntPoly admissible_factor;  // the chosen Q
    IntPoly quotient;           // R / Q
    ReducedLengthEstimate inner;
};

/// lambda(R) = min ell(R/Q) over integer factors Q of R whose roots are
/// simple roots of unity or of modulus < 1.  Enumeration is exhaustive over
/// the admissible factor lattice; ties break toward smaller-degree Q.
inline OverreducedLengthEstimate overreduced_length(const IntPoly& r, int e_max = 32,
                                                    const Rat& tol = Rat(1, 1000000000)) {
    if (r.is_zero()) throw zero_polynomial();
    auto fac = factor_over_integers(r);

    // per irreducible factor: max admissible multiplicity
    struct Choice {
        IntPoly f;
        int max_mult;
    };
    std::vector<Choice> choices;
    for (const auto& [f, mult] : fac.factors) {
        if (cyclotomic_index(f)) {
            choices.push_back({f, 1});  // roots of unity must stay simple
        } else {
            auto boxes = isolate_complex_roots(f, 48);
            auto classes = classify_root_moduli(f, boxes);
            bool all_lt1 = true;
            for (auto c : classes)
                if (c != ModulusClass::LT1) all_lt1 = false;
            if (all_lt1) choices.push_back({f, mult});
        }
    }

    std::optional<OverreducedLengthEstimate> best;
    std::vector<int> take(choices.size(), 0);
    while (true) {
        IntPoly q(Int(1));
        for (std::size_t i = 0; i < choices.size(); ++i)
            if (take[i] > 0) q = q * choices[i].f.pow(static_cast<unsigned>(take[i]));
        IntPoly quot = *try_divide_z(r, q);
        auto inner = reduced_length(quot, e_max, tol);
        bool better = !best || inner.value < best->value ||
                      (inner.value == best->value &&
                       (q.degree() < best->admissible_factor.degree() ||
                        (q.degree() == best->admissible_factor.degree() &&
                         q < best->admissible_factor)));
        if (better) best = OverreducedLengthEstimate{inner.value, q, quot, inner};

        // next subset in the multiplicity lattice
        std::size_t i = 0;
        while (i < choices.size() && take[i] == choices[i].max_mult) take[i++] = 0;
        if (i == choices.size()) break;
        ++take[i];
    }
    return *best;
}

/// L(R_m) for R_m = prod_j ((q_j^m / p_j^(m-1)) x^m - p_j), m = 1..m_max.
/// Decreases to prod p_j.
inline std::vector<Rat> rational_family_bound(const std::vector<std::pair<Int, Int>>& pairs,
                                              int m_max) {
    if (pairs.empty()) throw input_error("at least one (p, q) pair required");
    for (const auto& [p, q] : pairs)
        if (!(p > abs(q) && q != 0)) throw input_error("pairs must satisfy p > |q| > 0");
    std::vector<Rat> out;
    for (int m = 1; m <= m_max; ++m) {
        RatPoly rm(Rat(1));
        for (const auto& [p, q] : pairs) {
            std::vector<Rat> c(static_cast<std::size_t>(m) + 1, Rat(0));
            c[0] = Rat(-p);
            c[static_cast<std::size_t>(m)] = make_rat(
                pow_int(q, static_cast<unsigned long>(m)), pow_int(p, static_cast<unsigned long>(m - 1)));
            rm = rm * RatPoly(std::move(c));
        }
        out.push_back(rm.length());
    }
    return out;
}

struct CorollaryC2Bounds {
    Rat ell_bound;  // 1 / ell((x-1)^max(g,0) P^(f+1))
    Rat l_bound;    // best 1 / L((x-1)^(g+1) P^(f+1) Q) over candidates
    IntPoly ell_argument;
    IntPoly best_q;
};

/// Bound values for the progression/interval statements built from a minimal
/// polynomial P and the degrees f = deg F >= 0, g = deg G >= -1.
inline CorollaryC2Bounds corollary_c2_bounds(const IntPoly& p, int f, int g,
                                             const std::vector<IntPoly>& q_candidates = {},
                                             int e_max = 24) {
    if (p.is_zero()) throw zero_polynomial();
    if (f < 0 || g < -1) throw input_error("need f >= 0 and g >= -1");
    IntPoly xm1(std::vector<Int>{Int(-1), Int(1)});
    IntPoly ell_arg = xm1.pow(static_cast<unsigned>(std::max(g, 0))) *
                      p.pow(static_cast<unsigned>(f + 1));
    auto ell = reduced_length(ell_arg, e_max);

    IntPoly l_arg = xm1.pow(static_cast<unsigned>(g + 1)) * p.pow(static_cast<unsigned>(f + 1));
    std::vector<IntPoly> cands = q_candidates;
    cands.push_back(IntPoly(Int(1)));
    {
        // integer rounding of the LP witness makes a cheap default candidate
        auto est = reduced_length(l_arg, e_max);
        std::vector<Int> rounded;
        for (const auto& v : est.witness.coeffs())
            rounded.push_back(floor_rat(v + Rat(1, 2)));
        IntPoly rq(std::move(rounded));
        if (!rq.is_zero()) cands.push_back(rq);
    }
    CorollaryC2Bounds out;
    out.ell_argument = ell_arg;
    out.ell_bound = Rat(1) / ell.value;
    bool haveq = false;
    for (const auto& q : cands) {
        if (q.is_zero()) continue;
        Rat l = (l_arg * q).length();
        if (!haveq || Rat(1) / l > out.l_bound) {
            out.l_bound = Rat(1) / l;
            out.best_q = q;
            haveq = true;
        }
    }
    return out;
}

}  // namespace modone
