#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "modone/expoly.hpp"
#include "modone/interval.hpp"

namespace modone {

struct SampleEntry {
    Rat frac_lo, frac_hi;  // enclosure of {x_k - eta}, inside [0, 1)
    Int floor_k;           // floor(x_k - eta)
    Rat dist_lo, dist_hi;  // enclosure of ||x_k||
    bool undecided = false;
};

enum class SampleMode { ExactRational, Ball };

struct SequenceSample {
    long k_min = 1, k_max = 0;
    Rat eta;
    Rat eps;
    SampleMode mode = SampleMode::ExactRational;
    std::vector<SampleEntry> entries;  // index k - k_min

    const SampleEntry& at(long k) const { return entries[static_cast<std::size_t>(k - k_min)]; }
    long count() const { return k_max - k_min + 1; }
};

/// Extends x_{k+r} = -(sum_{i<r} u_i x_{k+i}) / u_r in exact rationals;
/// returns x_1..x_K (initial values are x_1..x_r).
inline std::vector<Rat> iterate_recurrence(const IntPoly& r, const std::vector<Rat>& initial,
                                           long horizon) {
    if (r.is_zero() || r.degree() < 1) throw input_error("recurrence polynomial must be nonconstant");
    std::size_t order = static_cast<std::size_t>(r.degree());
    if (initial.size() != order)
        throw input_error("expected " + std::to_string(order) + " initial values, got " +
                          std::to_string(initial.size()));
    std::vector<Rat> x = initial;
    x.resize(std::max<std::size_t>(static_cast<std::size_t>(horizon), initial.size()));
    const Rat lead(r.leading());
    for (std::size_t k = order; k < static_cast<std::size_t>(horizon); ++k) {
        Rat s(0);
        for (std::size_t i = 0; i < order; ++i) s += Rat(r.coeff(i)) * x[k - order + i];
        x[k] = -s / lead;
    }
    x.resize(static_cast<std::size_t>(horizon));
    return x;
}

namespace detail {

inline void fill_exact(SampleEntry& e, const Rat& x, const Rat& eta) {
    Rat shifted = x - eta;
    e.floor_k = floor_rat(shifted);
    e.frac_lo = e.frac_hi = shifted - Rat(e.floor_k);
    Rat d = dist_to_integer(x);
    e.dist_lo = e.dist_hi = d;
    e.undecided = false;
}

// evaluates one term F(k) alpha^k as a real enclosure; for a non-real base
// with a conjugate-closed partner this is 2 Re(F(k) alpha^k)
struct TermEvaluator {
    const ExpolyTerm* term;
    bool doubled_real_part = false;  // true for the retained half of a pair

    Interval eval(long k, mpfr_prec_t prec) const {
        const auto& t = *term;
        // keep the root-box request below the refinement cap so an
        // impossible-to-decide index degrades to Undecided, never an error
        long box_prec = static_cast<long>(std::min<mpfr_prec_t>(prec, kPrecisionCap - 64));
        if (t.base.is_rational() || t.base.is_real()) {
            Interval alpha = t.base.is_rational()
                                 ? Interval::of_rat(t.base.rational_value(), prec)
                                 : t.base.box(box_prec).re;
            Interval f = Interval::of_long(0, prec);
            Interval kk = Interval::of_long(k, prec);
            for (std::size_t i = t.coeffs.size(); i-- > 0;)
                f = iv::add(iv::mul(f, kk, prec), coeff_interval(t.coeffs[i], alpha, prec), prec);
            return iv::mul(f, iv::pow_ui(alpha, static_cast<unsigned long>(k), prec), prec);
        }
        CBox alpha = t.base.box(box_prec);
        CBox f{Interval::of_long(0, prec), Interval::of_long(0, prec)};
        CBox kk{Interval::of_long(k, prec), Interval::of_long(0, prec)};
        for (std::size_t i = t.coeffs.size(); i-- > 0;)
            f = cbox::add(cbox::mul(f, kk, prec), coeff_cbox(t.coeffs[i], alpha, prec), prec);
        CBox v = cbox::mul(f, cbox::pow_ui(alpha, static_cast<unsigned long>(k), prec), prec);
        if (doubled_real_part) {
            Interval two = Interval::of_long(2, prec);
            return iv::mul(two, v.re, prec);
        }
        // unpaired complex term: caller checks the imaginary enclosure
        last_im = v.im;
        return v.re;
    }

    static Interval coeff_interval(const ExpolyCoefficient& c, const Interval& alpha,
                                   mpfr_prec_t prec) {
        if (c.is_rational()) return Interval::of_rat(c.rational(), prec);
        if (c.is_symbolic())
            return Interval::hull(c.symbolic().approx - c.symbolic().err,
                                  c.symbolic().approx + c.symbolic().err, prec);
        return eval_interval(c.in_alpha(), alpha, prec);
    }
    static CBox coeff_cbox(const ExpolyCoefficient& c, const CBox& alpha, mpfr_prec_t prec) {
        if (c.is_in_alpha()) return eval_cbox(c.in_alpha(), alpha, prec);
        Interval re = c.is_rational()
                          ? Interval::of_rat(c.rational(), prec)
                          : Interval::hull(c.symbolic().approx - c.symbolic().err,
                                           c.symbolic().approx + c.symbolic().err, prec);
        return {re, Interval::of_long(0, prec)};
    }

    mutable Interval last_im;
};

}  // namespace detail

/// Certified sampling of fractional parts {x_k - eta}, floors and distances
/// to the nearest integer over k in [k_min, k_max].  Exact-rational inputs
/// are evaluated exactly; otherwise ball evaluation escalates precision per k
/// (doubling, capped) and flags entries Undecided when eps cannot be met.
inline SequenceSample sample(const Expoly& x, long k_min, long k_max,
                             const Rat& eps = Rat(1, 1000000000000),
                             const Rat& eta = Rat(0)) {
    if (k_min < 0 || k_max < k_min) throw input_error("bad sample range");
    SequenceSample out;
    out.k_min = k_min;
    out.k_max = k_max;
    out.eta = eta;
    out.eps = eps;

    if (x.all_rational()) {
        out.mode = SampleMode::ExactRational;
        out.entries.resize(static_cast<std::size_t>(k_max - k_min + 1));
        // incremental powers, one multiply per step per term
        std::vector<Rat> pw;
        for (const auto& t : x.terms())
            pw.push_back(pow_rat(t.base.rational_value(), k_min));
        for (long k = k_min; k <= k_max; ++k) {
            Rat v(0);
            std::size_t ti = 0;
            for (const auto& t : x.terms()) {
                Rat f(0);
                for (std::size_t i = t.coeffs.size(); i-- > 0;)
                    f = f * Rat(k) + t.coeffs[i].rational();
                v += f * pw[ti];
                pw[ti] *= t.base.rational_value();
                ++ti;
            }
            detail::fill_exact(out.entries[static_cast<std::size_t>(k - k_min)], v, eta);
        }
        return out;
    }

    out.mode = SampleMode::Ball;
    auto cert = x.validate();

    // choose term evaluators: fold conjugate pairs into one doubled term
    std::vector<detail::TermEvaluator> evals;
    std::set<std::size_t> skip;
    const auto& terms = x.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (skip.count(i)) continue;
        detail::TermEvaluator ev{&terms[i], false, {}};
        if (!terms[i].base.is_rational() && !terms[i].base.is_real() &&
            cert == RealnessCertificate::ConjugateClosed) {
            int cj = terms[i].base.conjugate_root_index(terms[i].base.root_index());
            for (std::size_t j = 0; j < terms.size(); ++j)
                if (j != i && terms[j].base.minpoly() == terms[i].base.minpoly() &&
                    terms[j].base.root_index() == cj) {
                    skip.insert(j);
                    ev.doubled_real_part = true;
                }
        }
        evals.push_back(ev);
    }

    out.entries.resize(static_cast<std::size_t>(k_max - k_min + 1));
    long n_undecided = 0;
    mpfr_prec_t warm = 64;  // precision that satisfied the previous k
    for (long k = k_min; k <= k_max; ++k) {
        SampleEntry& e = out.entries[static_cast<std::size_t>(k - k_min)];
        mpfr_prec_t prec = warm;
        Rat prev_width(-1);
        while (true) {
            Interval v = Interval::of_long(0, prec);
            bool imaginary_bad = false;
            for (const auto& ev : evals) {
                Interval tv = ev.eval(k, prec);
                if (!ev.doubled_real_part && !ev.term->base.is_rational() &&
                    !ev.term->base.is_real()) {
                    if (!ev.last_im.contains_zero()) imaginary_bad = true;
                }
                v = iv::add(v, tv, prec);
            }
            if (imaginary_bad) throw input_error("sequence value has nonzero imaginary part");

            Rat lo = v.lo.to_rat(), hi = v.hi.to_rat();
            Rat width = hi - lo;
            Rat slo = lo - eta, shi = hi - eta;
            Int fl = floor_rat(slo), fh = floor_rat(shi);
            Int rl = floor_rat(lo + Rat(1, 2)), rh = floor_rat(hi + Rat(1, 2));
            if (width <= eps && fl == fh && rl == rh) {
                warm = prec;
                e.floor_k = fl;
                e.frac_lo = slo - Rat(fl);
                e.frac_hi = shi - Rat(fl);
                Rat dlo = abs(lo - Rat(rl)), dhi = abs(hi - Rat(rl));
                if (sgn(lo - Rat(rl)) != sgn(hi - Rat(rl))) {
                    e.dist_lo = 0;
                    e.dist_hi = dlo > dhi ? dlo : dhi;
                } else {
                    e.dist_lo = dlo < dhi ? dlo : dhi;
                    e.dist_hi = dlo > dhi ? dlo : dhi;
                }
                e.undecided = false;
                break;
            }
            bool stalled = prev_width >= 0 && width > prev_width * Rat(3, 4);
            if (prec >= kPrecisionCap || (stalled && width <= prev_width)) {
                e.undecided = true;
                e.frac_lo = 0;
                e.frac_hi = 1;
                e.dist_lo = 0;
                e.dist_hi = Rat(1, 2);
                ++n_undecided;
                break;
            }
            prev_width = width;
            prec *= 2;
        }
    }
    if (n_undecided == out.count())
        throw precision_cap_exceeded("every sample in range is undecided");
    return out;
}

/// Exact sampling of an explicitly given rational sequence x_1, x_2, ...
inline SequenceSample sample_exact_values(const std::vector<Rat>& values, long k_min, long k_max,
                                          const Rat& eta = Rat(0)) {
    if (k_min < 1 || k_max < k_min || static_cast<std::size_t>(k_max) > values.size())
        throw input_error("bad sample range");
    SequenceSample out;
    out.k_min = k_min;
    out.k_max = k_max;
    out.eta = eta;
    out.eps = Rat(0);
    out.mode = SampleMode::ExactRational;
    out.entries.resize(static_cast<std::size_t>(k_max - k_min + 1));
    for (long k = k_min; k <= k_max; ++k)
        detail::fill_exact(out.entries[static_cast<std::size_t>(k - k_min)],
                           values[static_cast<std::size_t>(k - 1)], eta);
    return out;
}

struct FloorWord {
    Rat eta;
    long k_min = 1;
    std::vector<Int> letters;   // s_k = -sum_i a_i z_{k+i}
    std::vector<Int> alphabet;  // distinct letters, ascending
    bool envelope_ok = true;    // |s_k| <= L(P) * max |y_k| observed
    Rat envelope_bound;
};

/// Word s_k = -sum_i a_i z_{k+i} from sampled floors.
inline FloorWord floor_word(const SequenceSample& samples, const IntPoly& p, const Rat& eta) {
    if (p.is_zero()) throw zero_polynomial();
    if (eta != samples.eta) throw input_error("floor_word eta must match the sample's shift");
    int d = p.degree();
    if (samples.count() <= d) throw input_error("sample range shorter than recurrence order");
    FloorWord out;
    out.eta = eta;
    out.k_min = samples.k_min;

    Rat max_abs_y(0);
    for (long k = samples.k_min; k <= samples.k_max; ++k) {
        const auto& e = samples.at(k);
        if (e.undecided) throw input_error("undecided floor in sampled range");
        // y_k = x_k - z_k = frac + eta
        Rat cand = abs(e.frac_hi + eta);
        Rat cand2 = abs(e.frac_lo + eta);
        if (cand2 > cand) cand = cand2;
        if (cand > max_abs_y) max_abs_y = cand;
    }
    out.envelope_bound = Rat(p.length()) * max_abs_y;

    std::set<Int> alpha;
    for (long k = samples.k_min; k + d <= samples.k_max; ++k) {
        Int s(0);
        for (int i = 0; i <= d; ++i) s -= p.coeff(static_cast<std::size_t>(i)) * samples.at(k + i).floor_k;
        if (Rat(abs(s)) > out.envelope_bound + 1) out.envelope_ok = false;
        alpha.insert(s);
        out.letters.push_back(std::move(s));
    }
    out.alphabet.assign(alpha.begin(), alpha.end());
    return out;
}

struct ClusterInfo {
    Rat center;
    Rat radius;
    long count = 0;
};

struct ResidueReport {
    long residue = 0;
    std::vector<ClusterInfo> clusters;
    Rat diameter;      // 1 - largest circular gap (0 when <= 1 point)
    Rat sup, inf;      // of sampled fractional parts
    long samples = 0;
    long undecided = 0;
};

struct LimitSetReport {
    long modulus = 1;
    long burn_in = 0;
    Rat cluster_eps;
    std::vector<ResidueReport> residues;
};

/// Greedy circular clustering of the tail samples per residue class mod M.
inline LimitSetReport limit_set_report(const SequenceSample& samples, long m, long burn_in,
                                       const Rat& cluster_eps = Rat(1, 1000000)) {
    if (m < 1) throw input_error("modulus must be >= 1");
    if (samples.k_max - burn_in < 50 * m)
        throw input_error("insufficient samples: need k_max - burn_in >= 50*M");
    LimitSetReport out;
    out.modulus = m;
    out.burn_in = burn_in;
    out.cluster_eps = cluster_eps;

    for (long l = 0; l < m; ++l) {
        ResidueReport rr;
        rr.residue = l;
        std::vector<Rat> pts;
        bool have_extremes = false;
        for (long k = std::max(samples.k_min, burn_in + 1); k <= samples.k_max; ++k) {
            if ((k % m + m) % m != l) continue;
            const auto& e = samples.at(k);
            if (e.undecided) {
                ++rr.undecided;
                continue;
            }
            Rat midv = (e.frac_lo + e.frac_hi) / 2;
            pts.push_back(midv);
            if (!have_extremes) {
                rr.inf = e.frac_lo;
                rr.sup = e.frac_hi;
                have_extremes = true;
            } else {
                if (e.frac_lo < rr.inf) rr.inf = e.frac_lo;
                if (e.frac_hi > rr.sup) rr.sup = e.frac_hi;
            }
        }
        rr.samples = static_cast<long>(pts.size());
        if (!pts.empty()) {
            std::sort(pts.begin(), pts.end());
            // circular gaps between consecutive points
            std::size_t n = pts.size();
            Rat largest_gap = n == 1 ? Rat(1) : Rat(0);
            std::size_t cut = 0;  // index starting the largest gap
            for (std::size_t i = 0; i < n && n > 1; ++i) {
                Rat gap = (i + 1 < n ? pts[i + 1] : pts[0] + 1) - pts[i];
                if (gap > largest_gap) {
                    largest_gap = gap;
                    cut = (i + 1) % n;
                }
            }
            rr.diameter = Rat(1) - largest_gap;
            if (rr.diameter < 0) rr.diameter = 0;
            // Walk from the largest gap so the wraparound never splits a
            // cluster; merge successive points with gap <= cluster_eps and
            // count members along the way.
            struct Arc {
                Rat start, end;  // end may exceed 1
                long count;
            };
            std::vector<Arc> arcs;
            for (std::size_t step = 0; step < n; ++step) {
                Rat v = pts[(cut + step) % n];
                if (cut + step >= n) v += 1;
                if (arcs.empty() || v - arcs.back().end > cluster_eps)
                    arcs.push_back({v, v, 1});
                else {
                    arcs.back().end = v;
                    ++arcs.back().count;
                }
            }
            for (auto& arc : arcs) {
                ClusterInfo ci;
                ci.center = frac_rat((arc.start + arc.end) / 2);
                ci.radius = (arc.end - arc.start) / 2;
                ci.count = arc.count;
                rr.clusters.push_back(std::move(ci));
            }
        } else {
            rr.diameter = 0;
            rr.inf = rr.sup = 0;
        }
        out.residues.push_back(std::move(rr));
    }
    return out;
}

struct ZsetResult {
    bool prefix_ok = false;
    long first_failure = -1;
    Rat failing_value;
};

/// Exact membership of {xi (p/q)^k} in [s, t) for k = 0..K.
inline ZsetResult zset_prefix_test(const Rat& xi, const Int& p, const Int& q, const Rat& s,
                                   const Rat& t, long horizon) {
    if (xi <= 0) throw input_error("xi must be positive");
    if (!(p > q && q >= 1)) throw input_error("need p > q >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw input_error("p and q must be coprime");
    if (!(0 <= s && s < t && t <= 1)) throw input_error("need 0 <= s < t <= 1");
    Rat ratio(p, q);
    Rat x = xi;
    for (long k = 0; k <= horizon; ++k) {
        Rat f = frac_rat(x);
        if (!(s <= f && f < t)) return {false, k, f};
        x *= ratio;
    }
    return {true, -1, Rat(0)};
}

}  // namespace modone
