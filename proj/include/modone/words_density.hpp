#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modone/numeric.hpp"

namespace modone {

using Word = std::vector<long>;

enum class PeriodicityVerdict { PeriodicEvidence, AperiodicEvidence, Inconclusive };

inline const char* to_string(PeriodicityVerdict v) {
    switch (v) {
        case PeriodicityVerdict::PeriodicEvidence: return "PeriodicEvidence";
        case PeriodicityVerdict::AperiodicEvidence: return "AperiodicEvidence";
        case PeriodicityVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct WordComplexityReport {
    std::vector<long> p;  // p[n-1] = #distinct length-n subwords, n = 1..n_max
    long horizon = 0;
    PeriodicityVerdict verdict = PeriodicityVerdict::Inconclusive;
    long period = 0;  // set for PeriodicEvidence
};

/// Exact subword counts of the prefix; Morse-Hedlund evidence: p(n) <= n for
/// some n certifies eventual periodicity of the prefix, p(n) >= n+1 for all
/// tested n is aperiodicity evidence at this horizon.
inline WordComplexityReport subword_complexity(const Word& prefix, long n_max) {
    if (static_cast<long>(prefix.size()) < 4 * n_max)
        throw input_error("prefix too short: need length >= 4 * n_max");
    WordComplexityReport out;
    out.horizon = static_cast<long>(prefix.size());
    bool periodic = false;
    for (long n = 1; n <= n_max; ++n) {
        std::set<Word> seen;
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= prefix.size(); ++i)
            seen.insert(Word(prefix.begin() + static_cast<long>(i),
                             prefix.begin() + static_cast<long>(i) + n));
        out.p.push_back(static_cast<long>(seen.size()));
        if (!periodic && out.p.back() <= n) {
            periodic = true;
            out.verdict = PeriodicityVerdict::PeriodicEvidence;
            // extract the eventual period by direct scan
            for (long t = 1; t <= n; ++t) {
                bool ok = true;
                // allow a preperiod of up to a quarter of the prefix
                std::size_t start = prefix.size() / 4;
                for (std::size_t i = start; i + static_cast<std::size_t>(t) < prefix.size(); ++i)
                    if (prefix[i] != prefix[i + static_cast<std::size_t>(t)]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    out.period = t;
                    break;
                }
            }
            break;
        }
    }
    if (!periodic) {
        bool all_rich = true;
        for (long n = 1; n <= n_max; ++n)
            if (out.p[static_cast<std::size_t>(n - 1)] < n + 1) all_rich = false;
        out.verdict = all_rich ? PeriodicityVerdict::AperiodicEvidence
                               : PeriodicityVerdict::Inconclusive;
    }
    return out;
}

struct MorseWitness {
    long e = 0, modulus = 1;
    Word u, v;                    // words of length e
    long s = 0, s_prime = 0;      // s != s', words sU and s'U occur in residue m_bar
    long t = 0, t_prime = 0;      // t != t', words Vt and Vt' occur in residue n_bar
    long m_bar = 0, n_bar = 0;
    std::vector<long> su_positions, spu_positions;  // 0-based occurrence starts
    std::vector<long> vt_positions, vtp_positions;
};

/// Finite-prefix witness for the two-sided extension lemma: a left extension
/// pair (sU, s'U) recurring in one residue class mod M and a right extension
/// pair (Vt, Vt') recurring in another.  min_count occurrences stand in for
/// "infinitely many" at this horizon.
inline MorseWitness morse_witness(const Word& prefix, long e, long m, long min_count = 10) {
    if (e < 0 || m < 1) throw input_error("need e >= 0 and M >= 1");
    long probe = std::max<long>(e + 1, 4);
    if (static_cast<long>(prefix.size()) < 4 * probe) throw input_error("prefix too short");
    auto cx = subword_complexity(prefix, probe);
    if (cx.verdict == PeriodicityVerdict::PeriodicEvidence)
        throw input_error("periodic input: the extension lemma needs an aperiodic word");

    MorseWitness out;
    out.e = e;
    out.modulus = m;

    // left side: occurrences of s + U keyed by (position mod M, U)
    std::map<std::pair<long, Word>, std::map<long, std::vector<long>>> left, right;
    for (std::size_t i = 0; i + static_cast<std::size_t>(e) < prefix.size(); ++i) {
        long res = static_cast<long>(i) % m;
        Word u(prefix.begin() + static_cast<long>(i) + 1,
               prefix.begin() + static_cast<long>(i) + 1 + e);
        left[{res, std::move(u)}][prefix[i]].push_back(static_cast<long>(i));
        Word v(prefix.begin() + static_cast<long>(i),
               prefix.begin() + static_cast<long>(i) + e);
        right[{res, std::move(v)}][prefix[i + static_cast<std::size_t>(e)]].push_back(
            static_cast<long>(i));
    }

    auto pick = [&](const std::map<std::pair<long, Word>, std::map<long, std::vector<long>>>& side,
                    Word& w, long& a, long& b, long& res, std::vector<long>& pa,
                    std::vector<long>& pb) -> bool {
        for (const auto& [key, by_letter] : side) {
            std::vector<long> good;
            for (const auto& [letter, poss] : by_letter)
                if (static_cast<long>(poss.size()) >= min_count) good.push_back(letter);
            if (good.size() >= 2) {
                res = key.first;
                w = key.second;
                a = good[0];
                b = good[1];
                pa = by_letter.at(a);
                pb = by_letter.at(b);
                if (static_cast<long>(pa.size()) > min_count) pa.resize(min_count);
                if (static_cast<long>(pb.size()) > min_count) pb.resize(min_count);
                return true;
            }
        }
        return false;
    };

    if (!pick(left, out.u, out.s, out.s_prime, out.m_bar, out.su_positions, out.spu_positions) ||
        !pick(right, out.v, out.t, out.t_prime, out.n_bar, out.vt_positions, out.vtp_positions))
        throw input_error("no witness in prefix: prefix too short for e, M, min_count");
    return out;
}

struct DensityEstimate {
    Rat lower, upper;
    long window = 0;
    long horizon = 0;
};

/// Extremal window counts (1/n) min/max_h #(A in [h+1, h+n]) over the finite
/// horizon, by prefix sums.  A is a sorted list of indices >= 1.
inline DensityEstimate uniform_density(const std::vector<long>& a_sorted, long horizon,
                                       long window) {
    if (window < 1 || horizon < 10 * window)
        throw input_error("window too large: need horizon >= 10 * window");
    std::vector<long> prefix(static_cast<std::size_t>(horizon) + 1, 0);
    for (long v : a_sorted) {
        if (v < 1) throw input_error("index set members must be >= 1");
        if (v <= horizon) prefix[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 1; i < prefix.size(); ++i) prefix[i] += prefix[i - 1];
    long best_min = window + 1, best_max = -1;
    for (long h = 0; h + window <= horizon; ++h) {
        long c = prefix[static_cast<std::size_t>(h + window)] - prefix[static_cast<std::size_t>(h)];
        best_min = std::min(best_min, c);
        best_max = std::max(best_max, c);
    }
    return {make_rat(Int(best_min), Int(window)), make_rat(Int(best_max), Int(window)), window, horizon};
}

/// max over shifts and grid intervals of |(1/n) #{k in (h, h+n] : x_k in I} - |I||.
/// Intervals are [a/grid, b/grid) plus any explicit extra intervals.
inline Rat windowed_discrepancy(const std::vector<Rat>& points, long window,
                                const std::vector<long>& shifts, long grid = 64,
                                const std::vector<std::pair<Rat, Rat>>& extra = {}) {
    if (window < 1) throw input_error("window must be positive");
    for (long h : shifts)
        if (h < 0 || static_cast<std::size_t>(h + window) > points.size())
            throw input_error("shift window exceeds available points");

    Rat worst(0);
    for (long h : shifts) {
        std::vector<Rat> win(points.begin() + h, points.begin() + h + window);
        std::sort(win.begin(), win.end());
        auto count_in = [&](const Rat& lo, const Rat& hi) -> long {
            auto l = std::lower_bound(win.begin(), win.end(), lo);
            auto r = std::lower_bound(win.begin(), win.end(), hi);
            return static_cast<long>(r - l);
        };
        // cumulative counts at grid lines give every grid interval at once
        std::vector<long> cum(static_cast<std::size_t>(grid) + 1, 0);
        for (long g = 0; g <= grid; ++g)
            cum[static_cast<std::size_t>(g)] = count_in(Rat(0), make_rat(Int(g), Int(grid)));
        for (long a = 0; a < grid; ++a)
            for (long b = a + 1; b <= grid; ++b) {
                Rat dev = abs(make_rat(Int(cum[static_cast<std::size_t>(b)] -
                                           cum[static_cast<std::size_t>(a)]),
                                       Int(window)) -
                              make_rat(Int(b - a), Int(grid)));
                if (dev > worst) worst = dev;
            }
        for (const auto& [lo, hi] : extra) {
            Rat dev = abs(make_rat(Int(count_in(lo, hi)), Int(window)) - (hi - lo));
            if (dev > worst) worst = dev;
        }
    }
    return worst;
}

enum class AdmissibilityVerdict { Admissible, NotAdmissible };

/// A finite subset of the circle is always admissible; a closed interval of
/// length len is admissible iff sum |a_s| * len < 1 (the Minkowski combination
/// is then an interval shorter than the whole circle).
inline AdmissibilityVerdict admissibility_check_interval(const std::vector<Int>& coeffs,
                                                         const Rat& len) {
    Int total(0);
    for (const auto& a : coeffs) total += abs(a);
    if (total == 0) throw input_error("coefficients must not all vanish");
    if (len < 0 || len > 1) throw input_error("interval length must lie in [0, 1]");
    return Rat(total) * len < 1 ? AdmissibilityVerdict::Admissible
                                : AdmissibilityVerdict::NotAdmissible;
}

inline AdmissibilityVerdict admissibility_check_finite(const std::vector<Int>& coeffs,
                                                       std::size_t n_points) {
    Int total(0);
    for (const auto& a : coeffs) total += abs(a);
    if (total == 0) throw input_error("coefficients must not all vanish");
    (void)n_points;
    return AdmissibilityVerdict::Admissible;
}

/// Prefix of the Fibonacci word (0 -> 01, 1 -> 0) of at least the given length.
inline Word fibonacci_word(std::size_t min_length) {
    Word w{0};
    while (w.size() < min_length) {
        Word next;
        next.reserve(w.size() * 2);
        for (long c : w) {
            if (c == 0) {
                next.push_back(0);
                next.push_back(1);
            } else {
                next.push_back(0);
            }
        }
        w = std::move(next);
    }
    w.resize(min_length);
    return w;
}

}  // namespace modone
