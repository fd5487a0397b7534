#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "modone/errors.hpp"
#include "modone/poly.hpp"

namespace modone {

struct Factorization {
    int unit = 1;                                 // +-1
    Int content{1};                               // positive integer
    std::vector<std::pair<IntPoly, int>> factors; // irreducible primitive, multiplicity

    IntPoly product() const {
        IntPoly p(Int(unit) * content);
        for (const auto& [f, m] : factors) p = p * f.pow(static_cast<unsigned>(m));
        return p;
    }
};

/// Yun's squarefree decomposition of a nonzero integer polynomial.
/// Returns primitive squarefree parts with multiplicities; the product of
/// part^multiplicity reconstructs the input up to content and sign.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw zero_polynomial();
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = primitive_part(p);
    if (f.degree() <= 0) return out;
    IntPoly fp = f.derivative();
    IntPoly g = gcd_z(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly b = *try_divide_z(f, g);
    IntPoly c = *try_divide_z(fp, g);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly a = gcd_z(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = *try_divide_z(b, a);
        c = *try_divide_z(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace detail {

// ---- arithmetic in F_p[x], p an odd word-sized prime ----

using ZpPoly = std::vector<std::uint64_t>;  // ascending, normalized

inline void zp_normalize(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t zp_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    zp_normalize(r);
    return r;
}

inline ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    zp_normalize(a);
    return a;
}

inline std::pair<ZpPoly, ZpPoly> zp_divrem(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
    zp_normalize(a);
    if (b.empty()) throw internal_error("zp division by zero");
    if (a.size() < b.size()) return {{}, a};
    std::uint64_t linv = zp_inv(b.back(), p);
    std::size_t qlen = a.size() - b.size() + 1;
    ZpPoly q(qlen, 0);
    for (std::size_t pos = qlen; pos-- > 0;) {
        std::size_t i = pos + b.size() - 1;
        std::uint64_t f = (a[i] * linv) % p;
        if (f != 0) {
            q[pos] = f;
            for (std::size_t j = 0; j < b.size(); ++j)
                a[pos + j] = (a[pos + j] + p - (f * b[j]) % p) % p;
        }
    }
    zp_normalize(a);
    zp_normalize(q);
    return {q, a};
}

inline ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    return zp_divrem(a, b, p).second;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    zp_normalize(a);
    zp_normalize(b);
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = zp_inv(a.back(), p);
        for (auto& v : a) v = (v * inv) % p;
    }
    return a;
}

inline ZpPoly zp_make_monic(ZpPoly a, std::uint64_t p) {
    zp_normalize(a);
    if (a.empty() || a.back() == 1) return a;
    std::uint64_t inv = zp_inv(a.back(), p);
    for (auto& v : a) v = (v * inv) % p;
    return a;
}

inline ZpPoly zp_from_int_poly(const IntPoly& f, std::uint64_t p) {
    ZpPoly r(f.coeffs().size());
    Int pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int m = f.coeffs()[i] % pz;
        if (m < 0) m += pz;
        r[i] = m.get_ui();
    }
    zp_normalize(r);
    return r;
}

// x^p mod f by square-and-multiply.
inline ZpPoly zp_xpow_mod(std::uint64_t e, const ZpPoly& f, std::uint64_t p) {
    ZpPoly result{1};
    ZpPoly base{0, 1};
    base = zp_mod(base, f, p);
    while (e) {
        if (e & 1) result = zp_mod(zp_mul(result, base, p), f, p);
        base = zp_mod(zp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

// Deterministic Berlekamp factorization of a monic squarefree f mod p.
inline std::vector<ZpPoly> berlekamp(const ZpPoly& f, std::uint64_t p) {
    std::size_t n = f.size() - 1;
    if (n <= 1) return {f};

    // rows of (Frobenius - I) in the basis 1, x, ..., x^{n-1}
    std::vector<ZpPoly> xp_pows(n);
    ZpPoly xp = zp_xpow_mod(p, f, p);
    xp_pows[0] = ZpPoly{1};
    for (std::size_t i = 1; i < n; ++i)
        xp_pows[i] = zp_mod(zp_mul(xp_pows[i - 1], xp, p), f, p);

    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < xp_pows[i].size(); ++j) m[i][j] = xp_pows[i][j];
        m[i][i] = (m[i][i] + p - 1) % p;
    }

    // nullspace of m^T v = 0 with v as column vectors: eliminate rows of m
    // treating columns as unknowns; m here acts on coefficient rows, so we
    // transpose first.
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[j][i];

    std::vector<int> pivot_col_of_row(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t sel = rank;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[sel], a[rank]);
        std::uint64_t inv = zp_inv(a[rank][col], p);
        for (std::size_t j = 0; j < n; ++j) a[rank][j] = (a[rank][j] * inv) % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != rank && a[i][col] != 0) {
                std::uint64_t f2 = a[i][col];
                for (std::size_t j = 0; j < n; ++j)
                    a[i][j] = (a[i][j] + p * p - (f2 * a[rank][j]) % p) % p;
            }
        }
        pivot_col_of_row[rank] = static_cast<int>(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rank; ++r) is_pivot[pivot_col_of_row[r]] = true;

    std::vector<ZpPoly> basis;
    for (std::size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        ZpPoly v(n, 0);
        v[freec] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            std::uint64_t val = a[r][freec];
            if (val) v[pivot_col_of_row[r]] = (p - val) % p;
        }
        zp_normalize(v);
        basis.push_back(std::move(v));
    }

    std::size_t nfactors = basis.size();  // nullity counts irreducible factors
    std::vector<ZpPoly> factors{f};
    if (nfactors <= 1) return factors;

    for (const auto& v : basis) {
        if (v.size() <= 1) continue;  // constant vectors split nothing
        if (factors.size() == nfactors) break;
        std::vector<ZpPoly> next;
        for (auto& u : factors) {
            if (u.size() <= 2) {  // linear factors are final
                next.push_back(std::move(u));
                continue;
            }
            ZpPoly rem = std::move(u);
            for (std::uint64_t c = 0; c < p && rem.size() > 2; ++c) {
                ZpPoly shifted = v;  // v - c
                if (shifted.empty()) {
                    if (c != 0) shifted = ZpPoly{p - c};
                } else {
                    shifted[0] = (shifted[0] + p - c) % p;
                    zp_normalize(shifted);
                }
                ZpPoly g = zp_gcd(rem, zp_mod(shifted, rem, p), p);
                if (g.size() > 1 && g.size() < rem.size()) {
                    next.push_back(g);
                    rem = zp_divrem(rem, g, p).first;
                }
            }
            next.push_back(std::move(rem));
        }
        factors = std::move(next);
    }
    for (auto& g : factors) g = zp_make_monic(std::move(g), p);
    std::sort(factors.begin(), factors.end());
    return factors;
}

// ---- arithmetic on integer polynomials mod m (nonnegative representatives) ----

using ModPoly = std::vector<Int>;

inline void mod_normalize(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly mod_reduce(const IntPoly& f, const Int& m) {
    ModPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpz_mod(r[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    }
    mod_normalize(r);
    return r;
}

inline ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& v : r) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    mod_normalize(r);
    return r;
}

inline ModPoly mod_add(ModPoly a, const ModPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
        mpz_mod(a[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    }
    mod_normalize(a);
    return a;
}

inline ModPoly mod_sub(ModPoly a, const ModPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
        mpz_mod(a[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    }
    mod_normalize(a);
    return a;
}

// division by a monic divisor, coefficients mod m
inline std::pair<ModPoly, ModPoly> mod_divrem_monic(ModPoly a, const ModPoly& b, const Int& m) {
    mod_normalize(a);
    if (b.empty() || b.back() != 1) throw internal_error("mod_divrem needs monic divisor");
    if (a.size() < b.size()) return {{}, a};
    ModPoly q(a.size() - b.size() + 1, Int(0));
    for (std::size_t i = a.size(); i + 1 >= b.size();) {
        --i;
        if (i + 1 < b.size()) break;
        Int f = a[i];
        if (f != 0) {
            q[i - (b.size() - 1)] = f;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::size_t k = i - (b.size() - 1) + j;
                a[k] -= f * b[j];
                mpz_mod(a[k].get_mpz_t(), a[k].get_mpz_t(), m.get_mpz_t());
            }
        }
        if (i == 0) break;
    }
    mod_normalize(a);
    mod_normalize(q);
    return {q, a};
}

inline IntPoly mod_symmetrize(const ModPoly& a, const Int& m) {
    Int half = m / 2;
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] > half ? a[i] - m : a[i];
    return IntPoly(std::move(c));
}

// one quadratic Hensel step: (g,h,s,t) valid mod m -> valid mod m^2
struct HenselPair {
    ModPoly g, h, s, t;
};

inline HenselPair hensel_step(const ModPoly& f_mod_m2, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    const ModPoly& f = f_mod_m2;
    auto up = [&](const ModPoly& x) {  // reinterpret mod m value mod m^2
        ModPoly r = x;
        mod_normalize(r);
        return r;
    };
    ModPoly g = up(in.g), h = up(in.h), s = up(in.s), t = up(in.t);
    ModPoly e = mod_sub(f, mod_mul(g, h, m2), m2);
    auto [q, r] = mod_divrem_monic(mod_mul(s, e, m2), h, m2);
    ModPoly g1 = mod_add(mod_add(g, mod_mul(t, e, m2), m2), mod_mul(q, g, m2), m2);
    ModPoly h1 = mod_add(h, r, m2);
    ModPoly b = mod_sub(mod_add(mod_mul(s, g1, m2), mod_mul(t, h1, m2), m2), ModPoly{Int(1)}, m2);
    auto [c, d] = mod_divrem_monic(mod_mul(s, b, m2), h1, m2);
    ModPoly s1 = mod_sub(s, d, m2);
    ModPoly t1 = mod_sub(mod_sub(t, mod_mul(t, b, m2), m2), mod_mul(c, g1, m2), m2);
    return {g1, h1, s1, t1};
}

// extended Euclid in F_p[x]: s*a + t*b = 1 for coprime a, b
inline std::pair<ZpPoly, ZpPoly> zp_xgcd_coprime(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = zp_divrem(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw internal_error("xgcd of non-coprime polynomials");
    std::uint64_t inv = zp_inv(r0[0], p);
    for (auto& v : s0) v = (v * inv) % p;
    for (auto& v : t0) v = (v * inv) % p;
    return {s0, t0};
}

inline ModPoly from_zp(const ZpPoly& a) {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
    return r;
}

// Lifts the factorization f = prod(parts) from mod p to mod m_final = p^(2^J),
// where f is monic over Z and parts are the monic mod-p factors.
inline void hensel_tree(const IntPoly& f, const std::vector<ZpPoly>& parts, std::uint64_t p,
                        const Int& m_final, std::vector<ModPoly>& out) {
    if (parts.size() == 1) {
        out.push_back(mod_reduce(f, m_final));
        return;
    }
    std::size_t mid = parts.size() / 2;
    ZpPoly gp{1}, hp{1};
    for (std::size_t i = 0; i < mid; ++i) gp = zp_mul(gp, parts[i], p);
    for (std::size_t i = mid; i < parts.size(); ++i) hp = zp_mul(hp, parts[i], p);
    auto [sp, tp] = zp_xgcd_coprime(gp, hp, p);

    HenselPair pair{from_zp(gp), from_zp(hp), from_zp(sp), from_zp(tp)};
    Int m(static_cast<unsigned long>(p));
    while (m < m_final) {
        Int m2 = m * m;
        pair = hensel_step(mod_reduce(f, m2), pair, m);
        m = m2;
    }
    // m == m_final by construction (m_final is p^(2^J))
    IntPoly g_lift = IntPoly(std::vector<Int>(pair.g.begin(), pair.g.end()));
    IntPoly h_lift = IntPoly(std::vector<Int>(pair.h.begin(), pair.h.end()));
    hensel_tree(g_lift, std::vector<ZpPoly>(parts.begin(), parts.begin() + mid), p, m_final, out);
    hensel_tree(h_lift, std::vector<ZpPoly>(parts.begin() + mid, parts.end()), p, m_final, out);
}

inline Int coeff_height(const IntPoly& f) {
    Int h(0);
    for (const auto& v : f.coeffs()) {
        Int a = abs(v);
        if (a > h) h = a;
    }
    return h;
}

// Zassenhaus for a primitive squarefree polynomial with positive leading
// coefficient; returns irreducible primitive factors with positive leading
// coefficients. Works on the monicized polynomial b^(n-1) f(x/b).
inline std::vector<IntPoly> factor_squarefree(const IntPoly& s) {
    const long kRecombinationCap = 1 << 20;
    int n = s.degree();
    if (n <= 1) return {s};

    Int b = s.leading();
    IntPoly f = s;
    if (b != 1) {
        // b^(n-1) s(x/b) is monic over Z
        std::vector<Int> c(s.coeffs());
        for (int i = 0; i < n; ++i) c[i] *= pow_int(b, static_cast<unsigned long>(n - 1 - i));
        c[n] = 1;
        f = IntPoly(std::move(c));
    }

    // prime choice: smallest odd prime keeping f squarefree mod p
    std::uint64_t p = 3;
    for (;; p += 2) {
        while (!(p % 3 && p % 5 && p % 7) && p > 7) p += 2;  // cheap sieve step
        bool isprime = true;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) { isprime = false; break; }
        if (!isprime) continue;
        if (f.leading() % Int(static_cast<unsigned long>(p)) == 0) continue;
        ZpPoly fp = zp_from_int_poly(f, p);
        ZpPoly fpd = zp_from_int_poly(f.derivative(), p);
        if (fp.size() != f.coeffs().size()) continue;
        if (zp_gcd(fp, fpd, p).size() == 1) break;
        if (p > 1000000) throw internal_error("no usable factorization prime found");
    }

    std::vector<ZpPoly> modular = berlekamp(zp_make_monic(zp_from_int_poly(f, p), p), p);
    std::vector<IntPoly> monic_factors;
    if (modular.size() == 1) {
        monic_factors.push_back(f);
    } else {
        // Landau-Mignotte style bound for monic divisors of f
        Int norm2sq(0);
        for (const auto& v : f.coeffs()) norm2sq += v * v;
        Int bound = coeff_height(f);
        mpz_sqrt(bound.get_mpz_t(), norm2sq.get_mpz_t());
        bound = (bound + 1) * pow_int(2, static_cast<unsigned long>(n + 1));

        Int m_final(static_cast<unsigned long>(p));
        while (m_final <= 2 * bound) m_final = m_final * m_final;

        std::vector<ModPoly> lifted;
        hensel_tree(f, modular, p, m_final, lifted);

        // recombination
        std::vector<bool> used(lifted.size(), false);
        IntPoly rem = f;
        long trials = 0;
        auto try_cardinality = [&](std::size_t card) -> bool {
            std::vector<std::size_t> avail;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (!used[i]) avail.push_back(i);
            if (avail.size() < card) return false;
            std::vector<std::size_t> idx(card);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                if (++trials > kRecombinationCap)
                    throw internal_error("factor recombination trial cap exceeded");
                ModPoly prod{Int(1)};
                for (std::size_t i : idx) prod = mod_mul(prod, lifted[avail[i]], m_final);
                IntPoly cand = mod_symmetrize(prod, m_final);
                if (auto q = try_divide_z(rem, cand)) {
                    monic_factors.push_back(cand);
                    rem = *q;
                    for (std::size_t i : idx) used[avail[i]] = true;
                    return true;
                }
                // next combination
                std::size_t k = card;
                while (k > 0 && idx[k - 1] == avail.size() - (card - k) - 1) --k;
                if (k == 0) return false;
                ++idx[k - 1];
                for (std::size_t j = k; j < card; ++j) idx[j] = idx[j - 1] + 1;
            }
        };
        std::size_t remaining = lifted.size();
        std::size_t card = 1;
        while (remaining > 0 && card <= remaining / 2) {
            if (try_cardinality(card)) {
                remaining = 0;
                for (std::size_t i = 0; i < lifted.size(); ++i)
                    if (!used[i]) ++remaining;
            } else {
                ++card;
            }
        }
        if (rem.degree() > 0) monic_factors.push_back(rem);
    }

    if (b == 1) return monic_factors;
    std::vector<IntPoly> out;
    out.reserve(monic_factors.size());
    for (const auto& g : monic_factors) {
        std::vector<Int> c(g.coeffs());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] *= pow_int(b, static_cast<unsigned long>(i));
        out.push_back(primitive_part(IntPoly(std::move(c))));
    }
    return out;
}

}  // namespace detail

/// Complete irreducible factorization over the integers.
inline Factorization factor_over_integers(const IntPoly& p, int max_degree = 64) {
    if (p.is_zero()) throw zero_polynomial();
    if (p.degree() > max_degree) throw degree_too_large(p.degree(), max_degree);

    Factorization out;
    out.unit = sgn(p.leading()) < 0 ? -1 : 1;
    out.content = content(p);
    if (p.degree() == 0) return out;

    for (const auto& [sf, mult] : squarefree_decomposition(p)) {
        for (auto& f : detail::factor_squarefree(sf)) out.factors.emplace_back(std::move(f), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// The d-th cyclotomic polynomial, by recursive exact division of x^d - 1.
inline IntPoly cyclotomic_poly(unsigned long d) {
    std::map<unsigned long, IntPoly> memo;
    auto compute = [&](auto&& self, unsigned long e) -> const IntPoly& {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        std::vector<Int> xe(e + 1, Int(0));
        xe[0] = -1;
        xe[e] = 1;
        IntPoly num((std::vector<Int>(xe)));
        RatPoly q = to_rat(num);
        for (unsigned long f = 1; f < e; ++f) {
            if (e % f == 0) q = exact_divide(q, to_rat(self(self, f)));
        }
        return memo.emplace(e, to_int(q)).first->second;
    };
    return compute(compute, d);
}

/// If p == +-Phi_d for some d, returns d (p must be irreducible primitive).
inline std::optional<unsigned long> cyclotomic_index(const IntPoly& p) {
    int n = p.degree();
    if (n < 1) return std::nullopt;
    Int lead = abs(p.leading());
    if (lead != 1) return std::nullopt;  // cyclotomics are monic
    unsigned long un = static_cast<unsigned long>(n);
    // phi(d) = n forces d <= 2 n^2 + 2 (phi(d) >= sqrt(d/2))
    unsigned long dmax = 2 * un * un + 2;
    for (unsigned long d = 1; d <= dmax; ++d) {
        if (euler_phi(d) != un) continue;
        IntPoly phi = cyclotomic_poly(d);
        if (p == phi || p == -phi) return d;
    }
    return std::nullopt;
}

}  // namespace modone
