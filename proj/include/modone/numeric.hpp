#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "modone/errors.hpp"

namespace modone {

using Int = mpz_class;
using Rat = mpq_class;

/// mpq_class(num, den) does not canonicalize; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw input_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Largest integer <= x.
inline Int floor_rat(const Rat& x) {
    return floor_div(x.get_num(), x.get_den());
}

/// Fractional part {x} = x - floor(x), in [0, 1).
inline Rat frac_rat(const Rat& x) {
    return x - Rat(floor_rat(x));
}

/// Distance from x to the nearest integer.
inline Rat dist_to_integer(const Rat& x) {
    Rat f = frac_rat(x);
    Rat g = 1 - f;
    return f < g ? f : g;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (base == 0) throw input_error("0 has no negative power");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Parses "p/q", plain integers, and decimal literals ("0.3" -> 3/10) exactly.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw input_error("bad rational literal: " + s);
        if (r.get_den() == 0) throw input_error("zero denominator: " + s);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t nfrac = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw input_error("bad decimal literal: " + s);
        Int num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw input_error("bad decimal literal: " + s);
        Rat r(num, pow_int(10, static_cast<unsigned long>(nfrac)));
        r.canonicalize();
        return r;
    }
    Int z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw input_error("bad integer literal: " + s);
    return Rat(z);
}

inline std::string rat_str(const Rat& x) {
    return x.get_str();
}

}  // namespace modone
