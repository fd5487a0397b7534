#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modone/criterion.hpp"
#include "modone/engine.hpp"
#include "modone/expoly.hpp"
#include "modone/lengths.hpp"
#include "modone/words_density.hpp"

namespace modone {

using Json = nlohmann::ordered_json;

// ---- polynomials: ascending coefficient lists, [-3, 2] for 2x - 3 ----

inline Json emit_int(const Int& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

inline Int parse_int_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Int z;
        if (mpz_set_str(z.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
            throw input_error("bad integer literal: " + j.get<std::string>());
        return z;
    }
    throw input_error("expected an integer or integer string");
}

inline Json emit_poly(const IntPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(emit_int(c));
    return a;
}

inline IntPoly parse_poly(const Json& j) {
    if (!j.is_array()) throw input_error("polynomial must be a coefficient array");
    std::vector<Int> c;
    for (const auto& v : j) c.push_back(parse_int_json(v));
    return IntPoly(std::move(c));
}

inline IntPoly parse_poly_str(const std::string& s) {
    Json j;
    try {
        j = Json::parse(s);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad polynomial literal: ") + e.what());
    }
    return parse_poly(j);
}

inline Rat parse_rat_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw input_error("expected a rational as integer or \"p/q\" string");
}

inline Json emit_rat(const Rat& r) { return Json(r.get_str()); }

// ---- algebraic numbers: "p/q" or {minpoly: [...], root_index: k} ----

inline Json emit_algebraic(const AlgebraicNumber& a) {
    if (a.is_rational()) return Json(a.rational_value().get_str());
    Json j;
    j["minpoly"] = emit_poly(a.minpoly());
    j["root_index"] = a.root_index();
    return j;
}

inline AlgebraicNumber parse_algebraic(const Json& j) {
    if (j.is_string() || j.is_number_integer())
        return AlgebraicNumber::of_rational(parse_rat_json(j));
    if (j.is_object() && j.contains("minpoly")) {
        int idx = j.value("root_index", 0);
        return AlgebraicNumber(parse_poly(j.at("minpoly")), idx);
    }
    throw input_error("algebraic number must be \"p/q\" or {minpoly, root_index}");
}

// ---- expoly schema: [{base, coeffs: ["a/b" | {in_alpha: [...]} |
//      {symbol, approx, err, irrational}]}] ----

inline Json emit_coefficient(const ExpolyCoefficient& c) {
    if (c.is_rational()) return Json(c.rational().get_str());
    if (c.is_in_alpha()) {
        Json inner = Json::array();
        for (const auto& v : c.in_alpha().coeffs()) inner.push_back(v.get_str());
        Json j;
        j["in_alpha"] = inner;
        return j;
    }
    const auto& s = c.symbolic();
    Json j;
    j["symbol"] = s.label;
    j["approx"] = s.approx.get_str();
    j["err"] = s.err.get_str();
    j["irrational"] = s.known_irrational;
    return j;
}

inline ExpolyCoefficient parse_coefficient(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return ExpolyCoefficient(parse_rat_json(j));
    if (j.is_object() && j.contains("in_alpha")) {
        std::vector<Rat> c;
        for (const auto& v : j.at("in_alpha")) c.push_back(parse_rat_json(v));
        return ExpolyCoefficient(RatPoly(std::move(c)));
    }
    if (j.is_object() && j.contains("symbol")) {
        SymbolicValue s;
        s.label = j.at("symbol").get<std::string>();
        s.approx = parse_rat_json(j.at("approx"));
        s.err = j.contains("err") ? parse_rat_json(j.at("err")) : Rat(0);
        s.known_irrational = j.value("irrational", false);
        return ExpolyCoefficient::user_symbolic(std::move(s));
    }
    throw input_error("bad expoly coefficient");
}

inline Json emit_expoly(const Expoly& x) {
    Json a = Json::array();
    for (const auto& t : x.terms()) {
        Json term;
        term["base"] = emit_algebraic(t.base);
        Json cs = Json::array();
        for (const auto& c : t.coeffs) cs.push_back(emit_coefficient(c));
        term["coeffs"] = cs;
        a.push_back(term);
    }
    return a;
}

inline Expoly parse_expoly(const Json& j) {
    const Json& arr = j.is_object() && j.contains("terms") ? j.at("terms") : j;
    if (!arr.is_array()) throw input_error("expoly input must be a list of terms");
    std::vector<ExpolyTerm> terms;
    for (const auto& tj : arr) {
        ExpolyTerm t{parse_algebraic(tj.at("base")), {}};
        for (const auto& cj : tj.at("coeffs")) t.coeffs.push_back(parse_coefficient(cj));
        terms.push_back(std::move(t));
    }
    return Expoly(std::move(terms));
}

inline Expoly load_expoly(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open expoly file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("bad expoly file " + path + ": " + e.what());
    }
    return parse_expoly(j);
}

// ---- reports ----

inline std::string dec(const Rat& r, int digits = 15) {
    std::ostringstream os;
    os.precision(digits);
    os << r.get_d();
    return os.str();
}

inline Json emit_interval(const Interval& v) {
    Json j = Json::array();
    j.push_back(v.lo.to_rat().get_str());
    j.push_back(v.hi.to_rat().get_str());
    return j;
}

inline Json emit_lengths_report(const IntPoly& p, const ReducedLengthEstimate& ell,
                                const OverreducedLengthEstimate& lam, const Interval& mahler) {
    Json j;
    j["poly"] = emit_poly(p);
    j["L"] = p.length().get_str();
    Json je;
    je["value"] = ell.value.get_str();
    je["value_approx"] = dec(ell.value);
    Json w = Json::array();
    for (const auto& c : ell.witness.coeffs()) w.push_back(c.get_str());
    je["witness"] = w;
    je["normalization"] = to_string(ell.normalization);
    je["degree"] = ell.degree_used;
    je["converged"] = ell.converged;
    je["lower"] = emit_interval(ell.lower_bound);
    j["ell"] = je;
    Json jl;
    jl["value"] = lam.value.get_str();
    jl["value_approx"] = dec(lam.value);
    jl["factor"] = emit_poly(lam.admissible_factor);
    jl["quotient"] = emit_poly(lam.quotient);
    j["lambda"] = jl;
    j["mahler"] = emit_interval(mahler);
    return j;
}

inline Json emit_witness(const ConditionWitness& w) {
    Json j;
    j["condition"] = w.condition;
    j["term_i"] = w.term_i;
    j["term_j"] = w.term_j;
    j["conjugate_index"] = w.conjugate_index;
    j["differ_degree"] = w.differ_degree;
    return j;
}

inline Json emit_condition_report(const ConditionReport& r) {
    Json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["c"] = r.c;
    j["c_prime"] = r.c_prime;
    j["d"] = r.d;
    j["d_prime"] = r.d_prime;
    j["e"] = r.e;
    j["hypothesis_ok_for_iff"] = r.hypothesis_ok_for_ciff;
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(emit_witness(w));
    j["witnesses"] = ws;
    return j;
}

inline Json emit_limit_set_report(const LimitSetReport& rep) {
    Json j;
    j["modulus"] = rep.modulus;
    j["burn_in"] = rep.burn_in;
    j["cluster_eps"] = rep.cluster_eps.get_str();
    Json rs = Json::array();
    for (const auto& rr : rep.residues) {
        Json r;
        r["residue"] = rr.residue;
        r["samples"] = rr.samples;
        r["undecided"] = rr.undecided;
        r["diameter"] = rr.diameter.get_str();
        r["diameter_approx"] = dec(rr.diameter);
        r["sup"] = rr.sup.get_str();
        r["inf"] = rr.inf.get_str();
        Json cs = Json::array();
        for (const auto& c : rr.clusters) {
            Json cj;
            cj["center"] = dec(c.center);
            cj["radius"] = dec(c.radius);
            cj["count"] = c.count;
            cs.push_back(cj);
        }
        r["clusters"] = cs;
        r["cluster_count"] = static_cast<long>(rr.clusters.size());
        rs.push_back(r);
    }
    j["residues"] = rs;
    return j;
}

inline void write_sample_csv(std::ostream& os, const SequenceSample& s) {
    os << "k,fractional_lo,fractional_hi,floor,distance_lo,distance_hi,undecided\n";
    for (long k = s.k_min; k <= s.k_max; ++k) {
        const auto& e = s.at(k);
        os << k << ",";
        if (e.undecided) {
            os << ",,,,,1\n";
        } else {
            os << dec(e.frac_lo, 17) << "," << dec(e.frac_hi, 17) << "," << e.floor_k.get_str()
               << "," << dec(e.dist_lo, 17) << "," << dec(e.dist_hi, 17) << ",0\n";
        }
    }
}

inline Word load_word(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open word file: " + path);
    Word w;
    std::string tok;
    while (std::getline(in, tok)) {
        std::istringstream line(tok);
        std::string cell;
        while (std::getline(line, cell, ',')) {
            std::istringstream c2(cell);
            long v;
            if (c2 >> v) w.push_back(v);
        }
    }
    if (w.empty()) throw input_error("word file has no letters: " + path);
    return w;
}

}  // namespace modone
