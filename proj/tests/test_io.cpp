#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "modone/io.hpp"

using namespace modone;

namespace {

IntPoly ip(std::vector<long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial serialization round trip") {
    IntPoly p = ip({-3, 2});
    CHECK(parse_poly(emit_poly(p)) == p);
    CHECK(parse_poly_str("[-3, 2]") == p);

    // coefficients beyond 64 bits travel as strings
    Int big = pow_int(Int(10), 30);
    IntPoly q(std::vector<Int>{big, Int(1)});
    Json j = emit_poly(q);
    CHECK(j[0].is_string());
    CHECK(parse_poly(j) == q);

    CHECK_THROWS_AS(parse_poly_str("nonsense"), input_error);
}

TEST_CASE("algebraic number serialization round trip") {
    AlgebraicNumber phi(ip({-1, -1, 1}), 1);
    AlgebraicNumber back = parse_algebraic(emit_algebraic(phi));
    CHECK(back.equals(phi));

    AlgebraicNumber r = parse_algebraic(Json("3/2"));
    CHECK(r.is_rational());
    CHECK(r.rational_value() == Rat(3, 2));
}

TEST_CASE("expoly serialization round trip over all coefficient kinds") {
    AlgebraicNumber phi(ip({-1, -1, 1}), 1);
    SymbolicValue sq2{"sqrt2", parse_rat("1.41421356237"), Rat(1, pow_int(10, 11)), true};
    Expoly x({{phi,
               {ExpolyCoefficient(Rat(2, 3)),
                ExpolyCoefficient(RatPoly(std::vector<Rat>{Rat(1), Rat(1, 2)}))}},
              {AlgebraicNumber::of_rational(Rat(3, 2)),
               {ExpolyCoefficient::user_symbolic(sq2)}}});
    Expoly y = parse_expoly(emit_expoly(x));
    REQUIRE(y.terms().size() == x.terms().size());
    for (std::size_t i = 0; i < x.terms().size(); ++i) {
        CHECK(y.terms()[i].base.equals(x.terms()[i].base));
        REQUIRE(y.terms()[i].coeffs.size() == x.terms()[i].coeffs.size());
    }
    const auto& sym = y.terms()[1].coeffs[0];
    REQUIRE(sym.is_symbolic());
    CHECK(sym.symbolic().label == "sqrt2");
    CHECK(sym.symbolic().known_irrational);
    CHECK(sym.symbolic().approx == parse_rat("1.41421356237"));
}

TEST_CASE("emitted reports are deterministic and re-parse") {
    IntPoly p = ip({-3, 2});
    auto ell = reduced_length(p, 8);
    auto lam = overreduced_length(p, 8);
    Json a = emit_lengths_report(p, ell, lam, ell.lower_bound);
    Json b = emit_lengths_report(p, ell, lam, ell.lower_bound);
    CHECK(a.dump() == b.dump());

    // the rational payloads round-trip exactly
    CHECK(parse_rat(a["ell"]["value"].get<std::string>()) == ell.value);
    CHECK(parse_poly(a["lambda"]["factor"]) == lam.admissible_factor);
    std::vector<Rat> w;
    for (const auto& c : a["ell"]["witness"]) w.push_back(parse_rat(c.get<std::string>()));
    CHECK(RatPoly(std::move(w)) == ell.witness);
    CHECK(parse_rat(a["mahler"][0].get<std::string>()) == ell.lower_bound.lo.to_rat());
}

TEST_CASE("sample csv dump") {
    Expoly x({{AlgebraicNumber::of_rational(Rat(3, 2)), {ExpolyCoefficient(Rat(1))}}});
    auto s = sample(x, 1, 4);
    std::ostringstream os;
    write_sample_csv(os, s);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,fractional_lo,fractional_hi,floor,distance_lo,distance_hi,undecided");
    std::getline(in, line);
    CHECK(line.substr(0, 6) == "1,0.5,");
    int rows = 1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 4);
}

TEST_CASE("limit set report emission round trips rationals") {
    Expoly x({{AlgebraicNumber::of_rational(Rat(3, 2)), {ExpolyCoefficient(Rat(1))}}});
    auto s = sample(x, 1, 120);
    auto rep = limit_set_report(s, 2, 10, Rat(1, 1000000));
    Json j = emit_limit_set_report(rep);
    REQUIRE(j["residues"].size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& rr = rep.residues[i];
        CHECK(parse_rat(j["residues"][i]["diameter"].get<std::string>()) == rr.diameter);
        CHECK(parse_rat(j["residues"][i]["sup"].get<std::string>()) == rr.sup);
    }
}
