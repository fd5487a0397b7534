#include <catch2/catch_amalgamated.hpp>

#include "modone/criterion.hpp"

using namespace modone;

namespace {

IntPoly ip(std::vector<long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}

ExpolyTerm rational_term(const Rat& base, std::vector<Rat> coeffs) {
    std::vector<ExpolyCoefficient> cs;
    for (auto& c : coeffs) cs.emplace_back(std::move(c));
    return {AlgebraicNumber::of_rational(base), std::move(cs)};
}

const IntPoly kGolden = ip({-1, -1, 1});
const IntPoly kLehmer = ip({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

Expoly golden_power() {
    return Expoly({{AlgebraicNumber(kGolden, 1), {ExpolyCoefficient(Rat(1))}}});
}

}  // namespace

TEST_CASE("embed_compare") {
    AlgebraicNumber phi(kGolden, 1);
    std::vector<ExpolyCoefficient> f{ExpolyCoefficient(RatPoly(std::vector<Rat>{Rat(0), Rat(1)}))};
    std::vector<ExpolyCoefficient> same = f;
    CHECK(embed_compare(f, {phi, 0}, same).equal);

    std::vector<ExpolyCoefficient> g{ExpolyCoefficient(RatPoly(std::vector<Rat>{Rat(1), Rat(1)}))};
    std::vector<ExpolyCoefficient> two{ExpolyCoefficient(Rat(2))};
    auto r = embed_compare(g, {phi, 0}, two);
    CHECK(!r.equal);
    CHECK(r.differ_degree == 0);

    // reduction mod the minimal polynomial identifies congruent representatives
    RatPoly rep(std::vector<Rat>{Rat(2), Rat(3)});
    RatPoly lifted = rep + to_rat(kGolden) * RatPoly(std::vector<Rat>{Rat(5), Rat(-7)});
    CHECK(divrem(lifted, to_rat(kGolden)).second == rep);

    CHECK_THROWS_AS(embed_compare(f, {phi, 5}, same), input_error);
}

TEST_CASE("condition (a) for rational non-integer bases") {
    Expoly x({rational_term(Rat(3, 2), {Rat(1)})});
    auto rep = check_conditions(x);
    CHECK(rep.a);
    CHECK(!rep.b);
    CHECK(!rep.c);
    CHECK(!rep.d);
    CHECK(rep.hypothesis_ok_for_ciff);
    REQUIRE(!rep.witnesses.empty());
    CHECK(rep.witnesses[0].condition == "a");
}

TEST_CASE("condition (c') for irrational coefficients") {
    SymbolicValue sq2{"sqrt2", parse_rat("1.41421356237"), Rat(1, pow_int(10, 11)), true};
    Expoly x({{AlgebraicNumber(kGolden, 1), {ExpolyCoefficient::user_symbolic(sq2)}}});
    auto rep = check_conditions(x);
    CHECK(rep.c_prime);
    CHECK(rep.any_abcd());
}

TEST_CASE("no condition holds for golden powers") {
    auto rep = check_conditions(golden_power());
    CHECK(!rep.any());
}

TEST_CASE("condition (c) when a large conjugate is missing") {
    // sqrt(2)^k: the conjugate -sqrt(2) also has modulus > 1 and is absent
    Expoly x({{AlgebraicNumber(ip({-2, 0, 1}), 1), {ExpolyCoefficient(Rat(1))}}});
    auto rep = check_conditions(x);
    CHECK(rep.c);
    CHECK(rep.e);
}

TEST_CASE("condition (e) only, for a lone Salem power") {
    Expoly x({{AlgebraicNumber(kLehmer, 9), {ExpolyCoefficient(Rat(1))}}});
    auto rep = check_conditions(x);
    CHECK(rep.e);
    CHECK(!rep.any_abcd());
}

TEST_CASE("finiteness verdicts") {
    CHECK(finiteness_verdict(golden_power()).kind == FinitenessKind::Finite);

    auto geo = finiteness_verdict(Expoly({rational_term(Rat(3, 2), {Rat(1)})}));
    CHECK(geo.kind == FinitenessKind::Infinite);
    CHECK(geo.failed_clause == 1);

    auto salem = finiteness_verdict(
        Expoly({{AlgebraicNumber(kLehmer, 9), {ExpolyCoefficient(Rat(1))}}}));
    CHECK(salem.kind == FinitenessKind::Infinite);
    CHECK(salem.failed_clause == 2);

    // (3+4i)/5 and conjugate: all conjugates on the unit circle, no root of unity
    AlgebraicNumber a1(ip({5, -6, 5}), 0), a2(ip({5, -6, 5}), 1);
    Expoly circle({{a1, {ExpolyCoefficient(Rat(1, 2))}}, {a2, {ExpolyCoefficient(Rat(1, 2))}}});
    CHECK(finiteness_verdict(circle).kind == FinitenessKind::OutOfScope);

    // Lucas numbers: both conjugates present with matching coefficients
    AlgebraicNumber phi(kGolden, 1), phibar(kGolden, 0);
    Expoly lucas({{phi, {ExpolyCoefficient(Rat(1))}}, {phibar, {ExpolyCoefficient(Rat(1))}}});
    CHECK(finiteness_verdict(lucas).kind == FinitenessKind::Finite);

    // mismatched coefficients on the small conjugate are harmless: the
    // extra phibar^k decays, so x_k = L_k + phibar^k still clusters
    Expoly skew({{phi, {ExpolyCoefficient(Rat(1))}}, {phibar, {ExpolyCoefficient(Rat(2))}}});
    CHECK(finiteness_verdict(skew).kind == FinitenessKind::Finite);

    // both conjugates of sqrt(3) exceed 1; a coefficient mismatch there
    // breaks clause (2)
    AlgebraicNumber s3p(ip({-3, 0, 1}), 1), s3n(ip({-3, 0, 1}), 0);
    Expoly mism({{s3p, {ExpolyCoefficient(Rat(1))}}, {s3n, {ExpolyCoefficient(Rat(2))}}});
    auto sv = finiteness_verdict(mism);
    CHECK(sv.kind == FinitenessKind::Infinite);
    CHECK(sv.failed_clause == 2);
}

TEST_CASE("finite verdicts imply no condition holds") {
    AlgebraicNumber phi(kGolden, 1), phibar(kGolden, 0);
    for (const Expoly& x :
         {golden_power(),
          Expoly({{phi, {ExpolyCoefficient(Rat(1))}}, {phibar, {ExpolyCoefficient(Rat(1))}}}),
          Expoly({rational_term(Rat(2), {Rat(3)})})}) {
        if (finiteness_verdict(x).kind == FinitenessKind::Finite)
            CHECK(!check_conditions(x).any());
    }
}

TEST_CASE("root-of-unity bases with nonconstant coefficients") {
    // x_k = k * (-1)^k is integer-valued: the only conjugate map is the
    // identity, clause (3) holds, E = {0}
    Expoly x({rational_term(Rat(-1), {Rat(0), Rat(1)})});
    CHECK(finiteness_verdict(x).kind == FinitenessKind::Finite);

    // x_k = 2k cos(2 pi k / 5): the present pair (zeta, conj zeta) of fifth
    // roots of unity maps onto the absent pair under sigma, failing (3)
    IntPoly phi5 = cyclotomic_poly(5);
    AlgebraicNumber z_up(phi5, 3), z_dn(phi5, 2);
    std::vector<ExpolyCoefficient> lin{ExpolyCoefficient(Rat(0)), ExpolyCoefficient(Rat(1))};
    Expoly w({{z_up, lin}, {z_dn, lin}});
    REQUIRE(w.validate() == RealnessCertificate::ConjugateClosed);
    auto v = finiteness_verdict(w);
    CHECK(v.kind == FinitenessKind::Infinite);
    CHECK(v.failed_clause == 3);
    auto rep = check_conditions(w);
    CHECK(rep.d);
}

TEST_CASE("spectrum classification") {
    AlgebraicNumber phi(kGolden, 1);
    CHECK(spectrum_fin_class(phi, {ExpolyCoefficient(Rat(1))}) ==
          SpectrumFinClass::AllRationalsModOne);
    CHECK(spectrum_fin_class(AlgebraicNumber::of_rational(Rat(3, 2)),
                             {ExpolyCoefficient(Rat(1))}) == SpectrumFinClass::Empty);
    SymbolicValue sq2{"sqrt2", parse_rat("1.41421356237"), Rat(1, pow_int(10, 11)), true};
    CHECK(spectrum_fin_class(phi, {ExpolyCoefficient::user_symbolic(sq2)}) ==
          SpectrumFinClass::Empty);
    // negative alpha routes through |alpha|
    CHECK(spectrum_fin_class(phi.negated(), {ExpolyCoefficient(Rat(1))}) ==
          SpectrumFinClass::AllRationalsModOne);
    CHECK_THROWS_AS(spectrum_fin_class(phi, {ExpolyCoefficient(Rat(0))}), input_error);
}

TEST_CASE("theorem bounds for (3/2)^k") {
    Expoly x({rational_term(Rat(3, 2), {Rat(1)})});
    auto rep = theorem_bounds(x, {1}, 600, 24);
    CHECK(!rep.vacuous);
    CHECK(rep.length_r == 5);
    CHECK(rep.inv_length == Rat(1, 5));
    CHECK(rep.lambda_value >= 3);
    CHECK(rep.lambda_value == Rat(3) + pow_rat(Rat(2), 25) / pow_rat(Rat(3), 24));
    REQUIRE(rep.per_modulus.size() == 1);
    CHECK(rep.per_modulus[0].some_residue_met);  // diameter >= 1/lambda
}

TEST_CASE("theorem bounds for two rational terms") {
    Expoly x({rational_term(Rat(3, 2), {Rat(1)}), rational_term(Rat(5, 2), {Rat(1)})});
    auto rep = theorem_bounds(x, {1}, 400, 28);
    CHECK(rep.annihilator == ip({-3, 2}) * ip({-5, 2}));
    CHECK(rep.inv_lambda <= Rat(1, 15));
    CHECK(rep.inv_lambda >= Rat(1, 15) - Rat(1, 1000));
}

TEST_CASE("theorem bounds vacuous for golden powers") {
    auto rep = theorem_bounds(golden_power(), {1}, 200, 8);
    CHECK(rep.vacuous);
}
