#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modone/engine.hpp"

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

}  // namespace

TEST_CASE("iterate_recurrence basics") {
    auto geo = iterate_recurrence(ip({-3, 2}), {Rat(3, 2)}, 6);
    CHECK(geo[3] == pow_rat(Rat(3, 2), 4));

    auto fib = iterate_recurrence(ip({-1, -1, 1}), {Rat(1), Rat(1)}, 10);
    CHECK(fib[9] == 55);

    CHECK_THROWS_AS(iterate_recurrence(ip({-1, -1, 1}), {Rat(1)}, 5), input_error);
}

TEST_CASE("closed form matches iteration exactly") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> numd(-5, 5), dend(1, 3), degd(0, 2);
    for (int t = 0; t < 8; ++t) {
        std::set<Rat> used;
        std::vector<ExpolyTerm> terms;
        for (int i = 0; i < 2; ++i) {
            Rat base = make_rat(Int(numd(rng)), Int(dend(rng)));
            if (base == 0 || used.count(base)) {
                --i;
                continue;
            }
            used.insert(base);
            std::vector<Rat> coeffs;
            int d = degd(rng);
            for (int j = 0; j <= d; ++j) coeffs.push_back(make_rat(Int(numd(rng)), Int(dend(rng))));
            terms.push_back(rational_term(base, std::move(coeffs)));
        }
        Expoly x(std::move(terms));
        if (x.is_zero()) continue;
        IntPoly r = x.annihilator();
        std::vector<Rat> init;
        for (int k = 1; k <= r.degree(); ++k) init.push_back(x.eval_rational(k));
        auto seq = iterate_recurrence(r, init, 200);
        for (long k = 1; k <= 200; ++k) CHECK(seq[static_cast<std::size_t>(k - 1)] == x.eval_rational(k));
    }
}

TEST_CASE("exact sampling of (3/2)^k") {
    Expoly x({rational_term(Rat(3, 2), {Rat(1)})});
    auto s = sample(x, 1, 4);
    CHECK(s.mode == SampleMode::ExactRational);
    CHECK(s.at(1).frac_lo == Rat(1, 2));
    CHECK(s.at(2).frac_lo == Rat(1, 4));
    CHECK(s.at(3).frac_lo == Rat(3, 8));
    CHECK(s.at(4).frac_lo == Rat(1, 16));
    CHECK(s.at(4).floor_k == 5);
    // decomposition identity floor + frac = value
    CHECK(Rat(s.at(3).floor_k) + s.at(3).frac_lo == pow_rat(Rat(3, 2), 3));
}

TEST_CASE("ball sampling of golden powers matches the Lucas oracle") {
    AlgebraicNumber phi(ip({-1, -1, 1}), 1);
    Expoly x({{phi, {ExpolyCoefficient(Rat(1))}}});
    auto s = sample(x, 10, 12, Rat(1, pow_int(10, 13)));
    CHECK(s.mode == SampleMode::Ball);

    // ||phi^k|| = |phibar|^k = ((sqrt5 - 1)/2)^k
    mpfr_prec_t prec = 256;
    Interval sqrt5 = iv::sqrt(Interval::of_long(5, prec), prec);
    Interval phibar_abs = iv::mul(iv::sub(sqrt5, Interval::of_long(1, prec), prec),
                                  Interval::of_rat(Rat(1, 2), prec), prec);
    for (long k = 10; k <= 12; ++k) {
        Interval oracle = iv::pow_ui(phibar_abs, static_cast<unsigned long>(k), prec);
        const auto& e = s.at(k);
        REQUIRE(!e.undecided);
        CHECK(e.dist_lo <= oracle.hi.to_rat());
        CHECK(e.dist_hi >= oracle.lo.to_rat());
        CHECK(e.dist_hi - e.dist_lo <= Rat(1, pow_int(10, 12)));
    }
    // spec's k = 10 value
    CHECK(abs((s.at(10).dist_lo + s.at(10).dist_hi) / 2 - parse_rat("0.0081306")) <
          Rat(1, 10000000));
}

TEST_CASE("ball sampling handles symbolic linear sequences") {
    SymbolicValue sq2{"sqrt2", parse_rat("1.41421356237309504880168872"), Rat(1, pow_int(10, 20)),
                      true};
    Expoly x({{AlgebraicNumber::of_rational(Rat(1)),
               {ExpolyCoefficient(Rat(0)), ExpolyCoefficient::user_symbolic(sq2)}}});
    auto s = sample(x, 1, 3, Rat(1, pow_int(10, 9)));
    REQUIRE(!s.at(1).undecided);
    CHECK(abs((s.at(1).frac_lo + s.at(1).frac_hi) / 2 - parse_rat("0.4142135623")) <
          Rat(1, 1000000000));
    // k = 2: {2 sqrt2} = 0.8284...
    CHECK(abs((s.at(2).frac_lo + s.at(2).frac_hi) / 2 - parse_rat("0.8284271247")) <
          Rat(1, 1000000000));
}

TEST_CASE("conjugate-closed sampling is real") {
    // x_k = 2 cos(pi k / 2) = i^k + (-i)^k: values 0, -2, 0, 2, ...
    AlgebraicNumber iu(ip({1, 0, 1}), 1), idn(ip({1, 0, 1}), 0);
    Expoly x({{iu, {ExpolyCoefficient(Rat(1))}}, {idn, {ExpolyCoefficient(Rat(1))}}});
    REQUIRE(x.validate() == RealnessCertificate::ConjugateClosed);
    auto s = sample(x, 1, 8, Rat(1, 1000000), Rat(-1, 2));
    // integer values: floor(x + 1/2) with the eta = -1/2 shift
    CHECK(s.at(1).floor_k == 0);
    CHECK(s.at(2).floor_k == -2);
    CHECK(s.at(3).floor_k == 0);
    CHECK(s.at(4).floor_k == 2);
}

TEST_CASE("conjugate-closed sampling with Q(alpha) coefficients") {
    // x_k = zeta^(k+1) + conj(zeta)^(k+1) = 2 cos(2 pi (k+1)/5) for a
    // primitive fifth root zeta: the in_alpha coefficient is alpha itself
    IntPoly phi5 = cyclotomic_poly(5);
    AlgebraicNumber z_up(phi5, 3), z_dn(phi5, 2);
    ExpolyCoefficient alpha_coeff{RatPoly(std::vector<Rat>{Rat(0), Rat(1)})};
    Expoly x({{z_up, {alpha_coeff}}, {z_dn, {alpha_coeff}}});
    REQUIRE(x.validate() == RealnessCertificate::ConjugateClosed);
    auto s = sample(x, 1, 10, Rat(1, pow_int(10, 10)));

    mpfr_prec_t prec = 256;
    Interval sqrt5 = iv::sqrt(Interval::of_long(5, prec), prec);
    Interval one = Interval::of_long(1, prec);
    Interval half = Interval::of_rat(Rat(1, 2), prec);
    // 2 cos(72 deg) = (sqrt5 - 1)/2, 2 cos(144 deg) = -(sqrt5 + 1)/2
    Interval c72 = iv::mul(iv::sub(sqrt5, one, prec), half, prec);
    Interval c144 = iv::neg(iv::mul(iv::add(sqrt5, one, prec), half, prec));
    for (long k = 1; k <= 10; ++k) {
        long m = (k + 1) % 5;
        const auto& e = s.at(k);
        if (m == 0) {
            // x_k = 2 exactly: an integer value can never exclude the floor
            // boundary, so the entry reports Undecided
            CHECK(e.undecided);
            continue;
        }
        REQUIRE(!e.undecided);
        Rat lo = e.frac_lo + Rat(e.floor_k), hi = e.frac_hi + Rat(e.floor_k);
        const Interval& want = (m == 1 || m == 4) ? c72 : c144;
        CHECK(lo <= want.hi.to_rat());
        CHECK(hi >= want.lo.to_rat());
    }
}

TEST_CASE("integer-valued ball sequences decline rather than guess") {
    // Lucas numbers via phi^k + phibar^k are exact integers; the fractional
    // part enclosure can never exclude the boundary, so every index is
    // undecided and the whole-range failure surfaces as the precision cap
    AlgebraicNumber phi(ip({-1, -1, 1}), 1), phibar(ip({-1, -1, 1}), 0);
    Expoly lucas({{phi, {ExpolyCoefficient(Rat(1))}}, {phibar, {ExpolyCoefficient(Rat(1))}}});
    CHECK_THROWS_AS(sample(lucas, 1, 2, Rat(1, 1000000)), precision_cap_exceeded);
}

TEST_CASE("floor word of (3/2)^k against 2x-3") {
    Expoly x({rational_term(Rat(3, 2), {Rat(1)})});
    auto s = sample(x, 1, 12, Rat(1, 1000000), Rat(-1, 2));
    auto w = floor_word(s, ip({-3, 2}), Rat(-1, 2));
    // z = floor(x + 1/2) = 2, 2, 3, 5, 8, ...
    CHECK(s.at(1).floor_k == 2);
    CHECK(s.at(2).floor_k == 2);
    CHECK(s.at(3).floor_k == 3);
    CHECK(s.at(4).floor_k == 5);
    CHECK(s.at(5).floor_k == 8);
    REQUIRE(w.letters.size() >= 4);
    CHECK(w.letters[0] == 2);
    CHECK(w.letters[1] == 0);
    CHECK(w.letters[2] == -1);
    CHECK(w.letters[3] == -1);
    CHECK(w.envelope_ok);
}

TEST_CASE("floor word of integer sequences is all zero") {
    Expoly x({rational_term(Rat(2), {Rat(1)})});
    auto s = sample(x, 1, 30);
    auto w = floor_word(s, ip({-2, 1}), Rat(0));
    for (const auto& l : w.letters) CHECK(l == 0);
    CHECK(w.alphabet == std::vector<Int>{Int(0)});

    auto fib = iterate_recurrence(ip({-1, -1, 1}), {Rat(1), Rat(1)}, 40);
    auto sf = sample_exact_values(fib, 1, 40);
    auto wf = floor_word(sf, ip({-1, -1, 1}), Rat(0));
    for (const auto& l : wf.letters) CHECK(l == 0);
}

TEST_CASE("limit set of k/4 mod 1 per residue is a point") {
    std::vector<Rat> vals;
    for (long k = 1; k <= 400; ++k) vals.push_back(make_rat(Int(k), Int(4)));
    auto s = sample_exact_values(vals, 1, 400);
    auto rep = limit_set_report(s, 4, 0, Rat(1, 1000000));
    REQUIRE(rep.residues.size() == 4);
    for (const auto& rr : rep.residues) {
        CHECK(rr.clusters.size() == 1);
        CHECK(rr.diameter == 0);
        CHECK(rr.sup == rr.inf);
    }
}

TEST_CASE("limit set of golden powers clusters at zero on the circle") {
    AlgebraicNumber phi(ip({-1, -1, 1}), 1);
    Expoly x({{phi, {ExpolyCoefficient(Rat(1))}}});
    auto s = sample(x, 1, 300, Rat(1, pow_int(10, 12)));
    auto rep = limit_set_report(s, 1, 40, Rat(1, 1000000));
    REQUIRE(rep.residues.size() == 1);
    // fractional parts hug 0 and 1; circular clustering must see one cluster
    CHECK(rep.residues[0].clusters.size() == 1);
    CHECK(rep.residues[0].diameter <= Rat(1, 100));
}

TEST_CASE("limit set spread of (3/2)^k") {
    Expoly x({rational_term(Rat(3, 2), {Rat(1)})});
    auto s = sample(x, 1, 600);
    auto rep = limit_set_report(s, 1, 0, Rat(1, 1000000));
    CHECK(rep.residues[0].sup - rep.residues[0].inf >= Rat(1, 3));
    CHECK(rep.residues[0].clusters.size() >= 20);
    CHECK_THROWS_AS(limit_set_report(s, 1, 590, Rat(1, 1000000)), input_error);
}

TEST_CASE("zset prefix membership") {
    auto r1 = zset_prefix_test(Rat(1), Int(3), Int(2), Rat(0), Rat(1, 2), 10);
    CHECK(!r1.prefix_ok);
    CHECK(r1.first_failure == 1);
    CHECK(r1.failing_value == Rat(1, 2));

    CHECK(zset_prefix_test(Rat(1), Int(3), Int(2), Rat(0), Rat(1), 50).prefix_ok);
    CHECK_THROWS_AS(zset_prefix_test(Rat(1), Int(3), Int(2), Rat(1, 2), Rat(1, 3), 5), input_error);
    CHECK_THROWS_AS(zset_prefix_test(Rat(1), Int(4), Int(2), Rat(0), Rat(1, 2), 5), input_error);
}
