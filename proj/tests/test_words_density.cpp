#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modone/interval.hpp"
#include "modone/words_density.hpp"

using namespace modone;

namespace {

Word alternating(std::size_t n) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<long>(i % 2);
    return w;
}

long count_occurrences(const Word& text, const Word& pattern, long residue, long m) {
    long c = 0;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
        if (static_cast<long>(i) % m != residue) continue;
        bool hit = true;
        for (std::size_t j = 0; j < pattern.size(); ++j)
            if (text[i + j] != pattern[j]) hit = false;
        if (hit) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("subword complexity of periodic words") {
    auto rep = subword_complexity(alternating(200), 4);
    CHECK(rep.p == std::vector<long>{2, 2});
    CHECK(rep.verdict == PeriodicityVerdict::PeriodicEvidence);
    CHECK(rep.period == 2);

    Word constant(100, 7);
    auto rc = subword_complexity(constant, 3);
    CHECK(rc.p == std::vector<long>{1});
    CHECK(rc.verdict == PeriodicityVerdict::PeriodicEvidence);
    CHECK(rc.period == 1);
}

TEST_CASE("fibonacci word has complexity n + 1") {
    Word fib = fibonacci_word(10000);
    auto rep = subword_complexity(fib, 12);
    REQUIRE(rep.p.size() == 12);
    for (long n = 1; n <= 12; ++n) CHECK(rep.p[static_cast<std::size_t>(n - 1)] == n + 1);
    CHECK(rep.verdict == PeriodicityVerdict::AperiodicEvidence);
}

TEST_CASE("prefix length precondition") {
    CHECK_THROWS_AS(subword_complexity(alternating(10), 4), input_error);
}

TEST_CASE("morse witness on the fibonacci word validates by rescan") {
    Word fib = fibonacci_word(10000);
    for (auto [e, m] : std::vector<std::pair<long, long>>{{1, 1}, {2, 3}}) {
        auto w = morse_witness(fib, e, m, 10);
        CHECK(w.s != w.s_prime);
        CHECK(w.t != w.t_prime);
        CHECK(static_cast<long>(w.u.size()) == e);
        CHECK(static_cast<long>(w.v.size()) == e);
        Word su{w.s}, spu{w.s_prime};
        su.insert(su.end(), w.u.begin(), w.u.end());
        spu.insert(spu.end(), w.u.begin(), w.u.end());
        Word vt = w.v, vtp = w.v;
        vt.push_back(w.t);
        vtp.push_back(w.t_prime);
        CHECK(count_occurrences(fib, su, w.m_bar, m) >= 10);
        CHECK(count_occurrences(fib, spu, w.m_bar, m) >= 10);
        CHECK(count_occurrences(fib, vt, w.n_bar, m) >= 10);
        CHECK(count_occurrences(fib, vtp, w.n_bar, m) >= 10);
        // reported positions carry the right residue and content
        for (long pos : w.su_positions) {
            CHECK(pos % m == w.m_bar);
            CHECK(fib[static_cast<std::size_t>(pos)] == w.s);
        }
    }
}

TEST_CASE("morse witness rejects periodic input") {
    CHECK_THROWS_AS(morse_witness(alternating(4000), 1, 1, 10), input_error);
}

TEST_CASE("uniform density of arithmetic-like sets") {
    std::vector<long> evens;
    for (long k = 2; k <= 100000; k += 2) evens.push_back(k);
    auto est = uniform_density(evens, 100000, 1000);
    CHECK(est.lower == Rat(1, 2));
    CHECK(est.upper == Rat(1, 2));

    std::vector<long> squares;
    for (long k = 1; k * k <= 1000000; ++k) squares.push_back(k * k);
    auto sq = uniform_density(squares, 1000000, 1000);
    CHECK(sq.upper <= Rat(4, 100));
    CHECK(sq.lower >= 0);

    CHECK_THROWS_AS(uniform_density(evens, 100, 1000), input_error);
}

TEST_CASE("uniform density brackets the natural density") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        std::vector<long> a;
        long horizon = 20000;
        for (long k = 1; k <= horizon; ++k)
            if (rng() % 3 == 0) a.push_back(k);
        auto est = uniform_density(a, horizon, 500);
        Rat natural = make_rat(Int(static_cast<long>(a.size())), Int(horizon));
        CHECK(est.lower <= natural);
        CHECK(est.upper >= natural);
    }
}

TEST_CASE("beatty set of the golden ratio has density 1/phi") {
    // floor(k phi) for k = 1.. via certified interval floors
    std::vector<long> beatty;
    mpfr_prec_t prec = 128;
    Interval phi = iv::mul(iv::add(iv::sqrt(Interval::of_long(5, prec), prec),
                                   Interval::of_long(1, prec), prec),
                           Interval::of_rat(Rat(1, 2), prec), prec);
    long horizon = 200000;
    for (long k = 1;; ++k) {
        Interval v = iv::mul(Interval::of_long(k, prec), phi, prec);
        Int fl = v.lo.floor(), fh = v.hi.floor();
        REQUIRE(fl == fh);
        if (fl > horizon) break;
        beatty.push_back(static_cast<long>(fl.get_si()));
    }
    auto est = uniform_density(beatty, horizon, 1000);
    Rat inv_phi = parse_rat("0.61803398874989");
    CHECK(abs(est.lower - inv_phi) <= Rat(1, 100));
    CHECK(abs(est.upper - inv_phi) <= Rat(1, 100));
}

TEST_CASE("translate union inequality for lower uniform density") {
    std::mt19937_64 rng(20240604);
    for (int t = 0; t < 20; ++t) {
        long horizon = 30000;
        std::vector<long> a;
        for (long k = 1; k <= horizon + 8; ++k)
            if (rng() % 4 == 0) a.push_back(k);
        std::size_t msize = 1 + rng() % 4;
        std::set<long> mset;
        while (mset.size() < msize) mset.insert(static_cast<long>(rng() % 9) - 4);
        // union of translates A[m] = {k >= 1 : k + m in A}
        std::set<long> u;
        for (long m : mset)
            for (long v : a)
                if (v - m >= 1 && v - m <= horizon) u.insert(v - m);
        auto du = uniform_density(std::vector<long>(u.begin(), u.end()), horizon, 600);
        auto da = uniform_density(a, horizon, 600);
        CHECK(du.lower <= Rat(static_cast<long>(mset.size())) * da.lower + Rat(1, 20));
    }
}

TEST_CASE("windowed discrepancy of rotations and degenerate sequences") {
    // k * sqrt(2) mod 1 at a modest horizon
    mpfr_prec_t prec = 128;
    Interval sqrt2 = iv::sqrt(Interval::of_long(2, prec), prec);
    std::vector<Rat> pts;
    for (long k = 0; k < 4000; ++k) {
        Interval v = iv::mul(Interval::of_long(k, prec), sqrt2, prec);
        Rat lo = v.lo.to_rat();
        pts.push_back(frac_rat(lo));
    }
    Rat disc = windowed_discrepancy(pts, 2000, {0, 1000, 2000});
    CHECK(disc <= Rat(1, 10));

    std::vector<Rat> zeros(3000, Rat(0));
    CHECK(windowed_discrepancy(zeros, 1000, {0, 500}) >= Rat(9, 10));

    // {k/2} never hits (0.1, 0.4): deviation 0.3 at every window
    std::vector<Rat> half;
    for (long k = 0; k < 2000; ++k) half.push_back(frac_rat(make_rat(Int(k), Int(2))));
    Rat dev = windowed_discrepancy(half, 1000, {0, 500}, 64,
                                   {{parse_rat("0.1"), parse_rat("0.4")}});
    CHECK(dev >= Rat(3, 10));
}

TEST_CASE("admissibility of intervals and finite sets") {
    std::vector<Int> a{Int(-3), Int(2)};
    CHECK(admissibility_check_interval(a, parse_rat("0.19")) == AdmissibilityVerdict::Admissible);
    CHECK(admissibility_check_interval(a, parse_rat("0.21")) ==
          AdmissibilityVerdict::NotAdmissible);
    CHECK(admissibility_check_finite(a, 2) == AdmissibilityVerdict::Admissible);
    CHECK(admissibility_check_finite({Int(7)}, 1) == AdmissibilityVerdict::Admissible);
    CHECK_THROWS_AS(admissibility_check_interval({Int(0), Int(0)}, Rat(1, 10)), input_error);
}
