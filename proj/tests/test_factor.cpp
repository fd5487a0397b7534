#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modone/factor.hpp"

using namespace modone;

namespace {

IntPoly ip(std::vector<long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("squarefree decomposition") {
    IntPoly p = ip({-1, 1}).pow(2) * ip({2, 1});
    auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair<IntPoly, int>(ip({2, 1}), 1));
    CHECK(parts[1] == std::pair<IntPoly, int>(ip({-1, 1}), 2));

    auto one = squarefree_decomposition(ip({1, 0, 1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == ip({1, 0, 1}));
    CHECK(one[0].second == 1);

    auto cube = squarefree_decomposition(ip({0, -1, 0, 1}));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].first == ip({0, -1, 0, 1}));
}

TEST_CASE("small factorizations") {
    auto f = factor_over_integers(ip({-1, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == ip({-1, 1}));
    CHECK(f.factors[1].first == ip({1, 1}));

    auto g = factor_over_integers(ip({4, 0, 0, 0, 1}));  // x^4 + 4
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == ip({2, -2, 1}));
    CHECK(g.factors[1].first == ip({2, 2, 1}));

    auto lin = factor_over_integers(ip({-3, 2}));
    REQUIRE(lin.factors.size() == 1);
    CHECK(lin.content == 1);
    CHECK(lin.factors[0].first == ip({-3, 2}));
}

TEST_CASE("factorization remultiplies to the input") {
    std::mt19937_64 rng(20240517);
    int done = 0;
    while (done < 500) {
        std::uniform_int_distribution<int> dd(1, 10);
        std::uniform_int_distribution<long> dc(-9, 9);
        int d = dd(rng);
        std::vector<Int> c(d + 1);
        for (auto& v : c) v = dc(rng);
        IntPoly p(std::move(c));
        if (p.is_zero()) continue;
        auto f = factor_over_integers(p);
        REQUIRE(f.product() == p);
        for (const auto& [fac, mult] : f.factors) {
            CHECK(mult >= 1);
            CHECK(sgn(fac.leading()) > 0);
            CHECK(content(fac) == 1);
        }
        ++done;
    }
}

TEST_CASE("cyclotomic index round trip up to 100") {
    for (unsigned long d = 1; d <= 100; ++d) {
        IntPoly phi = cyclotomic_poly(d);
        auto idx = cyclotomic_index(phi);
        REQUIRE(idx.has_value());
        CHECK(*idx == d);
    }
}

TEST_CASE("cyclotomic index rejects non-cyclotomics") {
    CHECK(!cyclotomic_index(ip({-1, -1, 1})).has_value());
    CHECK(cyclotomic_index(ip({1, 1, 1})) == 3);
    CHECK(cyclotomic_index(ip({-1, 1})) == 1);
    CHECK(!cyclotomic_index(ip({-3, 2})).has_value());
}

TEST_CASE("order_at_one matches factor multiplicity") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dd(0, 5);
    std::uniform_int_distribution<long> dc(-9, 9);
    std::uniform_int_distribution<int> dm(0, 3);
    for (int t = 0; t < 60; ++t) {
        int d = dd(rng);
        std::vector<Int> c(d + 1);
        for (auto& v : c) v = dc(rng);
        IntPoly base(std::move(c));
        if (base.is_zero()) continue;
        int m = dm(rng);
        IntPoly p = base * ip({-1, 1}).pow(static_cast<unsigned>(m));
        auto f = factor_over_integers(p);
        int mult = 0;
        for (const auto& [fac, mu] : f.factors)
            if (fac == ip({-1, 1})) mult = mu;
        CHECK(order_at_one(p) == mult);
    }
}

TEST_CASE("degree cap enforced") {
    std::vector<Int> c(70, Int(0));
    c[0] = 1;
    c[69] = 1;
    CHECK_THROWS_AS(factor_over_integers(IntPoly(std::move(c))), degree_too_large);
    CHECK_THROWS_AS(factor_over_integers(IntPoly()), zero_polynomial);
}
