#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modone/poly.hpp"

using namespace modone;

namespace {

IntPoly ip(std::vector<long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long max_abs) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> dc(-max_abs, max_abs);
    int d = dd(rng);
    std::vector<Int> c(d + 1);
    for (auto& v : c) v = dc(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("length sums absolute coefficients") {
    CHECK(ip({-3, 2}).length() == 5);
    CHECK(IntPoly().length() == 0);
    CHECK(ip({1, -2, 1}).length() == 4);
}

TEST_CASE("basic arithmetic") {
    CHECK(ip({-1, 1}) * ip({1, 1}) == ip({-1, 0, 1}));
    CHECK(ip({-3, 2}).reverse() == ip({2, -3}));
    CHECK(to_int(exact_divide(to_rat(ip({-1, 0, 1})), to_rat(ip({-1, 1})))) == ip({1, 1}));
    CHECK_THROWS_AS(exact_divide(to_rat(ip({1, 0, 1})), to_rat(ip({-1, 1}))), not_divisible);
    CHECK(ip({0, -1, 0, 2}).derivative() == ip({-1, 0, 6}));
}

TEST_CASE("theta applies x d/dx") {
    CHECK(ip({0, 0, 1}).theta(1) == ip({0, 0, 2}));
    CHECK(ip({-1, 1}).theta(1) == ip({0, 1}));
    IntPoly p = ip({3, -2, 5, 7});
    CHECK(p.theta(0) == p);
    // theta twice = theta of theta
    CHECK(p.theta(2) == p.theta(1).theta(1));
}

TEST_CASE("length is sub-multiplicative") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        IntPoly a = random_poly(rng, 6, 9);
        IntPoly b = random_poly(rng, 6, 9);
        CHECK((a * b).length() <= a.length() * b.length());
    }
}

TEST_CASE("degree of product adds for nonzero operands") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        IntPoly a = random_poly(rng, 5, 9);
        IntPoly b = random_poly(rng, 5, 9);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("order at one") {
    IntPoly p = ip({-1, 1}) * ip({-1, 1}) * ip({-3, 2});
    CHECK(order_at_one(p) == 2);
    CHECK(order_at_one(ip({-3, 2})) == 0);
    CHECK(order_at_one(ip({-1, 0, 1})) == 1);
    CHECK_THROWS_AS(order_at_one(IntPoly()), zero_polynomial);
}

TEST_CASE("gcd_z on constructed inputs") {
    IntPoly a = ip({-1, 1}) * ip({2, 3});
    IntPoly b = ip({-1, 1}) * ip({5, 1});
    CHECK(gcd_z(a, b) == ip({-1, 1}));
    CHECK(gcd_z(ip({4}), ip({6})) == ip({1}));
}

TEST_CASE("self reciprocal detection") {
    CHECK(self_reciprocal_up_to_sign(ip({1, 1, 1})));
    CHECK(self_reciprocal_up_to_sign(ip({-1, 1})));   // reverse = -p
    CHECK(self_reciprocal_up_to_sign(ip({1, 0, 1})));
    CHECK(!self_reciprocal_up_to_sign(ip({-1, -1, 1})));
    CHECK(!self_reciprocal_up_to_sign(ip({-3, 2})));
}
