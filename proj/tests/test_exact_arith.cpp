#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "tropfrieze/rational_function.hpp"

using namespace tropfrieze;
using oracle::one;
using oracle::rone;
using oracle::rvar;
using oracle::var;

TEST_CASE("poly_add examples", "[exact-arith]") {
    const auto x1 = var(2, 0), x2 = var(2, 1);
    CHECK(poly_add(x1, -x1).is_zero());
    CHECK(poly_add(one(2) + x2, x1) == one(2) + x1 + x2);
    const auto y1 = var(2, 0), y2 = var(2, 1);
    CHECK(poly_add(one(2) + y1, y1 * y2) == one(2) + y1 + y1 * y2);
    CHECK_THROWS_AS(poly_add(var(2, 0), var(3, 0)), DimensionMismatch);
}

TEST_CASE("poly_mul examples", "[exact-arith]") {
    const auto x1 = var(2, 0), x2 = var(2, 1);
    CHECK(poly_mul(one(2) + x2, one(2)) == one(2) + x2);
    const auto y1 = var(2, 0);
    CHECK(poly_mul(one(2) + y1, one(2) + y1) == one(2) + LaurentPoly::monomial({1, 0}, 2) + y1 * y1);
    const auto inv_x1 = LaurentPoly::monomial({-1, 0});
    CHECK(poly_mul(inv_x1, one(2) + x2) == inv_x1 + LaurentPoly::monomial({-1, 1}));
    CHECK((one(2) + x1).to_string() == "1 + x1");
}

TEST_CASE("exact_div examples", "[exact-arith]") {
    const auto y1 = var(2, 0), y2 = var(2, 1);
    const auto sq = one(2) + LaurentPoly::monomial({1, 0}, 2) + y1 * y1;
    CHECK(exact_div(sq, one(2) + y1) == one(2) + y1);
    CHECK(exact_div(y2 + y2 * y2, y2) == one(2) + y2);
    const auto p = one(2) + y2 + y1 * y2;
    // Oracle: the remainder of division by the monic 1 + y1 is p evaluated at y1 = -1.
    const mpq_class rem = oracle::eval(p, {mpq_class(-1), mpq_class(5)});
    REQUIRE(rem != 0);
    CHECK_THROWS_AS(exact_div(p, one(2) + y1), NotDivisible);
    CHECK_THROWS_AS(exact_div(p, LaurentPoly(2)), ZeroDenominator);
}

TEST_CASE("rf_reduce examples", "[exact-arith]") {
    const auto y1 = var(2, 0), y2 = var(2, 1);
    const auto r1 = rf_reduce(y2 * (one(2) + y1), one(2) + y1);
    CHECK(r1.num() == y2);
    CHECK(r1.den() == one(2));

    const auto r2 = rf_reduce(one(2) + y2 + y1 * y2, y1);
    CHECK(r2.num() == LaurentPoly::monomial({-1, 0}) + LaurentPoly::monomial({-1, 1}) + y2);
    CHECK(r2.den() == one(2));

    const auto r3 = rf_reduce(LaurentPoly::monomial({1, 0}, -2), -var(2, 1));
    CHECK(r3.num() == LaurentPoly::monomial({1, -1}, 2));
    CHECK(r3.den() == one(2));

    const auto r4 = rf_reduce(one(2), -(one(2) + y1));
    CHECK(r4.num() == -one(2));
    CHECK(r4.den() == one(2) + y1);
    CHECK_THROWS_AS(rf_reduce(one(2), LaurentPoly(2)), ZeroDenominator);
}

TEST_CASE("substitute_monomials examples", "[exact-arith]") {
    const std::vector<RationalFunction> base{rvar(2, 0), rvar(2, 1)};
    const auto f = RationalFunction(one(2) + var(2, 0)) / RationalFunction(var(2, 1));
    CHECK(substitute_monomials(f, IntMatrix::identity(2), base) == f);
    CHECK(substitute_monomials(rvar(2, 0), IntMatrix{{0, 0}, {1, 0}}, base) == rvar(2, 1));
    const auto y1y2 = RationalFunction(var(2, 0) * var(2, 1));
    // Variable i goes to base^(column i): y1 -> x2^-1, y2 -> x1.
    CHECK(substitute_monomials(y1y2, IntMatrix{{0, 1}, {-1, 0}}, base) == rvar(2, 0) / rvar(2, 1));
    CHECK_THROWS_AS(substitute_monomials(y1y2, IntMatrix::identity(3), base), DimensionMismatch);
}

TEST_CASE("trop_eval examples", "[exact-arith]") {
    const auto f = RationalFunction(one(2) + var(2, 1)) / rvar(2, 0);
    CHECK(trop_eval(f, IntVec{1, 0}).value == -1);
    CHECK(trop_eval(rvar(2, 0), IntVec{5, -2}).value == 5);
    CHECK_THROWS_AS(trop_eval(rvar(2, 0) - rvar(2, 1), IntVec{0, 0}), SubtractionFreeViolation);
    CHECK_THROWS_AS(trop_eval(rvar(2, 0).pow(2), IntVec{Int{1} << 62, 0}), Overflow);
}

TEST_CASE("tropical values overflow instead of wrapping", "[exact-arith]") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(TropValue{big} * TropValue{1}, Overflow);
    CHECK((TropValue{3}.plus(TropValue{-2})).value == 3);
    const auto f = RationalFunction(LaurentPoly::monomial({2, 0}));
    CHECK_THROWS_AS(trop_eval(f, IntVec{big / 2 + 1, 0}), Overflow);
}

TEST_CASE("ring axioms against the evaluation oracle", "[exact-arith][property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto a = oracle::random_poly(rng, n, 4, -2, 2, -3, 3);
        auto b = oracle::random_poly(rng, n, 4, -2, 2, -3, 3);
        auto c = oracle::random_poly(rng, n, 3, -2, 2, -3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        const auto pt = oracle::random_point(rng, n);
        CHECK(oracle::eval(a * b, pt) == oracle::eval(a, pt) * oracle::eval(b, pt));
        CHECK(oracle::eval(a + b, pt) == oracle::eval(a, pt) + oracle::eval(b, pt));
    }
}

TEST_CASE("exact_div inverts multiplication", "[exact-arith][property]") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto p = oracle::random_poly(rng, n, 4, -2, 3, -4, 4);
        auto q = oracle::random_poly(rng, n, 4, -2, 3, -4, 4);
        CHECK(exact_div(p * q, q) == p);
        CHECK(exact_div(p * q, p) == q);
    }
}

TEST_CASE("gcd and reduction are representation independent", "[exact-arith][property]") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto a = oracle::random_poly(rng, n, 3, 0, 2, -3, 3);
        auto b = oracle::random_poly(rng, n, 3, 0, 2, -3, 3);
        auto c = oracle::random_poly(rng, n, 3, -1, 2, -3, 3);
        const auto base = rf_reduce(a, b);
        const auto scaled = rf_reduce(a * c, b * c);
        CHECK(base == scaled);
        CHECK(rf_reduce(base.num(), base.den()) == base);
        const auto g = poly_gcd(a * c, b * c);
        CHECK(try_exact_div(g, poly_gcd(c, c)).has_value());
        CHECK(g.glex_leading().second > 0);
        const auto pt = oracle::random_point(rng, n);
        CHECK(oracle::eval(scaled, pt) == oracle::eval(a, pt) / oracle::eval(b, pt));
        CHECK(base.den().min_exponents() == Exponent(n, 0));
    }
}

TEST_CASE("field operations agree with the evaluation oracle", "[exact-arith][property]") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2;
        auto f = rf_reduce(oracle::random_poly(rng, n, 3, -1, 2, 1, 3), oracle::random_poly(rng, n, 3, 0, 2, 1, 3));
        auto g = rf_reduce(oracle::random_poly(rng, n, 3, -1, 2, 1, 3), oracle::random_poly(rng, n, 3, 0, 2, 1, 3));
        const auto pt = oracle::random_point(rng, n);
        CHECK(oracle::eval(f + g, pt) == oracle::eval(f, pt) + oracle::eval(g, pt));
        CHECK(oracle::eval(f * g, pt) == oracle::eval(f, pt) * oracle::eval(g, pt));
        CHECK(oracle::eval(f / g, pt) == oracle::eval(f, pt) / oracle::eval(g, pt));
        CHECK((f / g) * g == f);
        CHECK(f.pow(-2) * f.pow(2) == rone(n));
    }
}

TEST_CASE("trop_eval is a semifield homomorphism", "[exact-arith][property]") {
    std::mt19937_64 rng(15);
    int evaluated = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2;
        auto f = RationalFunction(oracle::random_poly(rng, n, 3, -2, 2, 1, 3));
        auto g = RationalFunction(oracle::random_poly(rng, n, 3, -2, 2, 1, 3)) /
                 RationalFunction(oracle::random_poly(rng, n, 2, 0, 2, 1, 3));
        const auto x = oracle::random_vec(rng, n, -4, 4);
        const auto sum = f + g;
        const auto prod = f * g;
        if (g.subtraction_free() && sum.subtraction_free() && prod.subtraction_free()) {
            ++evaluated;
            CHECK(trop_eval(prod, x) == trop_eval(f, x) * trop_eval(g, x));
            CHECK(trop_eval(sum, x) == trop_eval(f, x).plus(trop_eval(g, x)));
        }
    }
    CHECK(evaluated > 40);
    const auto y1 = var(2, 0), y2 = var(2, 1);
    const auto factored = RationalFunction(y2) * RationalFunction(one(2) + y1);
    const auto expanded = RationalFunction(y2 + y1 * y2);
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -3; b <= 3; ++b) CHECK(trop_eval(factored, IntVec{a, b}) == trop_eval(expanded, IntVec{a, b}));
}
