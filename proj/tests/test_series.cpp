#include <doctest.h>

#include "trio/errors.hpp"
#include "trio/series.hpp"

using trio::mps::TruncatedSeries;

TEST_CASE("constant and coefficient access") {
    const auto s = TruncatedSeries::constant(3.5, {2, 1});
    CHECK(s.coeff({0, 0}) == 3.5);
    CHECK(s.coeff({2, 1}) == 0.0);
    CHECK_THROWS_AS((void)s.coeff({3, 0}), trio::OutOfCaps);
    CHECK_THROWS_AS((void)s.coeff({0, -1}), trio::OutOfCaps);
}

TEST_CASE("affine embeds linear terms and truncates capped variables") {
    const auto s = TruncatedSeries::affine(1.0, {{0, 2.0}, {1, -3.0}}, {1, 0});
    CHECK(s.coeff({0, 0}) == 1.0);
    CHECK(s.coeff({1, 0}) == 2.0);
    // variable 1 is capped at degree 0: its linear term is truncated away
    CHECK(s.num_vars() == 2);
}

TEST_CASE("product of (1+x)(1+y)") {
    const auto x = TruncatedSeries::affine(1.0, {{0, 1.0}}, {1, 1});
    const auto y = TruncatedSeries::affine(1.0, {{1, 1.0}}, {1, 1});
    const auto p = x * y;
    CHECK(p.coeff({0, 0}) == 1.0);
    CHECK(p.coeff({1, 0}) == 1.0);
    CHECK(p.coeff({0, 1}) == 1.0);
    CHECK(p.coeff({1, 1}) == 1.0);
}

TEST_CASE("multiplication truncates beyond caps") {
    const auto x = TruncatedSeries::affine(1.0, {{0, 1.0}}, {1});
    const auto sq = x * x; // (1+x)^2 = 1 + 2x + x^2, x^2 dropped
    CHECK(sq.coeff({0}) == 1.0);
    CHECK(sq.coeff({1}) == 2.0);
}

TEST_CASE("polynomial builder with out-of-cap terms") {
    const auto p = TruncatedSeries::polynomial(
        {{{0, 0}, 1.0}, {{1, 1}, 2.0}, {{2, 0}, 7.0}}, {1, 1});
    CHECK(p.coeff({0, 0}) == 1.0);
    CHECK(p.coeff({1, 1}) == 2.0); // the {2,0} term lies outside the caps
}

TEST_CASE("reciprocal of 1-x is the geometric series") {
    const auto f = TruncatedSeries::affine(1.0, {{0, -1.0}}, {6});
    const auto g = f.reciprocal();
    for (int k = 0; k <= 6; ++k) CHECK(g.coeff({k}) == doctest::Approx(1.0));
}

TEST_CASE("f times reciprocal(f) is 1 up to the caps") {
    auto f = TruncatedSeries::polynomial(
        {{{0, 0, 0}, 2.0}, {{1, 0, 0}, -0.7}, {{0, 1, 0}, 0.3},
         {{1, 1, 1}, 1.9}, {{0, 0, 2}, -1.1}},
        {2, 2, 2});
    const auto prod = f * f.reciprocal();
    CHECK(prod.coeff({0, 0, 0}) == doctest::Approx(1.0));
    CHECK(prod.coeff({1, 0, 0}) == doctest::Approx(0.0));
    CHECK(prod.coeff({2, 2, 2}) == doctest::Approx(0.0));
    CHECK(prod.coeff({1, 2, 1}) == doctest::Approx(0.0));
}

TEST_CASE("reciprocal requires nonzero constant term") {
    const auto f = TruncatedSeries::affine(0.0, {{0, 1.0}}, {3});
    CHECK_THROWS_AS((void)f.reciprocal(), trio::ZeroConstantTerm);
}

TEST_CASE("cap mismatch is rejected") {
    const auto a = TruncatedSeries::constant(1.0, {1, 1});
    const auto b = TruncatedSeries::constant(1.0, {2, 1});
    CHECK_THROWS_AS((void)(a + b), trio::CapMismatch);
    CHECK_THROWS_AS((void)(a * b), trio::CapMismatch);
}

TEST_CASE("arithmetic identities") {
    const auto a = TruncatedSeries::polynomial(
        {{{0, 0}, 1.5}, {{1, 0}, 2.0}, {{0, 1}, -0.5}}, {2, 2});
    const auto b = TruncatedSeries::polynomial(
        {{{0, 0}, -0.5}, {{1, 1}, 1.0}, {{2, 0}, 3.0}}, {2, 2});
    const auto lhs = (a + b) * a;
    const auto rhs = a * a + b * a;
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            CHECK(lhs.coeff({i, j}) == doctest::Approx(rhs.coeff({i, j})));
        }
    }
    const auto z = a - a;
    CHECK(z.coeff({0, 0}) == 0.0);
    CHECK(z.coeff({1, 0}) == 0.0);
    const auto s = a.scale(2.0) - a - a;
    CHECK(s.coeff({1, 0}) == 0.0);
}
