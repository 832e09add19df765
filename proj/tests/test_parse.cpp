#include "doctest.h"
#include "nscurve/error.hpp"
#include "nscurve/parse.hpp"
#include "test_util.hpp"

using namespace nscurve;
using namespace testutil;

TEST_CASE("scalar grammar") {
    CHECK(parse_scalar("(t^2+1)/(t+2)") == (T() * T() + S(1)) / (T() + S(2)));
    CHECK(parse_scalar("r^2 + t*r") == R(1) * R(1) + T() * R(1));
    CHECK(parse_scalar("level 2; r^3") == R(2).pow(3));
    CHECK(parse_scalar("level 2\nr^9") == T());
    CHECK(parse_scalar("-1") == S(2));
    CHECK(parse_scalar("t^-2") == T().pow(-2));
    CHECK(parse_scalar("t^(-1)*t") == S(1));
    CHECK(parse_scalar("7") == S(1));
}

TEST_CASE("scalar grammar errors carry positions") {
    try {
        parse_scalar("t + ?");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    try {
        parse_scalar("(t + 1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse_scalar("x + 1"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/(t - t)"), ParseError);
    CHECK_THROWS_AS(parse_scalar("level 0; r"), ParseError);
    CHECK_THROWS_AS(parse_scalar("level 9; t"), Error);
}

TEST_CASE("polynomial grammar") {
    HomPoly f = parse_poly("y^2*z - x^3");
    CHECK(f.degree() == 3);
    CHECK(f.coeff({3, 0, 0}) == S(2));
    CHECK(parse_poly("(x+y)^2") == parse_poly("x^2 + 2*x*y + y^2"));
    CHECK_THROWS_AS(parse_poly("x^2 + y"), ParseError);
    CHECK_THROWS_AS(parse_poly("x/y"), ParseError);
}

TEST_CASE("formatting round trips") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        TowerScalar x = random_scalar(rng, static_cast<int>(rng() % 2));
        CHECK(parse_scalar(format_scalar(x, 1)) == x);
    }
    CHECK(format_scalar(lift(T(), 1)) == "t");
    CHECK(format_scalar(R(1) * R(1) * R(1) * R(1)) == "t*r");
    CHECK(format_scalar(R(1).inverse()) == "1/r");
    CHECK(format_scalar((T() + S(1)) / (T() * T())) == "(t + 1)/t^2");
    HomPoly f = parse_poly("r*x^2 + (t+1)/t*y*z + 2*z^2");
    CHECK(parse_poly(format_poly(f)) == f);
    CHECK(format_point(parse_point("(2*r:2:2)")) == "(r:1:1)");
}
