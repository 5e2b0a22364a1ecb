#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bt/literal.hpp"

using namespace bt;

TEST_CASE("scalar literals")
{
    const auto F = Field::make(3, 2, 2, 32);
    CHECK(parse_scalar(F, "3").approx_equal(PAdic::from_int(F, 3)));
    CHECK(parse_scalar(F, "p").approx_equal(PAdic::from_int(F, 3)));
    CHECK(parse_scalar(F, "pi^2").approx_equal(PAdic::from_int(F, 3)));
    CHECK(parse_scalar(F, "pi^-1").valuation() == -1);
    CHECK(parse_scalar(F, "-(1 + 2) * 4 / 6").approx_equal(PAdic::from_int(F, -2)));
    CHECK(parse_scalar(F, "u").approx_equal(PAdic::unramified_generator(F)));
    CHECK(parse_scalar(F, "zeta(8)^8").is_one());
    CHECK(parse_scalar(F, "1 - 1").is_zero());
}

TEST_CASE("malformed scalars")
{
    const auto F = Field::make(2, 1, 1, 16);
    CHECK_THROWS_AS(parse_scalar(F, ""), ParseError);
    CHECK_THROWS_AS(parse_scalar(F, "1 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar(F, "(1"), ParseError);
    CHECK_THROWS_AS(parse_scalar(F, "x"), ParseError);
    CHECK_THROWS_AS(parse_scalar(F, "zeta(3)"), FieldError);
}

TEST_CASE("matrices and points")
{
    const auto F = Field::make(5, 1, 1, 16);
    const Mat2 m = parse_matrix(F, "1, 2; 3, 4");
    CHECK(m.det().approx_equal(PAdic::from_int(F, -2)));
    CHECK_THROWS_AS(parse_matrix(F, "1, 2; 3"), ParseError);
    CHECK(parse_point(F, "inf").is_infinity());
    CHECK(parse_point(F, "(1:0)").is_infinity());
    CHECK(parse_point(F, "(2:4)") == ProjPoint::of(parse_scalar(F, "1/2")));
}

TEST_CASE("vertex keys round trip")
{
    const auto F = Field::make(2, 2, 2, 32);
    for (const char* text : {"(0; 0)", "(3; 1 + pi^2)", "(-2; 0)", "(2; u)"}) {
        const BtVertex v = parse_vertex(F, text);
        CHECK(parse_vertex(F, v.key()) == v);
    }
    CHECK(parse_vertex(F, "(1; 1 + pi^3)") == parse_vertex(F, "(1; 1)"));
    CHECK_THROWS_AS(parse_vertex(F, "(1 1)"), ParseError);
}
