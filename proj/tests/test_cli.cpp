#include <catch2/catch_amalgamated.hpp>

#include "hclif/json_io.hpp"
#include "hclif/parse.hpp"

using namespace hclif;

TEST_CASE("coordinate grammar: literals and arithmetic") {
    // plain rationals promote into the requested field
    CHECK(parse_coordinate("3/4", 5) == CycNum::scalar_in(5, Rational(3, 4)));
    CHECK(parse_coordinate("-2", 3) == CycNum::scalar_in(3, Rational(-2)));
    CHECK(parse_coordinate("0", 7) == CycNum::zero_in(7));

    // root powers, products, sums
    CycNum w = CycNum::root(5);
    CHECK(parse_coordinate("w", 5) == w);
    CHECK(parse_coordinate("2w^3+1/2", 5) == CycNum(Rational(1, 2)) + CycNum(2) * pow(w, 3));
    CHECK(parse_coordinate("w^5", 5) == CycNum::scalar_in(5, Rational(1)));
    CHECK(parse_coordinate("-(w+1)^2", 5) == -((w + CycNum(1)) * (w + CycNum(1))));
    CHECK(parse_coordinate("w^-1", 5) == CycNum::root_power(5, 4));
    CHECK(parse_coordinate("w^-7", 5) == CycNum::root_power(5, 3));
    CHECK(parse_coordinate(" ( 1 + w ) * ( 1 - w ) ", 5) == (CycNum(1) + w) * (CycNum(1) - w));

    // implicit product: a digit run followed by w multiplies
    CHECK(parse_coordinate("3w", 5) == CycNum(3) * w);
}

TEST_CASE("coordinate grammar: rejected input") {
    CHECK_THROWS_AS(parse_coordinate("w^x", 5), invalid_input);
    CHECK_THROWS_AS(parse_coordinate("1//2", 5), invalid_input);
    CHECK_THROWS_AS(parse_coordinate("", 5), invalid_input);
    CHECK_THROWS_AS(parse_coordinate("2^-2", 5), invalid_input);
    CHECK_THROWS_AS(parse_coordinate("1/0", 5), invalid_input);
    CHECK_THROWS_AS(parse_coordinate("(1+w", 5), invalid_input);
    CHECK_THROWS_AS(parse_coordinate("1 2", 5), invalid_input);
    CHECK_THROWS_AS(parse_coordinate("w", 4), invalid_input);
}

TEST_CASE("point grammar: affine, projective, ABC, infinity") {
    // p = 3: one affine parameter, or "inf"
    CHECK(proj_equal(parse_point("0", 3), p3_point(CycNum::zero_in(3))));
    CHECK(proj_equal(parse_point("-1", 3), p3_point(CycNum::scalar_in(3, Rational(-1)))));
    CHECK(proj_equal(parse_point("inf", 3), p3_infinity()));
    CHECK_THROWS_AS(parse_point("inf", 5), invalid_input);

    // p = 5 affine: "a,b" fills (1 : b : a)
    {
        ModuliPoint got = parse_point("1,1", 5);
        ModuliPoint want = make_moduli_point(
            5, {CycNum::scalar_in(5, Rational(1)), CycNum::scalar_in(5, Rational(1)),
                CycNum::scalar_in(5, Rational(1))});
        CHECK(proj_equal(got, want));
    }
    {
        ModuliPoint got = parse_point("2,-1/2", 5);
        CHECK(proj_equal(got, abc_point(CycNum(Rational(2)), CycNum(Rational(-1, 2)),
                                         CycNum(Rational(1)))));
    }

    // p = 5 projective: three entries straight through
    {
        ModuliPoint got = parse_point("1,2,3", 5);
        ModuliPoint want = make_moduli_point(
            5, {CycNum::scalar_in(5, Rational(1)), CycNum::scalar_in(5, Rational(2)),
                CycNum::scalar_in(5, Rational(3))});
        CHECK(proj_equal(got, want));
    }

    // ABC names the reversed order
    CHECK(proj_equal(parse_point("1,-1,0", 5, true),
                      abc_point(CycNum(Rational(1)), CycNum(Rational(-1)), CycNum(Rational(0)))));
    CHECK_THROWS_AS(parse_point("1,2", 5, true), invalid_input);
    CHECK_THROWS_AS(parse_point("1,2,3,4", 5), invalid_input);
    CHECK_THROWS_AS(parse_point("0,0,0", 5), invalid_input);

    // root coordinates ride through the comma splitter, parens and all
    ModuliPoint pt = parse_point("w, (1+w)*(1+w), -w^-1", 5);
    CHECK(proj_equal(pt, make_moduli_point(5, {CycNum::root(5),
                                                pow(CycNum::root(5) + CycNum(1), 2),
                                                -CycNum::root_power(5, 4)})));
}

TEST_CASE("json payloads are deterministic and round-trip exactly") {
    GroebnerLimits lim;

    // base locus report for a ten-point parameter
    ModuliPoint pt = abc_point(CycNum(Rational(1)), CycNum(Rational(-1)), CycNum(Rational(0)));
    auto an = analyze_base_locus(pt, lim);
    Json j = json_locus(an);
    CHECK(j["empty"] == false);
    CHECK(j["dimension"] == 0);
    CHECK(j["degree"] == "10");
    std::string once = j.dump(2);
    Json back = Json::parse(once);
    CHECK(back.dump(2) == once);

    // graded character table
    HeisenbergGroup G(5);
    GradedAlgebra A(clifford_algebra(pt));
    auto cs = character_series(A, G, 3, false);
    Json jc = json_char_series(cs);
    CHECK(jc["p"] == 5);
    CHECK(jc["max_degree"] == 3);
    CHECK(jc["rows"].size() == cs.reps.size());
    std::string dumped = jc.dump(2);
    CHECK(Json::parse(dumped).dump(2) == dumped);
}

TEST_CASE("base locus analysis is monomial-order independent") {
    GroebnerLimits lim;
    auto agree = [&](const ModuliPoint& pt) {
        auto a = analyze_base_locus(pt, lim, MonomialOrder::grevlex);
        auto b = analyze_base_locus(pt, lim, MonomialOrder::lex);
        CHECK(a.dim == b.dim);
        CHECK(a.degree == b.degree);
        CHECK(to_string(a.series) == to_string(b.series));
        return a;
    };
    // p = 3: a three-point fibre and an empty one
    agree(p3_point(CycNum::scalar_in(3, Rational(-1))));
    agree(p3_point(CycNum::scalar_in(3, Rational(1))));
    // p = 5: the ten-point degeneration (small enough under lex to afford)
    agree(abc_point(CycNum(Rational(1)), CycNum(Rational(-1)), CycNum(Rational(0))));
}
