#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gamma/parse.hpp"
#include "test_support.hpp"

using namespace gq;

namespace {
LaurentPoly T(long e = 1) { return LaurentPoly::t(e); }

Errc parse_error_code(const std::string& text) {
    try {
        parse_poly(text);
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::INVALID_INPUT;  // sentinel: no error thrown
}
}

TEST_CASE("polynomial grammar basics") {
    LaurentPoly one(1);
    CHECK(parse_poly("t") == T());
    CHECK(parse_poly("t^2 - 1") == T(2) - one);
    CHECK(parse_poly("-t + 1") == one - T());
    CHECK(parse_poly("(t-1)(t+1)") == T(2) - one);
    CHECK(parse_poly("(t-1)*(t+1)") == T(2) - one);
    CHECK(parse_poly("3/2 t^-2 + 1") == LaurentPoly::monomial(Rational(3, 2), -2) + one);
    CHECK(parse_poly("2t") == LaurentPoly::monomial(Rational(2), 1));
    CHECK(parse_poly("(t-1)^4") == (T() - one).pow(4));
    CHECK(parse_poly("t^-3") == T(-3));
    CHECK(parse_poly("0") == LaurentPoly());
    CHECK(parse_poly("  t ^ 2  +  t ") == T(2) + T());
}

TEST_CASE("rational coefficients only use '/' inside a rational literal") {
    CHECK(parse_poly("1/2") == LaurentPoly(Rational(1, 2)));
    CHECK(parse_poly("7/3*t^5") == LaurentPoly::monomial(Rational(7, 3), 5));
    // Division by a non-constant is not part of the polynomial grammar.
    CHECK(parse_error_code("1/(t-1)") == Errc::PARSE_ERROR);
    CHECK(parse_error_code("t/2") == Errc::PARSE_ERROR);
}

TEST_CASE("malformed input reports offsets") {
    CHECK(parse_error_code("") == Errc::PARSE_ERROR);
    CHECK(parse_error_code("t^^2") == Errc::PARSE_ERROR);
    CHECK(parse_error_code("(t-1") == Errc::PARSE_ERROR);
    CHECK(parse_error_code("t + ") == Errc::PARSE_ERROR);
    CHECK(parse_error_code("x") == Errc::PARSE_ERROR);
    CHECK(parse_error_code("t^") == Errc::PARSE_ERROR);
    try {
        parse_poly("t^^2");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
    }
}

TEST_CASE("rational-function grammar allows quotients and negative powers") {
    RationalFn r = parse_ratfn("(t-1)/(t+1)");
    CHECK(r.num() * (T() + LaurentPoly(1)) == r.den() * (T() - LaurentPoly(1)));
    CHECK(parse_ratfn("(t-1)^-2") == RationalFn(LaurentPoly(1)) / RationalFn((T() - LaurentPoly(1)).pow(2)));
    CHECK(parse_ratfn("1/2").is_polynomial());  // constant, not a quotient
    CHECK(parse_ratfn("t^2-1") == RationalFn(T(2) - LaurentPoly(1)));
    CHECK_THROWS_AS(parse_ratfn("(t-1)/0"), Error);
}

TEST_CASE("print/parse round trip is the identity") {
    std::mt19937 rng(7100);
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly p = testsupport::random_poly(rng, 5);
        CHECK(parse_poly(format_poly(p)) == p);
    }
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly num = testsupport::random_poly(rng, 4);
        LaurentPoly den = testsupport::random_poly(rng, 3, true);
        RationalFn r(num, den);
        CHECK(parse_ratfn(format_ratfn(r)) == r);
    }
}
