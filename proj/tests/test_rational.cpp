#include <doctest.h>

#include "surml/rational.hpp"

using namespace surml;

TEST_CASE("decimal strings parse to exact rationals") {
    CHECK(rational_from_string("-0.65") == make_rational(-13, 20));
    CHECK(rational_from_string("0.14") == make_rational(7, 50));
    CHECK(rational_from_string("188") == Rational(188));
    CHECK(rational_from_string("-9.94") == make_rational(-497, 50));
    CHECK(rational_from_string("1.5e-3") == make_rational(3, 2000));
    CHECK(rational_from_string("2e2") == Rational(200));
    CHECK(rational_from_string("3/7") == make_rational(3, 7));
    CHECK(rational_from_string("-4/6") == make_rational(-2, 3));
    CHECK(rational_from_string(" 12.5 ") == make_rational(25, 2));
}

TEST_CASE("malformed strings are rejected") {
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("--2"), std::invalid_argument);
}

TEST_CASE("results stay canonical") {
    Rational a = make_rational(6, -4);
    CHECK(a == make_rational(-3, 2));
    CHECK(is_canonical(a));
    Rational b = rational_from_string("0.250") + rational_from_string("0.75");
    CHECK(b == Rational(1));
    CHECK(is_canonical(b));
    CHECK(to_string(make_rational(-13, 20)) == "-13/20");
    CHECK(to_string(Rational(42)) == "42");
}
