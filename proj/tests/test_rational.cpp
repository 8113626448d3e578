#include <doctest.h>

#include "loday/rational.hpp"

using loday::Rational;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational::parse("2/4").str() == "1/2");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("3/-6").str() == "-1/2");
    CHECK(Rational::parse("+5").str() == "5");
    CHECK(Rational(4, -8).str() == "-1/2");

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

    // big values stay exact
    Rational big = Rational::parse("123456789123456789/2");
    CHECK((big + big).str() == "123456789123456789");
}

TEST_CASE("binomial and inverse factorial helpers") {
    CHECK(loday::binomial(4, 2).str() == "6");
    CHECK(loday::binomial(5, 0).str() == "1");
    CHECK(loday::binomial(3, 5).is_zero());
    CHECK(loday::inverse_factorial(0).str() == "1");
    CHECK(loday::inverse_factorial(4).str() == "1/24");
}
