/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/rational.hh>

#include <doctest.h>

#include <stdexcept>

using hamtough::Rational;

TEST_CASE("reduced form with positive denominator")
{
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, 5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and ordering are exact")
{
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(4, 3) - Rational(1) == Rational(1, 3));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(4, 3) < Rational(3, 2));
    CHECK(Rational(1, 3) > Rational(333333333, 1000000000));
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("large operands do not overflow intermediate products")
{
    Rational big(3000000000LL, 7);
    CHECK(big * Rational(7, 3000000000LL) == Rational(1));
    CHECK(Rational(4000000000LL, 3) < Rational(4000000001LL, 3));
}

TEST_CASE("text form")
{
    CHECK(Rational(4, 3).to_string() == "4/3");
    CHECK(Rational(0).to_string() == "0/1");
    CHECK(Rational(-5, 10).to_string() == "-1/2");
    CHECK(Rational::parse("7/10") == Rational(7, 10));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/2/3"));
    CHECK_THROWS(Rational::parse(""));
}
