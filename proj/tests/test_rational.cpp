#include <doctest.h>

#include "cwl/errors.hpp"
#include "cwl/rational.hpp"

using namespace cwl;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(1, 2).denominator_str() == "2");
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 7) / Rational(2, 7) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("1/2") == Rational(1, 2));
  CHECK(Rational::from_string("-7/3") == Rational(-7, 3));
  CHECK(Rational::from_string("12") == Rational(12));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK(Rational::from_string(Rational(-21, 48).str()) == Rational(-7, 16));
  CHECK_THROWS_AS(Rational::from_string("1/"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::from_string(""), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
}

TEST_CASE("powers and factorials") {
  CHECK(pow_int(Rational(-2), 3) == Rational(-8));
  CHECK(pow_int(Rational(2), 0) == Rational(1));
  CHECK(pow_int(Rational(2), -2) == Rational(1, 4));
  CHECK_THROWS_AS(pow_int(Rational(0), -1), DomainError);
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(double_factorial(-1) == Rational(1));
  CHECK(double_factorial(7) == Rational(105));
  CHECK(double_factorial(2 * 4 - 1) == Rational(105));
}
