#include <doctest.h>

#include "mcw/error.hpp"
#include "mcw/rational.hpp"

using mcw::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-2, -6) == Rational(1, 3));
  CHECK(Rational(2, -6) == Rational(-1, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 6).to_string() == "1/3");
  CHECK(Rational(-4, 2).to_string() == "-2/1");
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK(Rational::from_string("-7/14") == Rational(-1, 2));
  CHECK(Rational::from_string("0/9").to_string() == "0/1");
  CHECK_THROWS_AS(Rational::from_string("1/0"), mcw::Error);
  CHECK_THROWS_AS(Rational::from_string("a/2"), mcw::Error);
  CHECK_THROWS_AS(Rational::from_string(""), mcw::Error);
  CHECK_THROWS_AS(Rational::from_string("1.5"), mcw::Error);
}

TEST_CASE("arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1) / Rational(3) == third);
  CHECK_THROWS_AS(Rational(1) / Rational(0), mcw::Error);
  CHECK(-Rational(2, 5) == Rational(-2, 5));
  CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("powers, including negative exponents") {
  CHECK(Rational(2).pow(10) == Rational(1024));
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), mcw::Error);
  CHECK(Rational::pow2_inverse(5) == Rational(1, 32));
  // weights like 2^{-r(d+1-j)} must stay exact far beyond 64-bit range
  Rational w = Rational::pow2_inverse(80);
  CHECK(w * Rational(2).pow(80) == Rational(1));
}
