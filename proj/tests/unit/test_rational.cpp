#include "doctest.h"
#include "fracwave/rational.hpp"

using fracwave::DomainError;
using fracwave::OverflowError;
using fracwave::Rational;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) - Rational(3, 2) == Rational(-1));
  CHECK(Rational(5, 8) / Rational(5, 2) == Rational(1, 4));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2).pow(-2) == Rational(1, 4));
  CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational ordering and conversion") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(-4, 3));
  CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(1, 2).sign() == 1);
  CHECK(Rational(-1, 2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("-3.25") == Rational(-13, 4));
  CHECK(Rational::parse("4.5") == Rational(9, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational::parse("1e5"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
}

TEST_CASE("rational overflow detection") {
  const Rational big(static_cast<std::int64_t>(1) << 40);
  CHECK_THROWS_AS(big * big * big, OverflowError);
  // staying in range is fine
  CHECK(big * Rational(1, big.num()) == Rational(1));
}
