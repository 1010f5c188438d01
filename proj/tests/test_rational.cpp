#include <doctest.h>

#include <random>
#include <sstream>

#include "tss/error.hpp"
#include "tss/rational.hpp"

using tss::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), tss::DomainError);
}

TEST_CASE("parsing accepts p and p/q with optional leading minus") {
  CHECK(Rational::parse("44/7").str() == "44/7");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("1/0"), tss::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), tss::ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), tss::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), tss::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), tss::ParseError);
  CHECK_THROWS_AS(Rational::parse("/2"), tss::ParseError);
}

TEST_CASE("arithmetic and comparisons are exact") {
  Rational a = Rational::parse("1/3");
  Rational b = Rational::parse("1/6");
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK_THROWS_AS(a / Rational(0), tss::DomainError);
  CHECK(a > b);
  CHECK(-a < b);
}

TEST_CASE("mod reduces into [0, period)") {
  Rational period = Rational::parse("2");
  CHECK(Rational::parse("5").mod(period).str() == "1");
  CHECK(Rational::parse("-1/2").mod(period).str() == "3/2");
  CHECK(Rational::parse("4").mod(period).str() == "0");
  CHECK(Rational::parse("7/3").mod(Rational::parse("44/7")).str() == "7/3");
  CHECK_THROWS_AS(Rational(1).mod(Rational(0)), tss::DomainError);
  CHECK_THROWS_AS(Rational(1).mod(Rational(-2)), tss::DomainError);
}

TEST_CASE("parse/str round-trips on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 999);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("stream output matches str") {
  std::ostringstream oss;
  oss << Rational::parse("-22/7");
  CHECK(oss.str() == "-22/7");
}
