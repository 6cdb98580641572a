#include "doctest.h"

#include "bcz/numeric.hpp"

using bcz::Rational;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(bcz::parse_rational("3/6") == Rational(1, 2));
  CHECK(bcz::parse_rational("5") == Rational(5));
  CHECK(bcz::parse_rational("0.855") == Rational(171, 200));
  CHECK(bcz::parse_rational("-1.25") == Rational(-5, 4));
  CHECK(bcz::parse_rational("  1/5 ") == Rational(1, 5));
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "0.5.1", "1e3"}) {
    CHECK_THROWS_AS(bcz::parse_rational(bad), bcz::ConfigError);
  }
}

TEST_CASE("parse_double shares the rational grammar") {
  CHECK(bcz::parse_double("1/4") == 0.25);
  CHECK(bcz::parse_double("1e-3") == 0.001);
  CHECK_THROWS_AS(bcz::parse_double("x"), bcz::ConfigError);
}

TEST_CASE("to_string") {
  CHECK(bcz::to_string(Rational(2, 4)) == "1/2");
  CHECK(bcz::to_string(Rational(3)) == "3");
  CHECK(bcz::to_string(0.1) == "0.1");
  CHECK(bcz::parse_double(bcz::to_string(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("double to rational is exact") {
  const Rational r = bcz::convert<Rational>(0.1);
  CHECK(r != Rational(1, 10));
  CHECK(bcz::to_double(r) == 0.1);
  CHECK(bcz::convert<Rational>(0.75) == Rational(3, 4));
  CHECK_THROWS_AS(bcz::convert<Rational>(std::nan("")), bcz::DomainError);
}

TEST_CASE("exact floor and ceil") {
  using T = bcz::ScalarTraits<Rational>;
  CHECK(T::floor(Rational(-1, 2)) == -1);
  CHECK(T::ceil(Rational(-1, 2)) == 0);
  CHECK(T::floor(Rational(7, 7)) == 1);
  CHECK(T::ceil_i64(Rational(9, 4)) == 3);
  CHECK_THROWS_AS(T::floor_i64(Rational(mpz_class("100000000000000000000000"))), bcz::DomainError);
  CHECK(bcz::ScalarTraits<double>::ceil_i64(2.25) == 3);
}
