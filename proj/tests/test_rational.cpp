#include <random>
#include <stdexcept>

#include "doctest.h"
#include "p2e/rational.hpp"

using p2e::Rational;
using p2e::gen_binom;
using p2e::rising_factorial;

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic stays exact") {
  CHECK(Rational(1, 2) + Rational(1, 8) == Rational(5, 8));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 8) == Rational(4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("string round-trip") {
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(-3, 64).to_string() == "-3/64");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational::from_string("15/256") == Rational(15, 256));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::from_string("nonsense"), std::invalid_argument);
}

TEST_CASE("string round-trip on random values") {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    Rational r(num(rng), den(rng));
    CHECK(Rational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("double conversion") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(-3, 4).to_double() == -0.75);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 100; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(Rational(3, 2), 3) == Rational(105, 8));
  CHECK(rising_factorial(Rational(7, 3), 0) == Rational(1));
  CHECK(rising_factorial(Rational(2), 3) == Rational(24));
  CHECK_THROWS_AS(rising_factorial(Rational(1), -1), std::domain_error);
}

TEST_CASE("generalized binomial") {
  CHECK(gen_binom(Rational(1, 2), 3) == Rational(1, 16));
  CHECK(gen_binom(Rational(5), 2) == Rational(10));
  CHECK(gen_binom(Rational(1, 2), 0) == Rational(1));
  CHECK(gen_binom(Rational(3), 5) == Rational(0));
  CHECK(gen_binom(Rational(1, 2), -2) == Rational(0));
}
