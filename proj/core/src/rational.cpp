#include "p2e/rational.hpp"

namespace p2e {

Rational rising_factorial(const Rational& x, int n) {
  if (n < 0) throw std::domain_error("rising_factorial: negative order");
  Rational r(1);
  for (int j = 0; j < n; ++j) r *= x + Rational(j);
  return r;
}

Rational gen_binom(const Rational& x, int k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (int j = 0; j < k; ++j) {
    r *= x - Rational(j);
    r /= Rational(j + 1);
  }
  return r;
}

}  // namespace p2e
