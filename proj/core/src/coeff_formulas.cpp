#include "p2e/coeff_formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "p2e/coeff_tensor.hpp"

namespace p2e {
namespace {

int sgn_pow(int e) { return e % 2 == 0 ? 1 : -1; }  // (-1)^e for any sign of e

Rational fact(int n) {
  Rational r(1);
  for (int j = 2; j <= n; ++j) r *= Rational(j);
  return r;
}

Rational pow2(int e) {
  Rational r(1);
  for (int j = 0; j < e; ++j) r *= Rational(2);
  return r;
}

// Integer binomial; zero outside 0 <= j <= m.
Rational ibinom(int m, int j) {
  if (j < 0 || j > m) return Rational(0);
  j = std::min(j, m - j);
  Rational r(1);
  for (int t = 0; t < j; ++t) {
    r *= Rational(m - t);
    r /= Rational(t + 1);
  }
  return r;
}

void check_window(Quantity q, Form f, int n, int k, int l, const char* what) {
  if (!in_window(q, f, n, k, l))
    throw std::domain_error(std::string(what) + ": (" + std::to_string(n) + "," + std::to_string(k) + "," +
                            std::to_string(l) + ") outside structural window");
}

}  // namespace

Rational gen_d_phi(int n, int k, int l) {
  check_window(Quantity::phi, Form::sinpow, n, k, l, "gen_d_phi");
  Rational tot(0);
  for (int r = 0; r < k; ++r)
    for (int m = 0; m < k - r; ++m)
      for (int p = 0; p <= m / 2; ++p)
        for (int q = 0; q <= r / 2; ++q) {
          int tmax = std::min(l - k, r - q);
          for (int t = 0; t <= tmax; ++t) {
            int s = l - k - t;
            Rational term(sgn_pow(n - l + k));
            term *= rising_factorial(Rational(k, 2), r - q);
            term *= pow2(r - 2 * q);
            term /= fact(q) * fact(r - 2 * q) * Rational(m + 1 + r);
            term *= ibinom(r - q, t) * ibinom(k - 1, m + r) * ibinom(m + 1, 2 * p + 1);
            term *= gen_binom(Rational(k, 2) + Rational(r - q + s - 1), s);
            term *= ibinom(p, n - m - r + q - l + k + t + p);
            tot += term;
          }
        }
  return tot;
}

Rational gen_c_phi(int n, int k, int l) {
  check_window(Quantity::phi, Form::fourier, n, k, l, "gen_c_phi");
  Rational tot(0);
  for (int r = 0; r < k; ++r)
    for (int m = 0; m < k - r; ++m)
      for (int p = 0; p <= m / 2; ++p)
        for (int q = 0; q <= r / 2; ++q) {
          int tmax = std::min(l - k, r - q);
          for (int t = 0; t <= tmax; ++t) {
            int s = l - k - t;
            int w = m + r - q + s - p;
            Rational pre(sgn_pow(l - k));
            pre *= rising_factorial(Rational(k, 2), r - q);
            pre /= fact(q) * fact(r - 2 * q) * Rational(m + 1 + r);
            pre /= pow2(2 * (m + s) + r + 1);
            pre *= ibinom(r - q, t) * ibinom(k - 1, m + r) * ibinom(m + 1, 2 * p + 1);
            pre *= gen_binom(Rational(k, 2) + Rational(r - q + s - 1), s);
            if (pre.is_zero()) continue;
            Rational inner(0);
            for (int i = std::max(0, p - n + 1); i <= std::min(p, p - n + 1 + w); ++i)
              inner += Rational(sgn_pow(w + p - i + 1 - n)) * ibinom(2 * p + 1, i) * ibinom(2 * w + 1, w + p - i + 1 - n);
            for (int i = std::max(0, p - w + n); i <= p; ++i)
              inner += Rational(sgn_pow(w - p + i - n)) * ibinom(2 * p + 1, i) * ibinom(2 * w + 1, w - p + i - n);
            for (int i = std::max(0, p - w - n); i <= p - n; ++i)
              inner -= Rational(sgn_pow(w - p + i + n)) * ibinom(2 * p + 1, i) * ibinom(2 * w + 1, w - p + i + n);
            tot += pre * inner;
          }
        }
  return tot;
}

}  // namespace p2e
