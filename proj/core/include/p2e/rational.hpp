#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace p2e {

/// Exact arbitrary-precision rational. Always stored reduced with a positive
/// denominator; zero is canonically 0/1. Immutable value semantics; every
/// operation is pure and safe to run concurrently.
class Rational {
 public:
  Rational() { mpq_init(q_); }

  Rational(long num) {  // NOLINT(google-explicit-constructor) numeric literal convenience
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
  }

  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
  }

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }

  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  ~Rational() { mpq_clear(q_); }

  /// Parses "p/q" or "p"; optional leading '-'.
  static Rational from_string(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.q_, s.c_str(), 10) != 0)
      throw std::invalid_argument("rational: unparseable '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0) throw std::domain_error("rational: zero denominator");
    mpq_canonicalize(r.q_);
    return r;
  }

  /// "p/q" with q omitted when 1, e.g. "15/256", "-3/64", "0".
  std::string to_string() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
  }

  double to_double() const { return mpq_get_d(q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }

  std::string numerator_string() const {
    char* raw = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
  }

 private:
  mpq_t q_;
};

/// x(x+1)...(x+n-1); 1 when n = 0.
Rational rising_factorial(const Rational& x, int n);

/// Generalized binomial x(x-1)...(x-k+1)/k!; 1 when k = 0, 0 when k < 0.
Rational gen_binom(const Rational& x, int k);

}  // namespace p2e
