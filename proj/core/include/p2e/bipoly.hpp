#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "p2e/rational.hpp"

namespace p2e {

/// Sparse bivariate polynomial sum c[k][l] * rho^k * e2^l with exact rational
/// coefficients. No zero coefficient is ever stored; exponents are >= 0.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (k: rho exponent, l: e2 exponent)
  using Terms = std::map<Key, Rational>;

  BiPoly() = default;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational get(int k, int l) const {
    auto it = terms_.find({k, l});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(int k, int l, const Rational& c) {
    if (k < 0 || l < 0) throw std::domain_error("bipoly: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({k, l}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [kl, c] : o.terms_) add_term(kl.first, kl.second, c);
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }

  BiPoly scaled(const Rational& s) const {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [kl, c] : terms_) r.terms_.emplace(kl, c * s);
    return r;
  }

  /// Lowest rho exponent present; `absent` when the polynomial is zero.
  int min_rho_order(int absent) const {
    return terms_.empty() ? absent : terms_.begin()->first.first;
  }

 private:
  Terms terms_;
};

/// Exact Cauchy product.
BiPoly bipoly_mul(const BiPoly& p, const BiPoly& q);

/// Product dropping every term with rho exponent above kcap.
BiPoly bipoly_mul_capped(const BiPoly& p, const BiPoly& q, int kcap);

/// Drops every term with k > kmax or l > lmax.
BiPoly bipoly_truncate(const BiPoly& p, int kmax, int lmax);

}  // namespace p2e
