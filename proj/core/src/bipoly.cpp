#include "p2e/bipoly.hpp"

#include <limits>

namespace p2e {

BiPoly bipoly_mul(const BiPoly& p, const BiPoly& q) {
  return bipoly_mul_capped(p, q, std::numeric_limits<int>::max());
}

BiPoly bipoly_mul_capped(const BiPoly& p, const BiPoly& q, int kcap) {
  BiPoly r;
  for (const auto& [ka, ca] : p.terms())
    for (const auto& [kb, cb] : q.terms()) {
      if (ka.first + kb.first > kcap) continue;
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  return r;
}

BiPoly bipoly_truncate(const BiPoly& p, int kmax, int lmax) {
  if (kmax < 0 || lmax < 0) throw std::domain_error("bipoly_truncate: negative bound");
  BiPoly r;
  for (const auto& [kl, c] : p.terms())
    if (kl.first <= kmax && kl.second <= lmax) r.add_term(kl.first, kl.second, c);
  return r;
}

}  // namespace p2e
