#include "p2e/coeff_generator.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "p2e/coeff_formulas.hpp"

namespace p2e {
namespace {

// Validity cap standing in for "exact at every order".
constexpr int kExact = 1 << 28;

int clamp_valid(long v) { return static_cast<int>(std::min<long>(v, kExact)); }

Rational fact(int n) {
  Rational r(1);
  for (int j = 2; j <= n; ++j) r *= Rational(j);
  return r;
}

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

Rational pow2(int e) {
  Rational r(1);
  for (int j = 0; j < e; ++j) r *= Rational(2);
  return r;
}

// cos(2n psi) weight of sin^(2i) psi: 2^(1-2i-[n==0]) (-1)^n binom(2i, i-n).
Rational cos_multiple_weight(int n, int i) {
  int exp = 1 - 2 * i - (n == 0 ? 1 : 0);
  Rational w = exp >= 0 ? pow2(exp) : Rational(1) / pow2(-exp);
  if (n % 2) w = -w;
  return w * ibinom(2 * i, i - n);
}

[[noreturn]] void window_error(const char* what, int n, int k, int l) {
  throw std::domain_error(std::string(what) + ": (" + std::to_string(n) + "," + std::to_string(k) + "," +
                          std::to_string(l) + ") outside structural window");
}

// BiPoly paired with the highest rho order its coefficients are exact at.
struct PV {
  BiPoly p;
  int kv = 0;
};

PV pv_mul(const PV& x, const PV& y) {
  int ax = x.p.min_rho_order(kExact);
  int ay = y.p.min_rho_order(kExact);
  PV r;
  r.kv = clamp_valid(std::min(static_cast<long>(x.kv) + ay, static_cast<long>(y.kv) + ax));
  r.p = bipoly_mul_capped(x.p, y.p, r.kv);
  return r;
}

PV pv_add(const PV& x, const PV& y) { return {x.p + y.p, std::min(x.kv, y.kv)}; }

PV pv_scale(const PV& x, const Rational& c) { return {x.p.scaled(c), x.kv}; }

struct InexactDivision {};

using E2Poly = std::map<int, Rational>;

// Formal power series quotient in rho, Q_m = (R_{m+1} - sum_{j>=2} A_j Q_{m+1-j}) / A_1.
// Requires den to start at rho^1 with a single e2 monomial there and num to
// have no rho^0 part; every division step must be exact in e2.
PV pv_div(const PV& num, const PV& den) {
  if (den.p.empty() || den.p.min_rho_order(0) != 1) throw InexactDivision{};
  std::map<int, E2Poly> dsl, nsl, qsl;
  for (const auto& [kl, c] : den.p.terms()) dsl[kl.first][kl.second] = c;
  for (const auto& [kl, c] : num.p.terms()) {
    if (kl.first == 0) throw InexactDivision{};
    nsl[kl.first][kl.second] = c;
  }
  const E2Poly& a1 = dsl.begin()->second;
  if (a1.size() != 1) throw InexactDivision{};
  const int m1 = a1.begin()->first;
  const Rational c1 = a1.begin()->second;

  PV q;
  q.kv = clamp_valid(std::min(static_cast<long>(num.kv), static_cast<long>(den.kv) + 1) - 1);
  for (int m = 0; m <= q.kv; ++m) {
    E2Poly acc;
    if (auto it = nsl.find(m + 1); it != nsl.end()) acc = it->second;
    for (int j = 2; j <= m + 1; ++j) {
      auto dj = dsl.find(j);
      auto qj = qsl.find(m + 1 - j);
      if (dj == dsl.end() || qj == qsl.end()) continue;
      for (const auto& [la, ca] : dj->second)
        for (const auto& [lb, cb] : qj->second) acc[la + lb] -= ca * cb;
    }
    E2Poly qm;
    for (const auto& [l, c] : acc) {
      if (c.is_zero()) continue;
      if (l < m1) throw InexactDivision{};
      qm[l - m1] = c / c1;
    }
    if (!qm.empty()) qsl[m] = std::move(qm);
  }
  for (const auto& [m, slice] : qsl)
    for (const auto& [l, c] : slice) q.p.add_term(m, l, c);
  return q;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace

const BiPoly& CoeffGenerator::phi_base(int n, int kgen) {
  if (kgen != phi_base_kgen_) {
    phi_base_.clear();
    phi_base_kgen_ = kgen;
  }
  while (static_cast<int>(phi_base_.size()) <= n) {
    int m = static_cast<int>(phi_base_.size());
    BiPoly p;
    for (int k = 1; k <= kgen; ++k)
      for (int l = std::max(m + 1, k); l <= m + k; ++l) p.add_term(k, l, gen_d_phi(m, k, l));
    phi_base_.push_back(std::move(p));
  }
  return phi_base_[n];
}

const BiPoly& CoeffGenerator::sin_base(int n, int kgen) {
  if (kgen != sin_base_kgen_) {
    sin_base_.clear();
    sin_base_kgen_ = kgen;
  }
  while (static_cast<int>(sin_base_.size()) <= n) {
    int m = static_cast<int>(sin_base_.size());
    BiPoly p;
    for (int k = 1; k <= kgen; ++k)
      for (int l = std::max(m, k); l <= m + k; ++l) p.add_term(k, l, d_sin_cell(m, k, l));
    sin_base_.push_back(std::move(p));
  }
  return sin_base_[n];
}

CoeffGenerator::Family CoeffGenerator::build_family(const std::vector<BiPoly>& base, int imax, int nmax, int kgen) {
  std::vector<PV> a(nmax + 1);
  for (int n = 0; n <= nmax; ++n) a[n] = PV{base[n], kgen};

  std::vector<PV> a0pow(imax + 1);
  a0pow[0].p.add_term(0, 0, Rational(1));
  a0pow[0].kv = kExact;
  for (int i = 1; i <= imax; ++i) a0pow[i] = pv_mul(a0pow[i - 1], a[0]);

  auto bell_cell = [&](int i, int n) {
    PV tot;
    tot.kv = kExact;
    for (const auto& parts : partitions(n)) {
      int m = static_cast<int>(parts.size());
      if (m > i) continue;
      Rational coef = fact(i) / fact(i - m);
      int run = 1;
      for (std::size_t t = 1; t <= parts.size(); ++t) {
        if (t < parts.size() && parts[t] == parts[t - 1]) {
          ++run;
          continue;
        }
        coef /= fact(run);
        run = 1;
      }
      PV term = a0pow[i - m];
      for (int p : parts) term = pv_mul(term, a[p]);
      tot = pv_add(tot, pv_scale(term, coef));
    }
    return tot;
  };

  Family fam;
  fam.imax = imax;
  fam.nmax = nmax;
  fam.b.assign(imax + 1, std::vector<VPoly>(nmax + 1));
  fam.b[0][0].p.add_term(0, 0, Rational(1));
  for (auto& cell : fam.b[0]) cell.kvalid = kExact;

  bool fell_back = false;
  for (int i = 1; i <= imax; ++i) {
    fam.b[i][0] = VPoly{a0pow[i].p, a0pow[i].kv};
    for (int n = 1; n <= nmax; ++n) {
      PV cell;
      if (i == 1) {
        cell = a[n];
      } else if (route_ == FamilyRoute::bell_only) {
        cell = bell_cell(i, n);
      } else {
        try {
          PV acc;
          acc.kv = kExact;
          for (int j = 1; j <= n; ++j) {
            PV prev{fam.b[i][n - j].p, fam.b[i][n - j].kvalid};
            acc = pv_add(acc, pv_scale(pv_mul(a[j], prev), Rational(j * (i + 1) - n)));
          }
          cell = pv_div(acc, pv_scale(a[0], Rational(n)));
        } catch (const InexactDivision&) {
          fell_back = true;
          cell = bell_cell(i, n);
        }
      }
      fam.b[i][n] = VPoly{std::move(cell.p), cell.kv};
    }
  }
  if (fell_back) ++fallback_count_;

  fam.kvalid = kExact;
  for (const auto& row : fam.b)
    for (const auto& cell : row) fam.kvalid = std::min(fam.kvalid, cell.kvalid);
  return fam;
}

void CoeffGenerator::ensure_phi_family(int imax, int nmax, int kneed) {
  if (phi_fam_.imax >= imax && phi_fam_.nmax >= nmax && phi_fam_.kvalid >= kneed) return;
  imax = std::max(imax, phi_fam_.imax);
  nmax = std::max(nmax, phi_fam_.nmax);
  kneed = std::max({kneed, phi_fam_.kvalid, 0});
  for (int margin = 2;; margin *= 2) {
    int kgen = kneed + margin;
    phi_base(nmax, kgen);
    Family fam = build_family(phi_base_, imax, nmax, kgen);
    if (fam.kvalid >= kneed) {
      phi_fam_ = std::move(fam);
      return;
    }
    if (margin > 64) throw std::logic_error("phi power family validity did not stabilize");
  }
}

void CoeffGenerator::ensure_sin_family(int imax, int nmax, int kneed) {
  if (sin_fam_.imax >= imax && sin_fam_.nmax >= nmax && sin_fam_.kvalid >= kneed) return;
  imax = std::max(imax, sin_fam_.imax);
  nmax = std::max(nmax, sin_fam_.nmax);
  kneed = std::max({kneed, sin_fam_.kvalid, 0});
  for (int margin = 2;; margin *= 2) {
    int kgen = kneed + margin;
    ensure_phi_family(std::min(kgen, 2 * nmax + 1), nmax, kgen);
    sin_base(nmax, kgen);
    Family fam = build_family(sin_base_, imax, nmax, kgen);
    if (fam.kvalid >= kneed) {
      sin_fam_ = std::move(fam);
      return;
    }
    if (margin > 64) throw std::logic_error("sin power family validity did not stabilize");
  }
}

Rational CoeffGenerator::dphi_pow(int n, int k, int l, int i) {
  if (i == 0) return n == 0 && k == 0 && l == 0 ? Rational(1) : Rational(0);
  if (n < 0 || k < 0 || l < 0) return Rational(0);
  if (i > phi_fam_.imax || n > phi_fam_.nmax) throw std::logic_error("phi power family not built to order");
  const VPoly& cell = phi_fam_.b[i][n];
  if (k > cell.kvalid) throw std::logic_error("phi power family not exact to order");
  return cell.p.get(k, l);
}

Rational CoeffGenerator::dsin_pow(int n, int k, int l, int j) {
  if (j == 0) return n == 0 && k == 0 && l == 0 ? Rational(1) : Rational(0);
  if (n < 0 || k < 0 || l < 0) return Rational(0);
  if (j > sin_fam_.imax || n > sin_fam_.nmax) throw std::logic_error("sin power family not built to order");
  const VPoly& cell = sin_fam_.b[j][n];
  if (k > cell.kvalid) throw std::logic_error("sin power family not exact to order");
  return cell.p.get(k, l);
}

Rational CoeffGenerator::d_sin_cell(int n, int k, int l) {
  ensure_phi_family(std::min(k, 2 * n + 1), n, k);
  Rational tot(0);
  for (int i = 1; i <= std::min(k, 2 * n + 1); ++i) {
    int fi = i / 2;
    int ci = (i + 1) / 2;
    for (int j = std::max(0, ci - l + n); j <= std::min(ci, n - fi); ++j) {
      Rational term = ibinom(ci, j) / fact(i);
      if ((fi + j) % 2) term = -term;
      tot += term * dphi_pow(n - fi - j, k, l, i);
    }
  }
  return tot;
}

Rational CoeffGenerator::d_cos_cell(int n, int k, int l) {
  ensure_phi_family(std::min(k, 2 * n + 1), n, k);
  Rational tot(0);
  for (int i = 1; i <= std::min(k, 2 * n + 1); ++i) {
    int fi = i / 2;
    int ci = (i + 1) / 2;
    for (int j = std::max(0, fi - l + n); j <= std::min(fi, n - ci); ++j) {
      Rational term = ibinom(fi, j) / fact(i);
      if ((ci + j) % 2) term = -term;
      tot += term * dphi_pow(n - ci - j, k, l, i);
    }
  }
  return tot;
}

Rational CoeffGenerator::d_cosdiff_cell(int n, int k, int l) {
  ensure_phi_family(2 * std::min(n, k / 2), n, k);
  Rational tot(0);
  for (int i = 1; i <= std::min(n, k / 2); ++i)
    for (int j = 0; j <= std::min(i, n - i); ++j) {
      Rational term = ibinom(i, j) / fact(2 * i);
      if ((i + j) % 2) term = -term;
      tot += term * dphi_pow(n - i - j, k, l, 2 * i);
    }
  return tot;
}

Rational CoeffGenerator::d_N_cell(int n, int k, int l) {
  if (k >= 1) ensure_sin_family(std::min(2 * std::min(n, l), k), n - 1, k);
  Rational tot(0);
  for (int i = 1; i <= std::min(n, l); ++i) {
    Rational outer = gen_binom(Rational(1, 2), i);
    if (i % 2) outer = -outer;
    for (int j = 0; j <= std::min(2 * i, k); ++j) tot += outer * ibinom(2 * i, j) * dsin_pow(n - i, k, l - i, j);
  }
  return tot;
}

Rational CoeffGenerator::d_sin(int n, int k, int l) {
  if (!in_window(Quantity::sin, Form::sinpow, n, k, l)) window_error("d_sin", n, k, l);
  return d_sin_cell(n, k, l);
}

Rational CoeffGenerator::d_cos(int n, int k, int l) {
  if (!in_window(Quantity::cos, Form::sinpow, n, k, l)) window_error("d_cos", n, k, l);
  return d_cos_cell(n, k, l);
}

Rational CoeffGenerator::d_cosdiff(int n, int k, int l) {
  if (n < 1 || k < 2 || l < std::max(n, k) || l > n - 1 + k) window_error("d_cosdiff", n, k, l);
  return d_cosdiff_cell(n, k, l);
}

Rational CoeffGenerator::d_N(int n, int k, int l) {
  if (n < 1 || k < 0 || l < std::max(n, k + 1) || l > n + k) window_error("d_N", n, k, l);
  return d_N_cell(n, k, l);
}

Rational CoeffGenerator::d_h(int n, int k, int l) {
  if (!in_window(Quantity::h, Form::sinpow, n, k, l)) window_error("d_h", n, k, l);
  Rational r = -d_N_cell(n, k, l);
  if (k >= 1) r += d_cosdiff_cell(n, k + 1, l);
  return r;
}

Rational CoeffGenerator::c_h(int n, int k, int l) {
  if (!in_window(Quantity::h, Form::fourier, n, k, l)) window_error("c_h", n, k, l);
  Rational tot(0);
  for (int i = std::max(n, l - k); i <= l; ++i) {
    if (!in_window(Quantity::h, Form::sinpow, i, k, l)) continue;
    tot += d_h(i, k, l) * cos_multiple_weight(n, i);
  }
  return tot;
}

Rational CoeffGenerator::c_sin(int n, int k, int l) {
  if (!in_window(Quantity::sin, Form::fourier, n, k, l)) window_error("c_sin", n, k, l);
  Rational tot(0);
  for (int i = std::max(n, l - k); i <= l; ++i) {
    if (!in_window(Quantity::sin, Form::sinpow, i, k, l)) continue;
    tot += d_sin(i, k, l) * cos_multiple_weight(n, i);
  }
  return tot;
}

Rational CoeffGenerator::c_cos(int n, int k, int l) {
  if (!in_window(Quantity::cos, Form::fourier, n, k, l)) window_error("c_cos", n, k, l);
  Rational tot(0);
  for (int i = std::max(n, l - k + 1); i <= l; ++i) {
    if (!in_window(Quantity::cos, Form::sinpow, i, k, l)) continue;
    tot += d_cos(i, k, l) * cos_multiple_weight(n, i);
  }
  return tot;
}

PowerCoeffFamily CoeffGenerator::phi_diff_powers(int power, Bounds bounds) {
  if (power < 1) throw std::domain_error("phi_diff_powers: power must be >= 1");
  if (bounds.n < 0 || bounds.k < 0 || bounds.l < 0) throw std::domain_error("phi_diff_powers: negative bounds");
  ensure_phi_family(power, bounds.n, bounds.k);
  PowerCoeffFamily fam;
  fam.base = PowerCoeffFamily::Base::phi_diff;
  fam.power = power;
  for (int n = 0; n <= bounds.n; ++n)
    for (const auto& [kl, c] : phi_fam_.b[power][n].p.terms())
      if (kl.first <= bounds.k && kl.second <= bounds.l) fam.entries.emplace(std::tuple{n, kl.first, kl.second}, c);
  return fam;
}

PowerCoeffFamily CoeffGenerator::sin_ratio_powers(int power, Bounds bounds) {
  if (power < 1) throw std::domain_error("sin_ratio_powers: power must be >= 1");
  if (bounds.n < 0 || bounds.k < 0 || bounds.l < 0) throw std::domain_error("sin_ratio_powers: negative bounds");
  ensure_sin_family(power, bounds.n, bounds.k);
  PowerCoeffFamily fam;
  fam.base = PowerCoeffFamily::Base::sin_ratio;
  fam.power = power;
  for (int n = 0; n <= bounds.n; ++n)
    for (const auto& [kl, c] : sin_fam_.b[power][n].p.terms())
      if (kl.first <= bounds.k && kl.second <= bounds.l) fam.entries.emplace(std::tuple{n, kl.first, kl.second}, c);
  return fam;
}

CoeffTensor CoeffGenerator::tensor(Quantity q, Form f, Bounds bounds) {
  if (bounds.n < 0 || bounds.k < 0 || bounds.l < 0) throw std::domain_error("tensor: negative bounds");
  CoeffTensor t(q, f, bounds);

  // Build the power families once at the envelope of every cell request below.
  int ncap = f == Form::sinpow ? bounds.n : bounds.l;  // Fourier cells sum sin powers up to l
  if (q == Quantity::sin || q == Quantity::cos) {
    if (bounds.k >= 1) ensure_phi_family(std::min(bounds.k, 2 * ncap + 1), ncap, bounds.k);
  } else if (q == Quantity::h) {
    if (ncap >= 1) ensure_phi_family(std::min(2 * ncap, bounds.k + 1), ncap, bounds.k + 1);
    if (ncap >= 1 && bounds.k >= 1) ensure_sin_family(std::min(2 * ncap, bounds.k), ncap - 1, bounds.k);
  }

  if (f == Form::sinpow) {
    auto cell = [&](int n, int k, int l) {
      switch (q) {
        case Quantity::phi: return gen_d_phi(n, k, l);
        case Quantity::h: return d_h(n, k, l);
        case Quantity::sin: return d_sin(n, k, l);
        case Quantity::cos: return d_cos(n, k, l);
      }
      throw std::logic_error("unreachable");
    };
    for (int n = window_nmin(q, f); n <= bounds.n; ++n)
      for (int k = window_kmin(q, f); k <= bounds.k; ++k) {
        int hi = std::min(window_lmax(q, f, n, k), bounds.l);
        for (int l = window_lmin(q, f, n, k); l <= hi; ++l) t.set(n, k, l, cell(n, k, l));
      }
  } else {
    auto cell = [&](int n, int k, int l) {
      switch (q) {
        case Quantity::phi: return gen_c_phi(n, k, l);
        case Quantity::h: return c_h(n, k, l);
        case Quantity::sin: return c_sin(n, k, l);
        case Quantity::cos: return c_cos(n, k, l);
      }
      throw std::logic_error("unreachable");
    };
    for (int n = window_nmin(q, f); n <= bounds.n; ++n)
      for (int k = window_kmin(q, f); k <= bounds.k; ++k)
        for (int l = window_lmin(q, f, n, k); l <= bounds.l; ++l) t.set(n, k, l, cell(n, k, l));
  }
  return t;
}

CoeffTensor CoeffGenerator::sinpow_to_fourier(const CoeffTensor& src, int n_min, int k_floor_shift, int upper_shift,
                                              Bounds bounds) {
  if (src.form() != Form::sinpow) throw std::invalid_argument("conversion source must be a sin-power tensor");
  if (src.quantity() == Quantity::phi)
    throw std::invalid_argument("conversion collects cosine multiples; the angle series is a sine-multiple form");
  if (src.bounds().n < bounds.l || src.bounds().k < bounds.k || src.bounds().l < bounds.l)
    throw std::invalid_argument("conversion source does not cover the requested bounds (needs n up to target l)");
  CoeffTensor out(src.quantity(), Form::fourier, bounds);
  for (int n = 0; n <= bounds.n; ++n)
    for (int k = 0; k <= bounds.k; ++k)
      for (int l = std::max(0, k + k_floor_shift); l <= bounds.l; ++l) {
        if (!in_window(src.quantity(), Form::fourier, n, k, l)) continue;
        Rational tot(0);
        for (int i = std::max({n, n_min, l - k - upper_shift}); i <= l; ++i) {
          if (!src.contains_index(i, k, l)) continue;
          tot += src.get(i, k, l) * cos_multiple_weight(n, i);
        }
        out.set(n, k, l, tot);
      }
  return out;
}

}  // namespace p2e
