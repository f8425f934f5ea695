#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "p2e/bipoly.hpp"
#include "p2e/coeff_tensor.hpp"
#include "p2e/rational.hpp"

namespace p2e {

/// Coefficients of the i-th power of one of the two base series:
///   phi_diff:  ((phi-psi)/(cos psi sin psi))^i collected at sin^2n(psi)
///   sin_ratio: (sin phi / sin psi - 1)^i collected at sin^2n(psi)
/// Windows: k >= power and, per base, max(n+power,k) <= l <= n+k (phi_diff)
/// or max(n,k) <= l <= n+k (sin_ratio).
struct PowerCoeffFamily {
  enum class Base { phi_diff, sin_ratio };

  Base base;
  int power;
  std::map<std::tuple<int, int, int>, Rational> entries;  // (n,k,l), nonzero only

  Rational get(int n, int k, int l) const {
    auto it = entries.find({n, k, l});
    return it == entries.end() ? Rational(0) : it->second;
  }
};

/// Generates every coefficient family exactly. Power families are computed by
/// the ordinary-potential-polynomial recurrence with exact formal power series
/// division in rho (validity-tracked), falling back to the multinomial +
/// partial-ordinary-Bell expansion when a division step is not exact. All
/// internal caches grow on demand; generation is single-threaded by design,
/// results are immutable once returned.
class CoeffGenerator {
 public:
  /// Route for power-family computation; the multinomial route exists as an
  /// always-exact fallback and as an independent path for tests.
  enum class FamilyRoute { recurrence_then_bell, bell_only };

  explicit CoeffGenerator(FamilyRoute route = FamilyRoute::recurrence_then_bell) : route_(route) {}

  // Per-cell coefficients; each validates its structural window and throws
  // std::domain_error outside it.
  Rational d_sin(int n, int k, int l);      // sin(phi)/sin(psi) - 1, sin-power
  Rational d_cos(int n, int k, int l);      // cos(phi)/cos(psi) - 1, sin-power
  Rational d_cosdiff(int n, int k, int l);  // cos(phi-psi) - 1, sin-power
  Rational d_N(int n, int k, int l);        // (1 - e2 sin^2 phi)^(1/2) - 1
  Rational d_h(int n, int k, int l);        // (h + a - rho)/a, sin-power

  // Fourier coefficients by the per-quantity printed summation windows
  // (independent of the generic converter below).
  Rational c_h(int n, int k, int l);
  Rational c_sin(int n, int k, int l);
  Rational c_cos(int n, int k, int l);

  /// d^phi power family, all in-bounds indices. power >= 1.
  PowerCoeffFamily phi_diff_powers(int power, Bounds bounds);
  /// d^sin power family, all in-bounds indices. power >= 1.
  PowerCoeffFamily sin_ratio_powers(int power, Bounds bounds);

  /// Fills a complete tensor. Fourier tensors use the direct per-quantity
  /// summation windows (c_h/c_sin/c_cos/the phi closed form), so the generic
  /// conversion below stays an independent route.
  CoeffTensor tensor(Quantity q, Form f, Bounds bounds);

  /// Generic conversion of a sin-power tensor to the cos(2n psi) Fourier
  /// tensor: c[n,k,l] = sum_i d[i,k,l] * 2^(1-2i-delta(n)) * (-1)^n *
  /// binom(2i, i-n), i running from max(max(n, n_min), l-k-upper_shift) to l.
  /// n_min is the source's lowest sin-power index, k_floor_shift the k-offset
  /// of its lower l limit (l >= k + k_floor_shift), upper_shift the k-offset
  /// of its upper l limit (l <= n + k + upper_shift). The source must cover
  /// n up to bounds.l.
  static CoeffTensor sinpow_to_fourier(const CoeffTensor& src, int n_min, int k_floor_shift, int upper_shift,
                                       Bounds bounds);

  /// Number of power families that fell back to the multinomial route.
  int fallback_count() const { return fallback_count_; }

 private:
  // BiPoly whose rho-coefficients are exact up to and including rho^kvalid.
  struct VPoly {
    BiPoly p;
    int kvalid = 0;
  };

  struct Family {  // all powers 0..imax of one base series, indexed [i][n]
    std::vector<std::vector<VPoly>> b;
    int imax = -1, nmax = -1, kvalid = -1;
  };

  const BiPoly& phi_base(int n, int kgen);
  const BiPoly& sin_base(int n, int kgen);
  void ensure_phi_family(int imax, int nmax, int kneed);
  void ensure_sin_family(int imax, int nmax, int kneed);
  Family build_family(const std::vector<BiPoly>& base, int imax, int nmax, int kgen);

  Rational dphi_pow(int n, int k, int l, int i);  // phi_diff family lookup, 0 outside
  Rational dsin_pow(int n, int k, int l, int j);  // sin_ratio family lookup, 0 outside

  Rational d_sin_cell(int n, int k, int l);
  Rational d_cos_cell(int n, int k, int l);
  Rational d_cosdiff_cell(int n, int k, int l);
  Rational d_N_cell(int n, int k, int l);

  FamilyRoute route_;
  int fallback_count_ = 0;
  std::vector<BiPoly> phi_base_, sin_base_;
  int phi_base_kgen_ = -1, sin_base_kgen_ = -1;
  Family phi_fam_, sin_fam_;
};

}  // namespace p2e
