#include "p2e/series_eval.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace p2e {
namespace {

void check_truncation(const DenseTensor& t, const Truncation& tr) {
  if (tr.n < 0 || tr.n > t.bounds().n || tr.k < 0 || tr.k > t.bounds().k || tr.l < 1 || tr.l > t.bounds().l)
    throw std::domain_error("truncation outside tensor bounds");
}

// cos and sin Taylor coefficients over x = delta^2, orders through delta^12.
constexpr double kCosCoef[] = {1.0,           -1.0 / 2,        1.0 / 24,
                               -1.0 / 720,    1.0 / 40320,     -1.0 / 3628800,
                               1.0 / 479001600};
constexpr double kSincCoef[] = {1.0,         -1.0 / 6,       1.0 / 120,
                                -1.0 / 5040, 1.0 / 362880,   -1.0 / 39916800};

}  // namespace

PolarPoint to_polar(const QueryPoint& pt, const EllipseParams& ell) {
  if (!(ell.a > 0.0)) throw std::domain_error("semi-major axis must be positive");
  if (!(ell.e2 >= 0.0 && ell.e2 < 1.0)) throw std::domain_error("eccentricity squared must lie in [0, 1)");
  double au = std::fabs(pt.u);
  double av = std::fabs(pt.v);
  double rho = std::hypot(au, av);
  if (rho == 0.0) throw std::domain_error("the origin has no normal direction");
  PolarPoint pp;
  pp.psi = std::atan2(av, au);
  pp.rho = rho;
  pp.varrho = ell.a / rho;
  double sp = av / rho;
  pp.s = sp * sp;
  pp.sign_u = pt.u < 0.0 ? -1 : 1;
  pp.sign_v = pt.v < 0.0 ? -1 : 1;
  return pp;
}

DenseTensor::DenseTensor(const CoeffTensor& t)
    : quantity_(t.quantity()),
      form_(t.form()),
      bounds_(t.bounds()),
      kmin_(window_kmin(t.quantity(), t.form())),
      c_(static_cast<std::size_t>(bounds_.n + 1) * (bounds_.k + 1) * (bounds_.l + 1), 0.0) {
  for (const auto& [key, val] : t.entries()) {
    auto [n, k, l] = key;
    c_[(static_cast<std::size_t>(n) * (bounds_.k + 1) + k) * (bounds_.l + 1) + l] = val.to_double();
  }
}

double eval_sinpow(const DenseTensor& t, double s, double varrho, double e2, Truncation tr, OpCount* oc) {
  check_truncation(t, tr);
  OpCount c;
  double outer = 0.0;
  for (int n = tr.n; n >= 0; --n) {
    double kacc = 0.0;
    for (int k = tr.k; k >= 0; --k) {
      double lacc = t.at(n, k, tr.l);
      for (int l = tr.l - 1; l >= 1; --l) {
        lacc = lacc * e2 + t.at(n, k, l);
        ++c.muls;
        ++c.adds;
      }
      if (k == tr.k) {
        kacc = lacc;
      } else {
        kacc = kacc * varrho + lacc;
        ++c.muls;
        ++c.adds;
      }
    }
    if (n == tr.n) {
      outer = kacc;
    } else {
      outer = outer * s + kacc;
      ++c.muls;
      ++c.adds;
    }
  }
  outer *= e2;
  ++c.muls;
  if (oc) *oc = c;
  return outer;
}

double eval_fourier(const DenseTensor& t, double psi, double varrho, double e2, Truncation tr, OpCount* oc) {
  check_truncation(t, tr);
  OpCount c;
  double sp = std::sin(psi);
  double cp = std::cos(psi);
  c.trig += 2;
  double s2 = 2.0 * sp * cp;
  double c2 = 1.0 - 2.0 * (sp * sp);
  c.muls += 4;
  ++c.adds;
  bool sine_multiples = t.quantity() == Quantity::phi;
  double wc = 1.0, ws = 0.0;  // cos(2n psi), sin(2n psi) at n = 0
  double total = 0.0;
  for (int n = 0; n <= tr.n; ++n) {
    if (n > 0) {
      double nc = wc * c2 - ws * s2;
      double ns = ws * c2 + wc * s2;
      wc = nc;
      ws = ns;
      c.muls += 4;
      c.adds += 2;
    }
    double kacc = 0.0;
    for (int k = tr.k; k >= 0; --k) {
      double lacc = t.at(n, k, tr.l);
      for (int l = tr.l - 1; l >= 1; --l) {
        lacc = lacc * e2 + t.at(n, k, l);
        ++c.muls;
        ++c.adds;
      }
      if (k == tr.k) {
        kacc = lacc;
      } else {
        kacc = kacc * varrho + lacc;
        ++c.muls;
        ++c.adds;
      }
    }
    total += (sine_multiples ? ws : wc) * kacc;
    ++c.muls;
    ++c.adds;
  }
  total *= e2;
  ++c.muls;
  if (oc) *oc = c;
  return total;
}

OpCount sinpow_op_count(Truncation tr) {
  std::int64_t nc = tr.n + 1;
  std::int64_t kc = tr.k + 1;
  std::int64_t lc = tr.l;
  OpCount c;
  std::int64_t horner = nc * kc * (lc - 1) + nc * (kc - 1) + (nc - 1);
  c.muls = horner + 1;
  c.adds = horner;
  return c;
}

OpCount fourier_op_count(Truncation tr) {
  std::int64_t nc = tr.n + 1;
  std::int64_t kc = tr.k + 1;
  std::int64_t lc = tr.l;
  OpCount c;
  std::int64_t inner = nc * kc * (lc - 1) + nc * (kc - 1);
  c.muls = 4 + inner + 4 * (nc - 1) + nc + 1;
  c.adds = 1 + inner + 2 * (nc - 1) + nc;
  c.trig = 2;
  return c;
}

ConvergenceDiag convergence_diag(const std::vector<double>& partial_sums, double tol) {
  if (partial_sums.size() < 3) throw std::invalid_argument("convergence diagnostic needs at least three partial sums");
  std::size_t m = partial_sums.size();
  double last = partial_sums[m - 1] - partial_sums[m - 2];
  double prev = partial_sums[m - 2] - partial_sums[m - 3];
  double ratio;
  if (last == 0.0)
    ratio = 0.0;
  else if (prev == 0.0)
    ratio = std::numeric_limits<double>::infinity();
  else
    ratio = std::fabs(last) / std::fabs(prev);
  return {ratio, ratio < 1.0 && std::fabs(last) < tol};
}

double Evaluator::phi_folded(const PolarPoint& pp, double e2, Truncation tr, Form form) const {
  if (form == Form::sinpow) {
    double series = eval_sinpow(t_.phi_sinpow, pp.s, pp.varrho, e2, tr);
    return pp.psi + std::cos(pp.psi) * std::sin(pp.psi) * series;
  }
  return pp.psi + eval_fourier(t_.phi_fourier, pp.psi, pp.varrho, e2, tr);
}

double Evaluator::eval_phi(const QueryPoint& pt, const EllipseParams& ell, Truncation tr, Form form) const {
  PolarPoint pp = to_polar(pt, ell);
  double folded = phi_folded(pp, ell.e2, tr, form);
  double mag = pp.sign_u > 0 ? folded : std::numbers::pi - folded;
  return pp.sign_v > 0 ? mag : -mag;
}

double Evaluator::eval_h(const QueryPoint& pt, const EllipseParams& ell, Truncation tr, Form form) const {
  PolarPoint pp = to_polar(pt, ell);
  double series = form == Form::sinpow ? eval_sinpow(t_.h_sinpow, pp.s, pp.varrho, ell.e2, tr)
                                       : eval_fourier(t_.h_fourier, pp.psi, pp.varrho, ell.e2, tr);
  return ell.a * series + pp.rho - ell.a;
}

std::pair<double, double> Evaluator::eval_sincos_joint(const QueryPoint& pt, const EllipseParams& ell,
                                                       Truncation tr) const {
  PolarPoint pp = to_polar(pt, ell);
  double sp = std::sin(pp.psi);
  double cp = std::cos(pp.psi);
  double delta = cp * sp * eval_sinpow(t_.phi_sinpow, pp.s, pp.varrho, ell.e2, tr);
  double x = delta * delta;
  double even = kCosCoef[6];
  for (int m = 5; m >= 0; --m) even = even * x + kCosCoef[m];
  double odd = kSincCoef[5];
  for (int m = 4; m >= 0; --m) odd = odd * x + kSincCoef[m];
  odd *= delta;
  double sin_phi = sp * even + cp * odd;
  double cos_phi = cp * even - sp * odd;
  return {pp.sign_v * sin_phi, pp.sign_u * cos_phi};
}

EvalResult Evaluator::project(const QueryPoint& pt, const EllipseParams& ell, Truncation tr, Form form) const {
  PolarPoint pp = to_polar(pt, ell);
  EvalResult r;
  double cp = std::cos(pp.psi);
  r.guard_ratio = cp == 0.0 ? std::numeric_limits<double>::infinity() : pp.varrho * ell.e2 / cp;
  r.converged_hint = r.guard_ratio < guard_threshold_;
  r.phi = eval_phi(pt, ell, tr, form);
  r.h = eval_h(pt, ell, tr, form);
  if (form == Form::sinpow) {
    auto [sf, cf] = eval_sincos_joint(pt, ell, tr);
    r.sin_phi = sf;
    r.cos_phi = cf;
  } else {
    double ssin = eval_fourier(t_.sin_fourier, pp.psi, pp.varrho, ell.e2, tr);
    double scos = eval_fourier(t_.cos_fourier, pp.psi, pp.varrho, ell.e2, tr);
    r.sin_phi = pp.sign_v * std::sin(pp.psi) * (1.0 + ssin);
    r.cos_phi = pp.sign_u * cp * (1.0 + scos);
  }
  return r;
}

}  // namespace p2e
