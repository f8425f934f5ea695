#include "p2e/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace p2e {
namespace {

double cuberoot_sq(double x) { return std::cbrt(x * x); }  // x^(2/3) for x >= 0

}  // namespace

bool inside_evolute(const QueryPoint& pt, const EllipseParams& ell) {
  if (!(ell.a > 0.0)) throw std::domain_error("semi-major axis must be positive");
  if (!(ell.e2 >= 0.0 && ell.e2 < 1.0)) throw std::domain_error("eccentricity squared must lie in [0, 1)");
  double b = ell.a * std::sqrt(1.0 - ell.e2);
  double focal2 = ell.a * ell.a - b * b;
  return cuberoot_sq(ell.a * std::fabs(pt.u)) + cuberoot_sq(b * std::fabs(pt.v)) < cuberoot_sq(focal2);
}

OracleResult solve_phi(const QueryPoint& pt, const EllipseParams& ell, double tol) {
  PolarPoint pp = to_polar(pt, ell);
  if (inside_evolute(pt, ell)) throw std::domain_error("point inside the evolute: normal foot is not unique");
  constexpr double half_pi = std::numbers::pi / 2;

  if (pt.u == 0.0) {
    double b = ell.a * std::sqrt(1.0 - ell.e2);
    return {pp.sign_v * half_pi, std::fabs(pt.v) - b, 0, 0.0};
  }

  double e2 = ell.e2;
  double tp = std::tan(pp.psi);
  double g = pp.varrho * e2 / std::cos(pp.psi);
  auto F = [&](double phi) {
    double sf = std::sin(phi);
    return std::tan(phi) - tp - g * sf / std::sqrt(1.0 - e2 * sf * sf);
  };
  auto dF = [&](double phi) {
    double sf = std::sin(phi);
    double cf = std::cos(phi);
    double w = 1.0 - e2 * sf * sf;
    return 1.0 / (cf * cf) - g * cf / (w * std::sqrt(w));
  };

  // Bracket: F(psi) <= 0 and F -> +inf toward pi/2.
  double lo = pp.psi;
  double hi = 0.5 * (pp.psi + half_pi);
  int probes = 0;
  while (F(hi) <= 0.0) {
    hi = 0.5 * (hi + half_pi);
    if (++probes > 200) throw std::runtime_error("failed to bracket the normal angle");
  }

  double x = pp.psi;
  double f = F(x);
  int iters = 0;
  while (std::fabs(f) > tol) {
    if (f > 0.0)
      hi = x;
    else
      lo = x;
    // Root pinned to adjacent doubles: |F| cannot shrink further, accept.
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    if (++iters > 100) throw std::runtime_error("normal angle iteration did not converge");
    double fp = dF(x);
    double xn = fp != 0.0 ? x - f / fp : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    x = xn;
    f = F(x);
  }

  double mag = pp.sign_u > 0 ? x : std::numbers::pi - x;
  return {pp.sign_v * mag, h_from_phi(pt, ell, pp.sign_v * mag), iters, std::fabs(f)};
}

double h_from_phi(const QueryPoint& pt, const EllipseParams& ell, double phi_star) {
  PolarPoint pp = to_polar(pt, ell);
  double sf = std::sin(phi_star);
  double cf = std::cos(phi_star);
  double phi_folded = std::atan2(std::fabs(sf), std::fabs(cf));
  return pp.rho * std::cos(phi_folded - pp.psi) - ell.a * std::sqrt(1.0 - ell.e2 * sf * sf);
}

std::pair<double, double> residual_pair(const QueryPoint& pt, const EllipseParams& ell, double phi, double h) {
  PolarPoint pp = to_polar(pt, ell);
  double sf = std::sin(phi);
  double cf = std::cos(phi);
  double N = ell.a / std::sqrt(1.0 - ell.e2 * sf * sf);
  double r1 = (pt.u - (N + h) * cf) / pp.rho;
  double r2 = (pt.v - ((1.0 - ell.e2) * N + h) * sf) / pp.rho;
  return {r1, r2};
}

}  // namespace p2e
