#pragma once

#include <utility>

#include "p2e/series_eval.hpp"

namespace p2e {

/// Reference solution from the base geometric equations. Deliberately
/// independent of the series machinery: nothing here touches coefficient
/// generation or series evaluation.
struct OracleResult {
  double phi_star;  // normal angle, quadrant restored
  double h_star;    // normal distance
  int iterations;
  double residual;  // |F(phi_star)| of the folded root equation
};

/// Safeguarded Newton solve of tan(phi) = tan(psi) + (vr e2 / cos psi) *
/// sin(phi) (1 - e2 sin^2 phi)^(-1/2) on the folded first quadrant, bracket
/// [psi, pi/2). Stops at |F| <= tol, or once the safeguard bracket collapses
/// to machine width (the root is then pinned to adjacent doubles and the
/// achieved residual is reported). Points on the minor axis are handled
/// directly; points inside the ellipse evolute (multiple normals) are
/// rejected with std::domain_error, as is the origin. Non-convergence within
/// the iteration cap throws std::runtime_error.
OracleResult solve_phi(const QueryPoint& pt, const EllipseParams& ell, double tol = 1e-14);

/// h = rho cos(phi - psi) - a (1 - e2 sin^2 phi)^(1/2), by direct formula.
double h_from_phi(const QueryPoint& pt, const EllipseParams& ell, double phi_star);

/// Normalized residuals of the base equations:
///   ( (rho cos psi - (N+h) cos phi)/rho, (rho sin psi - ((1-e2)N+h) sin phi)/rho )
/// with N = a (1 - e2 sin^2 phi)^(-1/2).
std::pair<double, double> residual_pair(const QueryPoint& pt, const EllipseParams& ell, double phi, double h);

/// True when the point lies strictly inside the ellipse evolute, where the
/// normal foot is not unique.
bool inside_evolute(const QueryPoint& pt, const EllipseParams& ell);

}  // namespace p2e
