#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "p2e/coeff_tensor.hpp"

namespace p2e {

struct EllipseParams {
  double a;   // semi-major axis, > 0
  double e2;  // eccentricity squared, in [0, 1)
};

struct QueryPoint {
  double u;
  double v;
};

/// Truncation orders for evaluation; must fit inside the tensor bounds.
struct Truncation {
  int n;
  int k;
  int l;
};

/// First-quadrant polar view of a query point, with the original signs kept
/// for quadrant restoration.
struct PolarPoint {
  double psi;     // folded angle in [0, pi/2]
  double rho;     // distance from origin
  double varrho;  // a / rho
  double s;       // sin^2(psi)
  int sign_u;     // +1 or -1
  int sign_v;     // +1 or -1
};

struct EvalResult {
  double phi;
  double h;
  double sin_phi;
  double cos_phi;
  double guard_ratio;   // varrho * e2 / |cos psi|; diagnostic only
  bool converged_hint;  // guard_ratio below threshold
};

struct OpCount {
  std::int64_t adds = 0;
  std::int64_t muls = 0;
  std::int64_t trig = 0;
};

/// Folds (u,v) into the first quadrant and returns its polar view.
/// Throws std::domain_error for the origin.
PolarPoint to_polar(const QueryPoint& pt, const EllipseParams& ell);

/// Flat double view of an exact tensor, laid out [n][k][l] for Horner
/// evaluation. Built once; evaluation never mutates it.
class DenseTensor {
 public:
  explicit DenseTensor(const CoeffTensor& t);

  Quantity quantity() const { return quantity_; }
  Form form() const { return form_; }
  const Bounds& bounds() const { return bounds_; }
  int kmin() const { return kmin_; }

  double at(int n, int k, int l) const { return c_[(static_cast<std::size_t>(n) * (bounds_.k + 1) + k) * (bounds_.l + 1) + l]; }

 private:
  Quantity quantity_;
  Form form_;
  Bounds bounds_;
  int kmin_;
  std::vector<double> c_;
};

/// Sin-power evaluation sum_{n<=N} (sum_{k<=K} (sum_{l<=L} d e2^l) vr^k) s^n,
/// Horner innermost in e2 (l = L..1), then vr (k = K..0), then s. The common
/// e2 factor of all windows (l >= 1) is applied once at the end.
/// Exact operation tally (also returned via `oc`): see sinpow_op_count.
double eval_sinpow(const DenseTensor& t, double s, double varrho, double e2, Truncation tr, OpCount* oc = nullptr);

/// Fourier evaluation sum_{n<=N} (inner Horner as above) * trig(2n psi), with
/// sin(2n psi)/cos(2n psi) generated by the double-angle recurrence.
double eval_fourier(const DenseTensor& t, double psi, double varrho, double e2, Truncation tr, OpCount* oc = nullptr);

/// Analytic operation counts for the two evaluation shapes; eval_sinpow and
/// eval_fourier report exactly these numbers.
OpCount sinpow_op_count(Truncation tr);
OpCount fourier_op_count(Truncation tr);

struct ConvergenceDiag {
  double ratio_estimate;
  bool converged_hint;
};

/// Tail-ratio estimate from successive partial-sum increments: the ratio of
/// the last increment to the one before. Converged iff the ratio is < 1 and
/// the last increment is below `tol`. Needs >= 3 partial sums.
ConvergenceDiag convergence_diag(const std::vector<double>& partial_sums, double tol = 1e-15);

/// Evaluates the projection quantities from a fixed tensor set.
class Evaluator {
 public:
  /// Tensors in the order phi, h, sin, cos; sinpow and fourier forms of each.
  struct TensorSet {
    DenseTensor phi_sinpow, h_sinpow, sin_sinpow, cos_sinpow;
    DenseTensor phi_fourier, h_fourier, sin_fourier, cos_fourier;
  };

  explicit Evaluator(TensorSet tensors, double guard_threshold = 0.5)
      : t_(std::move(tensors)), guard_threshold_(guard_threshold) {}

  const TensorSet& tensors() const { return t_; }

  /// Normal angle, quadrant restored. Odd in psi.
  double eval_phi(const QueryPoint& pt, const EllipseParams& ell, Truncation tr, Form form) const;

  /// Signed normal distance to the ellipse. Even in psi.
  double eval_h(const QueryPoint& pt, const EllipseParams& ell, Truncation tr, Form form) const;

  /// sin(phi), cos(phi) from the shared even/odd Taylor split around psi,
  /// reusing the sin-power phi evaluation; quadrant restored.
  std::pair<double, double> eval_sincos_joint(const QueryPoint& pt, const EllipseParams& ell, Truncation tr) const;

  /// Everything at once with the guard diagnostic.
  EvalResult project(const QueryPoint& pt, const EllipseParams& ell, Truncation tr, Form form) const;

  double guard_threshold() const { return guard_threshold_; }

 private:
  double phi_folded(const PolarPoint& pp, double e2, Truncation tr, Form form) const;

  TensorSet t_;
  double guard_threshold_;
};

}  // namespace p2e
