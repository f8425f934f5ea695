#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "p2e/coeff_generator.hpp"
#include "p2e/oracle.hpp"
#include "p2e/series_eval.hpp"

using p2e::Bounds;
using p2e::CoeffGenerator;
using p2e::CoeffTensor;
using p2e::DenseTensor;
using p2e::EllipseParams;
using p2e::Evaluator;
using p2e::Form;
using p2e::Quantity;
using p2e::QueryPoint;
using p2e::Rational;
using p2e::Truncation;

namespace {

// One shared evaluator at full depth; generation is the expensive part, so it
// runs once for the whole binary.
const Evaluator& deep_eval() {
  static const Evaluator ev = [] {
    CoeffGenerator gen;
    Bounds b{8, 8, 9};
    auto dense = [&](Quantity q, Form f) { return DenseTensor(gen.tensor(q, f, b)); };
    return Evaluator(Evaluator::TensorSet{dense(Quantity::phi, Form::sinpow), dense(Quantity::h, Form::sinpow),
                                          dense(Quantity::sin, Form::sinpow), dense(Quantity::cos, Form::sinpow),
                                          dense(Quantity::phi, Form::fourier), dense(Quantity::h, Form::fourier),
                                          dense(Quantity::sin, Form::fourier), dense(Quantity::cos, Form::fourier)});
  }();
  return ev;
}

bool close_ulp(double a, double b, int ulps) {
  double diff = std::fabs(a - b);
  double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  return diff <= ulps * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

TEST_CASE("polar folding") {
  EllipseParams ell{1.0, 0.1};
  p2e::PolarPoint pp = p2e::to_polar({3.0, 4.0}, ell);
  CHECK(pp.rho == 5.0);
  CHECK(pp.varrho == 0.2);
  CHECK(pp.psi == doctest::Approx(std::atan2(4.0, 3.0)).epsilon(1e-15));
  CHECK(pp.s == doctest::Approx(0.64).epsilon(1e-15));
  CHECK(pp.sign_u == 1);
  CHECK(pp.sign_v == 1);

  p2e::PolarPoint mm = p2e::to_polar({-3.0, -4.0}, ell);
  CHECK(mm.psi == pp.psi);
  CHECK(mm.sign_u == -1);
  CHECK(mm.sign_v == -1);

  p2e::PolarPoint axis = p2e::to_polar({2.0, 0.0}, ell);
  CHECK(axis.psi == 0.0);
  CHECK(axis.s == 0.0);
  CHECK(axis.sign_v == 1);

  CHECK_THROWS_AS(p2e::to_polar({0.0, 0.0}, ell), std::domain_error);
  CHECK_THROWS_AS(p2e::to_polar({1.0, 1.0}, EllipseParams{0.0, 0.1}), std::domain_error);
  CHECK_THROWS_AS(p2e::to_polar({1.0, 1.0}, EllipseParams{1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(p2e::to_polar({1.0, 1.0}, EllipseParams{1.0, -0.1}), std::domain_error);
}

TEST_CASE("single-cell sin-power tensor evaluates its monomial") {
  CoeffTensor t(Quantity::sin, Form::sinpow, Bounds{0, 1, 1});
  t.set(0, 1, 1, Rational(1));
  DenseTensor d(t);
  for (double s : {0.0, 0.3, 0.9})
    for (double vr : {0.2, 0.7})
      for (double e2 : {0.0, 0.05, 0.3})
        CHECK(p2e::eval_sinpow(d, s, vr, e2, Truncation{0, 1, 1}) == doctest::Approx(vr * e2).epsilon(1e-16));
}

TEST_CASE("single-cell Fourier tensor evaluates its harmonic") {
  CoeffTensor t(Quantity::phi, Form::fourier, Bounds{1, 1, 1});
  t.set(1, 1, 1, Rational(1, 2));
  DenseTensor d(t);
  for (double psi : {0.0, 0.4, 1.2})
    for (double vr : {0.3, 0.8})
      for (double e2 : {0.0, 0.1}) {
        double want = 0.5 * vr * e2 * std::sin(2 * psi);
        CHECK(p2e::eval_fourier(d, psi, vr, e2, Truncation{1, 1, 1}) == doctest::Approx(want).epsilon(1e-15));
      }
}

TEST_CASE("zero eccentricity collapses both forms to zero") {
  const Evaluator& ev = deep_eval();
  Truncation tr{8, 8, 9};
  for (const auto& t : {&ev.tensors().phi_sinpow, &ev.tensors().h_sinpow, &ev.tensors().sin_sinpow,
                        &ev.tensors().cos_sinpow})
    CHECK(p2e::eval_sinpow(*t, 0.5, 0.9, 0.0, tr) == 0.0);
  for (const auto& t : {&ev.tensors().phi_fourier, &ev.tensors().h_fourier, &ev.tensors().sin_fourier,
                        &ev.tensors().cos_fourier})
    CHECK(p2e::eval_fourier(*t, 0.7, 0.9, 0.0, tr) == 0.0);
}

TEST_CASE("circle projection is exact to a few ulp") {
  const Evaluator& ev = deep_eval();
  EllipseParams circle{2.5, 0.0};
  Truncation tr{8, 8, 9};
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  int checked = 0;
  while (checked < 1000) {
    QueryPoint pt{coord(rng), coord(rng)};
    double rho = std::hypot(pt.u, pt.v);
    if (rho < 1e-6) continue;
    ++checked;
    p2e::PolarPoint pp = p2e::to_polar(pt, circle);
    double phi = ev.eval_phi(pt, circle, tr, Form::sinpow);
    CHECK(close_ulp(phi, std::atan2(pt.v, pt.u), 4));
    double h = ev.eval_h(pt, circle, tr, Form::sinpow);
    CHECK(close_ulp(h, pp.rho - circle.a, 4));
    auto [sp, cp] = ev.eval_sincos_joint(pt, circle, tr);
    CHECK(close_ulp(sp, pt.v / pp.rho, 4));
    CHECK(close_ulp(cp, pt.u / pp.rho, 4));
  }
}

TEST_CASE("points on the major axis project straight") {
  const Evaluator& ev = deep_eval();
  EllipseParams ell{1.0, 0.3};
  Truncation tr{8, 8, 9};
  for (double u : {2.0, 5.0}) {
    QueryPoint pt{u, 0.0};
    CHECK(std::fabs(ev.eval_phi(pt, ell, tr, Form::sinpow)) == 0.0);
    CHECK(std::fabs(ev.eval_phi(pt, ell, tr, Form::fourier)) == 0.0);
    CHECK(ev.eval_h(pt, ell, tr, Form::sinpow) == u - 1.0);
  }
  // Behind the center the nearest point sits on the far vertex.
  CHECK(ev.eval_phi({-3.0, 0.0}, ell, tr, Form::sinpow) == std::numbers::pi);
  CHECK(ev.eval_h({-3.0, 0.0}, ell, tr, Form::sinpow) == 2.0);
}

TEST_CASE("quadrant symmetry is bitwise") {
  const Evaluator& ev = deep_eval();
  EllipseParams ell{1.0, 0.05};
  Truncation tr{8, 8, 9};
  for (Form f : {Form::sinpow, Form::fourier}) {
    QueryPoint pt{1.3, 0.8};
    double phi = ev.eval_phi(pt, ell, tr, f);
    double h = ev.eval_h(pt, ell, tr, f);
    CHECK(ev.eval_phi({pt.u, -pt.v}, ell, tr, f) == -phi);
    CHECK(ev.eval_h({pt.u, -pt.v}, ell, tr, f) == h);
    CHECK(ev.eval_phi({-pt.u, pt.v}, ell, tr, f) == std::numbers::pi - phi);
    CHECK(ev.eval_h({-pt.u, pt.v}, ell, tr, f) == h);
    CHECK(ev.eval_phi({-pt.u, -pt.v}, ell, tr, f) == -(std::numbers::pi - phi));
  }
  auto [sp, cp] = ev.eval_sincos_joint({1.3, 0.8}, ell, tr);
  auto [spm, cpm] = ev.eval_sincos_joint({1.3, -0.8}, ell, tr);
  CHECK(spm == -sp);
  CHECK(cpm == cp);
  auto [spu, cpu] = ev.eval_sincos_joint({-1.3, 0.8}, ell, tr);
  CHECK(spu == sp);
  CHECK(cpu == -cp);
}

TEST_CASE("series agrees with the iterative solver inside the region") {
  const Evaluator& ev = deep_eval();
  EllipseParams ell{1.0, 0.1};
  QueryPoint pt{0.9, 0.9};
  Truncation tr{8, 8, 9};
  p2e::OracleResult o = p2e::solve_phi(pt, ell);
  for (Form f : {Form::sinpow, Form::fourier}) {
    CHECK(ev.eval_phi(pt, ell, tr, f) == doctest::Approx(o.phi_star).epsilon(1e-9));
    CHECK(ev.eval_h(pt, ell, tr, f) == doctest::Approx(o.h_star).epsilon(1e-9));
  }
  auto [sp, cp] = ev.eval_sincos_joint(pt, ell, tr);
  CHECK(sp == doctest::Approx(std::sin(o.phi_star)).epsilon(1e-9));
  CHECK(cp == doctest::Approx(std::cos(o.phi_star)).epsilon(1e-9));
}

TEST_CASE("the two forms agree on the same tensor data") {
  const Evaluator& ev = deep_eval();
  EllipseParams ell{1.0, 0.0066943799901413165};
  Truncation tr{8, 8, 9};
  for (double psi : {0.2, 0.7, 1.2})
    for (double vr : {0.3, 0.9}) {
      double rho = ell.a / vr;
      QueryPoint pt{rho * std::cos(psi), rho * std::sin(psi)};
      CHECK(ev.eval_phi(pt, ell, tr, Form::sinpow) ==
            doctest::Approx(ev.eval_phi(pt, ell, tr, Form::fourier)).epsilon(1e-13));
      CHECK(ev.eval_h(pt, ell, tr, Form::sinpow) ==
            doctest::Approx(ev.eval_h(pt, ell, tr, Form::fourier)).epsilon(1e-13));
    }
}

TEST_CASE("joint reconstruction tracks the direct ratio series") {
  const Evaluator& ev = deep_eval();
  EllipseParams ell{1.0, 0.0066943799901413165};
  Truncation tr{8, 8, 9};
  for (double psi : {0.15, 0.8, 1.4})
    for (double vr : {0.3, 0.6, 0.9}) {
      double rho = ell.a / vr;
      QueryPoint pt{rho * std::cos(psi), rho * std::sin(psi)};
      p2e::PolarPoint pp = p2e::to_polar(pt, ell);
      double ssin = p2e::eval_sinpow(ev.tensors().sin_sinpow, pp.s, pp.varrho, ell.e2, tr);
      double scos = p2e::eval_sinpow(ev.tensors().cos_sinpow, pp.s, pp.varrho, ell.e2, tr);
      double direct_sin = std::sin(pp.psi) * (1.0 + ssin);
      double direct_cos = std::cos(pp.psi) * (1.0 + scos);
      auto [sp, cp] = ev.eval_sincos_joint(pt, ell, tr);
      CHECK(std::fabs(sp - direct_sin) <= 1e-13);
      CHECK(std::fabs(cp - direct_cos) <= 1e-13);
      CHECK(std::fabs(sp * sp + cp * cp - 1.0) <= 1e-12);
    }
}

TEST_CASE("instrumented operation tallies equal the analytic counts") {
  const Evaluator& ev = deep_eval();
  for (Truncation tr : {Truncation{8, 8, 9}, Truncation{4, 4, 5}, Truncation{2, 3, 4}, Truncation{0, 0, 1}}) {
    p2e::OpCount oc{};
    p2e::eval_sinpow(ev.tensors().h_sinpow, 0.4, 0.8, 0.01, tr, &oc);
    p2e::OpCount want = p2e::sinpow_op_count(tr);
    CHECK(oc.adds == want.adds);
    CHECK(oc.muls == want.muls);
    CHECK(oc.trig == want.trig);

    p2e::OpCount of{};
    p2e::eval_fourier(ev.tensors().h_fourier, 0.6, 0.8, 0.01, tr, &of);
    p2e::OpCount wantf = p2e::fourier_op_count(tr);
    CHECK(of.adds == wantf.adds);
    CHECK(of.muls == wantf.muls);
    CHECK(of.trig == wantf.trig);
  }
}

TEST_CASE("truncation outside the tensor is rejected") {
  const Evaluator& ev = deep_eval();
  EllipseParams ell{1.0, 0.01};
  QueryPoint pt{1.0, 1.0};
  CHECK_THROWS_AS(ev.eval_phi(pt, ell, Truncation{9, 8, 9}, Form::sinpow), std::domain_error);
  CHECK_THROWS_AS(ev.eval_phi(pt, ell, Truncation{8, 9, 9}, Form::sinpow), std::domain_error);
  CHECK_THROWS_AS(ev.eval_phi(pt, ell, Truncation{8, 8, 10}, Form::sinpow), std::domain_error);
  CHECK_THROWS_AS(ev.eval_phi(pt, ell, Truncation{8, 8, 0}, Form::sinpow), std::domain_error);
  CHECK_THROWS_AS(ev.eval_phi(pt, ell, Truncation{-1, 8, 9}, Form::sinpow), std::domain_error);
}

TEST_CASE("guard diagnostic flags the steep-angle regime") {
  const Evaluator& ev = deep_eval();
  Truncation tr{8, 8, 9};
  p2e::EvalResult good = ev.project({0.9, 0.9}, EllipseParams{1.0, 0.01}, tr, Form::sinpow);
  CHECK(good.converged_hint);
  CHECK(good.guard_ratio < 0.5);
  // Steep polar angle with a fat eccentricity: the ratio blows past the
  // threshold even though the call still returns numbers.
  p2e::EvalResult bad = ev.project({0.02, 1.1}, EllipseParams{1.0, 0.5}, tr, Form::sinpow);
  CHECK_FALSE(bad.converged_hint);
  CHECK(bad.guard_ratio > 0.5);
}

TEST_CASE("tail ratio diagnostic") {
  CHECK_THROWS_AS(p2e::convergence_diag({1.0, 2.0}), std::invalid_argument);

  p2e::ConvergenceDiag d = p2e::convergence_diag({0.0, 1.0, 1.5}, 1.0);
  CHECK(d.ratio_estimate == doctest::Approx(0.5));
  CHECK(d.converged_hint);

  CHECK_FALSE(p2e::convergence_diag({0.0, 1.0, 2.0}, 10.0).converged_hint);
  CHECK_FALSE(p2e::convergence_diag({0.0, 1.0, 3.0}, 10.0).converged_hint);

  p2e::ConvergenceDiag flat = p2e::convergence_diag({1.0, 2.0, 2.0});
  CHECK(flat.ratio_estimate == 0.0);
  CHECK(flat.converged_hint);

  p2e::ConvergenceDiag jump = p2e::convergence_diag({1.0, 1.0, 2.0});
  CHECK(std::isinf(jump.ratio_estimate));
  CHECK_FALSE(jump.converged_hint);
}
