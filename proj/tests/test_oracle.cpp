#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "p2e/oracle.hpp"

using p2e::EllipseParams;
using p2e::OracleResult;
using p2e::QueryPoint;

TEST_CASE("circle case needs no iteration") {
  EllipseParams circle{1.0, 0.0};
  OracleResult o = p2e::solve_phi({3.0, 4.0}, circle);
  CHECK(o.phi_star == doctest::Approx(std::atan2(4.0, 3.0)).epsilon(1e-15));
  CHECK(o.h_star == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(o.residual <= 1e-14);

  std::mt19937 rng(777);
  std::uniform_real_distribution<double> coord(0.1, 8.0);
  for (int i = 0; i < 50; ++i) {
    QueryPoint pt{coord(rng), coord(rng)};
    OracleResult r = p2e::solve_phi(pt, circle);
    CHECK(r.phi_star == doctest::Approx(std::atan2(pt.v, pt.u)).epsilon(1e-14));
    CHECK(r.h_star == doctest::Approx(std::hypot(pt.u, pt.v) - 1.0).epsilon(1e-14));
  }
}

TEST_CASE("solution satisfies the projection equations") {
  EllipseParams ell{1.0, 0.5};
  OracleResult o = p2e::solve_phi({2.0, 1.0}, ell);
  auto [ru, rv] = p2e::residual_pair({2.0, 1.0}, ell, o.phi_star, o.h_star);
  CHECK(std::fabs(ru) <= 1e-12);
  CHECK(std::fabs(rv) <= 1e-12);

  for (double e2 : {0.1, 0.5})
    for (double u : {1.5, 3.0})
      for (double v : {0.5, 2.0, -1.0}) {
        EllipseParams e{1.0, e2};
        OracleResult r = p2e::solve_phi({u, v}, e);
        auto [au, av] = p2e::residual_pair({u, v}, e, r.phi_star, r.h_star);
        CHECK(std::fabs(au) <= 1e-12);
        CHECK(std::fabs(av) <= 1e-12);
      }
}

TEST_CASE("quadrants carry over to the angle sign") {
  EllipseParams ell{1.0, 0.3};
  CHECK(p2e::solve_phi({2.0, 1.0}, ell).phi_star > 0.0);
  CHECK(p2e::solve_phi({2.0, -1.0}, ell).phi_star < 0.0);
  CHECK(p2e::solve_phi({-2.0, 1.0}, ell).phi_star > std::numbers::pi / 2);
  CHECK(p2e::solve_phi({-2.0, -1.0}, ell).phi_star < -std::numbers::pi / 2);
}

TEST_CASE("minor axis points project to the pole") {
  EllipseParams ell{1.0, 0.5};
  double b = std::sqrt(1.0 - ell.e2);
  OracleResult up = p2e::solve_phi({0.0, 2.0}, ell);
  CHECK(up.phi_star == std::numbers::pi / 2);
  CHECK(up.h_star == doctest::Approx(2.0 - b).epsilon(1e-15));
  OracleResult down = p2e::solve_phi({0.0, -2.0}, ell);
  CHECK(down.phi_star == -std::numbers::pi / 2);
  CHECK(down.h_star == up.h_star);
}

TEST_CASE("points inside the evolute are rejected") {
  EllipseParams ell{1.0, 0.5};
  CHECK(p2e::inside_evolute({0.1, 0.01}, ell));
  CHECK_THROWS_AS(p2e::solve_phi({0.1, 0.01}, ell), std::domain_error);
  CHECK_FALSE(p2e::inside_evolute({2.0, 1.0}, ell));
  // The circle's evolute degenerates to the center, so nothing is inside.
  CHECK_FALSE(p2e::inside_evolute({0.001, 0.001}, EllipseParams{1.0, 0.0}));
}

TEST_CASE("steep polar angles still converge") {
  // Near the pole the residual scale 1/cos^2(psi) is huge, so the solver ends
  // on the machine-width bracket rather than the raw tolerance.
  EllipseParams ell{1.0, 0.0066943799901413165};
  double psi = 85.0 * std::numbers::pi / 180.0;
  double rho = 1.0 / 0.9;
  QueryPoint pt{rho * std::cos(psi), rho * std::sin(psi)};
  OracleResult o = p2e::solve_phi(pt, ell);
  CHECK(o.iterations <= 100);
  CHECK(o.residual <= 1e-12);
  auto [ru, rv] = p2e::residual_pair(pt, ell, o.phi_star, o.h_star);
  CHECK(std::fabs(ru) <= 1e-13);
  CHECK(std::fabs(rv) <= 1e-13);
}

TEST_CASE("loose tolerances are honored") {
  EllipseParams ell{1.0, 0.3};
  OracleResult tight = p2e::solve_phi({1.2, 1.7}, ell);
  OracleResult loose = p2e::solve_phi({1.2, 1.7}, ell, 1e-6);
  CHECK(loose.residual <= 1e-6);
  CHECK(loose.iterations <= tight.iterations);
  CHECK(loose.phi_star == doctest::Approx(tight.phi_star).epsilon(1e-5));
}

TEST_CASE("distance recovery matches an independent distance formula") {
  EllipseParams ell{1.0, 0.4};
  for (double u : {1.5, 2.5})
    for (double v : {0.7, 1.9}) {
      OracleResult o = p2e::solve_phi({u, v}, ell);
      // Euclidean distance to the boundary point the normal angle names.
      double N = 1.0 / std::sqrt(1.0 - ell.e2 * std::sin(o.phi_star) * std::sin(o.phi_star));
      double bx = N * std::cos(o.phi_star);
      double by = N * (1.0 - ell.e2) * std::sin(o.phi_star);
      double dist = std::hypot(u - bx, v - by);
      CHECK(o.h_star == doctest::Approx(dist).epsilon(1e-12));
      CHECK(p2e::h_from_phi({u, v}, ell, o.phi_star) == o.h_star);
    }
}
