#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "boxmom/quadrature.hpp"
#include "boxmom/well.hpp"

using namespace boxmom;

TEST_CASE("well energies follow the N^2 ladder") {
  const PhysicalConfig cfg;
  REQUIRE(energy_level(cfg, 1) == Catch::Approx(pi * pi / 2.0).epsilon(1e-15));
  REQUIRE(energy_level(cfg, 3) == Catch::Approx(9.0 * pi * pi / 2.0).epsilon(1e-15));

  const PhysicalConfig scaled{2.0, 3.0, 2.0, 1.0};
  // hbar^2 pi^2 N^2 / (2 m a^2) with hbar = a = 2, m = 3, N = 2.
  REQUIRE(energy_level(scaled, 2) == Catch::Approx(4.0 * pi * pi * 4.0 / 24.0).epsilon(1e-15));
}

TEST_CASE("well eigenfunction vanishes identically at and beyond the walls") {
  const PhysicalConfig cfg;
  for (int N : {1, 2, 5}) {
    REQUIRE(well_eigenfunction(cfg, N, 0.0) == 0.0);
    REQUIRE(well_eigenfunction(cfg, N, 1.0) == 0.0);
    REQUIRE(well_eigenfunction(cfg, N, -0.25) == 0.0);
    REQUIRE(well_eigenfunction(cfg, N, 1.25) == 0.0);
  }
  REQUIRE(well_eigenfunction(cfg, 1, 0.5) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-15));
  REQUIRE(well_eigenfunction(cfg, 2, 0.25) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("well eigenfunctions are orthonormal") {
  const PhysicalConfig cfg{1.0, 1.0, 1.7, 1.0};
  QuadratureOptions opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-12;
  for (int n = 1; n <= 4; ++n)
    for (int m = n; m <= 4; ++m) {
      auto f = [&](double x) {
        return well_eigenfunction(cfg, n, x) * well_eigenfunction(cfg, m, x);
      };
      opt.period_hint = 2.0 * cfg.width / (n + m);
      const auto r = adaptive_quadrature(f, 0.0, cfg.width, opt);
      REQUIRE(r.converged);
      REQUIRE(std::abs(r.value.real() - (n == m ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("invalid physical parameters are rejected") {
  PhysicalConfig bad;
  bad.width = 0.0;
  REQUIRE_THROWS_AS(energy_level(bad, 1), std::invalid_argument);
  const PhysicalConfig cfg;
  REQUIRE_THROWS_AS(energy_level(cfg, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(well_eigenfunction(cfg, -2, 0.3), std::invalid_argument);
}
