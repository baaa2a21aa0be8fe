#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "boxmom/spectral.hpp"

using namespace boxmom;

namespace {
const double inv_r2 = 1.0 / std::numbers::sqrt2;
}

TEST_CASE("frozen coefficient value at the origin of the lattice") {
  // c_0(sigma = 0) for N = 1 is 2 sqrt2 / pi.
  const complex c = expansion_coefficient(1, SigmaExtension(0.0), 0);
  REQUIRE(std::abs(c - complex(2.0 * std::numbers::sqrt2 / pi, 0.0)) < 1e-15);
  REQUIRE(std::abs(c.real() - 0.9003163161571062) < 1e-15);
}

TEST_CASE("resonant expansions collapse onto two delta coefficients") {
  const SigmaExtension zero(0.0);
  REQUIRE(expansion_coefficient(2, zero, 1) == complex(0.0, -inv_r2));
  REQUIRE(expansion_coefficient(2, zero, -1) == complex(0.0, inv_r2));
  REQUIRE(expansion_coefficient(2, zero, 0) == complex{});
  REQUIRE(expansion_coefficient(2, zero, 5) == complex{});

  const SigmaExtension half(pi);
  REQUIRE(expansion_coefficient(3, half, 1) == complex(0.0, -inv_r2));
  REQUIRE(expansion_coefficient(3, half, -2) == complex(0.0, inv_r2));
  REQUIRE(expansion_coefficient(3, half, 0) == complex{});
  REQUIRE(expansion_coefficient(3, half, -1) == complex{});

  REQUIRE(classify_resonance(2, zero) == ResonanceCase::EvenSigmaZero);
  REQUIRE(classify_resonance(3, half) == ResonanceCase::OddSigmaPi);
  REQUIRE(classify_resonance(2, half) == ResonanceCase::NonResonant);
  REQUIRE(classify_resonance(3, zero) == ResonanceCase::NonResonant);
}

TEST_CASE("closed form matches the quadrature oracle across the sampling grid") {
  const double sigmas[] = {0.0, 1e-7, 0.3, 0.5 * pi, pi, two_pi - 0.3};
  for (int N = 1; N <= 6; ++N)
    for (double s : sigmas) {
      const SigmaExtension ext(s);
      for (int n = -6; n <= 6; ++n) {
        const complex closed = expansion_coefficient(N, ext, n);
        const complex oracle = coefficient_oracle(N, ext, n);
        REQUIRE(std::abs(closed - oracle) <= 1e-9);
      }
    }
}

TEST_CASE("coefficients vary smoothly in sigma away from resonance") {
  const double h = 1e-6;
  for (double s : {0.4, 2.0, 4.4})
    for (int N : {1, 2, 5})
      for (int n : {-3, 0, 2}) {
        const complex a = expansion_coefficient(N, SigmaExtension(s), n);
        const complex b = expansion_coefficient(N, SigmaExtension(s + h), n);
        REQUIRE(std::abs(a - b) < 100.0 * h);
      }
}

TEST_CASE("oracle reports non-convergence instead of returning junk") {
  REQUIRE_THROWS_AS(coefficient_oracle(2, SigmaExtension(0.0), 3, 1e-300), QuadratureError);
}

TEST_CASE("expansion truncation must cover the resonant window") {
  const PhysicalConfig cfg;
  REQUIRE_THROWS_AS(expand_state(cfg, BoxState{4}, SigmaExtension(0.3), 2),
                    std::invalid_argument);
  REQUIRE_NOTHROW(expand_state(cfg, BoxState{4}, SigmaExtension(0.3), 3));
  REQUIRE_NOTHROW(expand_state(cfg, BoxState{1}, SigmaExtension(0.3), 2));
}

TEST_CASE("resonant expansion stores exactly the two surviving entries") {
  const PhysicalConfig cfg;
  const SigmaExpansion e = expand_state(cfg, BoxState{2}, SigmaExtension(0.0), 8);
  REQUIRE(e.resonance == ResonanceCase::EvenSigmaZero);
  REQUIRE(e.coefficients.size() == 2);
  REQUIRE(e.coefficients.at(1) == complex(0.0, -inv_r2));
  REQUIRE(e.coefficients.at(-1) == complex(0.0, inv_r2));
  REQUIRE(e.tail_bound == 0.0);
  REQUIRE(std::abs(e.parseval_sum() - 1.0) < 1e-15);
}

TEST_CASE("Parseval defect is nonnegative and dominated by the tail bound") {
  const PhysicalConfig cfg;
  const double sigmas[] = {0.3, 0.5 * pi, two_pi - 0.3, 0.0, pi};
  for (int N = 1; N <= 4; ++N)
    for (double s : sigmas)
      for (int M : {30, 60}) {
        const SigmaExpansion e = expand_state(cfg, BoxState{N}, SigmaExtension(s), M);
        const double defect = 1.0 - e.parseval_sum();
        REQUIRE(defect >= -1e-12);
        REQUIRE(defect <= e.tail_bound + 1e-12);
      }
}

TEST_CASE("Parseval defect shrinks with the truncation") {
  const PhysicalConfig cfg;
  const SigmaExtension ext(0.0);
  const double d30 = 1.0 - expand_state(cfg, BoxState{1}, ext, 30).parseval_sum();
  const double d60 = 1.0 - expand_state(cfg, BoxState{1}, ext, 60).parseval_sum();
  const double d120 = 1.0 - expand_state(cfg, BoxState{1}, ext, 120).parseval_sum();
  REQUIRE(d60 < d30);
  REQUIRE(d120 < d60);
  // Frozen window for the M = 50 defect of the ground state at sigma = 0.
  const double d50 = 1.0 - expand_state(cfg, BoxState{1}, ext, 50).parseval_sum();
  REQUIRE(d50 > 2.0e-7);
  REQUIRE(d50 < 3.5e-7);
}

TEST_CASE("sigma expansion is width-independent") {
  const PhysicalConfig wide{1.0, 1.0, 3.7, 1.0};
  const PhysicalConfig unit;
  const SigmaExtension ext(1.1);
  const SigmaExpansion a = expand_state(unit, BoxState{2}, ext, 12);
  const SigmaExpansion b = expand_state(wide, BoxState{2}, ext, 12);
  for (const auto& [n, c] : a.coefficients)
    REQUIRE(std::abs(c - b.coefficients.at(n)) < 1e-15);
}

TEST_CASE("resonant reconstruction reproduces the well state to machine precision") {
  const PhysicalConfig cfg;
  const SigmaExpansion e = expand_state(cfg, BoxState{2}, SigmaExtension(0.0), 8);
  for (int j = 0; j <= 20; ++j) {
    const double x = j / 20.0;
    REQUIRE(std::abs(reconstruct(cfg, e, x) - well_eigenfunction(cfg, 2, x)) < 5e-14);
  }
}

TEST_CASE("non-resonant reconstruction converges uniformly in the interior") {
  const PhysicalConfig cfg;
  const SigmaExtension ext(0.0);
  double prev_sup = 1e300;
  for (int M : {25, 50, 100, 200}) {
    const SigmaExpansion e = expand_state(cfg, BoxState{1}, ext, M);
    double sup = 0.0;
    for (int j = 1; j < 40; ++j) {
      const double x = 0.05 + 0.9 * j / 40.0;
      sup = std::max(sup,
                     std::abs(reconstruct(cfg, e, x) - well_eigenfunction(cfg, 1, x)));
    }
    REQUIRE(sup < prev_sup);
    prev_sup = sup;
  }
  const SigmaExpansion e200 = expand_state(cfg, BoxState{1}, ext, 200);
  REQUIRE(std::abs(reconstruct(cfg, e200, 0.5) - std::sqrt(2.0)) < 2e-3);
}

TEST_CASE("reconstruction vanishes outside the interval") {
  const PhysicalConfig cfg;
  const SigmaExpansion e = expand_state(cfg, BoxState{1}, SigmaExtension(0.4), 10);
  REQUIRE(reconstruct(cfg, e, -0.2) == complex{});
  REQUIRE(reconstruct(cfg, e, 1.2) == complex{});
}
