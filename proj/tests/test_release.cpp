#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "boxmom/quadrature.hpp"
#include "boxmom/release.hpp"

using namespace boxmom;

namespace {

// Independent check state: int_0^a K_t(r - x) psi_N(x) dx with the free
// propagator K_t(d) = sqrt(m / (2 pi hbar t)) e^{-i pi/4} e^{i m d^2 / (2 hbar t)}.
complex propagated_state(const PhysicalConfig& cfg, int N, double r, double t) {
  auto f = [&](double x) {
    const double d = r - x;
    return std::exp(complex(0.0, cfg.mass * d * d / (2.0 * cfg.hbar * t))) *
           well_eigenfunction(cfg, N, x);
  };
  QuadratureOptions opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-13;
  opt.period_hint = 2.0 * cfg.width / N;
  const QuadratureResult q = adaptive_quadrature(f, 0.0, cfg.width, opt);
  REQUIRE(q.converged);
  return std::sqrt(cfg.mass / (two_pi * cfg.hbar * t)) *
         std::exp(complex(0.0, -0.25 * pi)) * q.value;
}

}  // namespace

TEST_CASE("free-space amplitude of the well state, closed form and limits") {
  const PhysicalConfig cfg;
  // k = 0 for N = 1 is 2 / pi^{3/2}.
  const complex at0 = fourier_amplitude(cfg, BoxState{1}, 0.0);
  REQUIRE(std::abs(at0 - complex(0.3591742442503331, 0.0)) < 1e-15);
  // The denominator zeros are removable; both land on -i / (2 sqrt(pi)).
  const complex lim1 = fourier_amplitude(cfg, BoxState{1}, pi);
  REQUIRE(std::abs(lim1 - complex(0.0, -0.28209479177387814)) < 1e-10);
  const complex lim2 = fourier_amplitude(cfg, BoxState{2}, two_pi);
  REQUIRE(std::abs(lim2 - complex(0.0, -0.28209479177387814)) < 1e-10);
  // Quotient path for N = 2 at k = pi: e^{-i pi/2} i sin(pi/2) = 1, so the
  // value is the real prefactor 4 / (3 pi^{3/2}).
  const complex mid = fourier_amplitude(cfg, BoxState{2}, pi);
  REQUIRE(std::abs(mid - complex(4.0 / (3.0 * std::pow(pi, 1.5)), 0.0)) < 1e-14);
}

TEST_CASE("free-space amplitude reality symmetry and guard continuity") {
  const PhysicalConfig cfg;
  for (int N : {1, 2, 3})
    for (double k : {0.4, 2.7, 11.0}) {
      const complex plus = fourier_amplitude(cfg, BoxState{N}, k);
      const complex minus = fourier_amplitude(cfg, BoxState{N}, -k);
      REQUIRE(std::abs(minus - std::conj(plus)) < 1e-15);  // psi_N is real
    }
  // Walking across the guard boundary changes nothing visible.
  const double k_edge = pi + 1e-4;  // quotient side for N = 1
  const double k_in = pi + 0.99e-4; // quadrature side
  const complex a = fourier_amplitude(cfg, BoxState{1}, k_edge);
  const complex b = fourier_amplitude(cfg, BoxState{1}, k_in);
  REQUIRE(std::abs(a - b) < 2e-7);  // analytic slope ~0.14 times the 1e-6 step
}

TEST_CASE("amplitude grid mirrors pointwise evaluation") {
  const PhysicalConfig cfg;
  const auto grid = fourier_amplitude_grid(cfg, BoxState{2}, -3.0, 3.0, 7);
  REQUIRE(grid.size() == 7);
  REQUIRE(grid.front().wavenumber == -3.0);
  REQUIRE(grid.back().wavenumber == 3.0);
  for (const auto& s : grid)
    REQUIRE(std::abs(s.value - fourier_amplitude(cfg, BoxState{2}, s.wavenumber)) == 0.0);
  REQUIRE_THROWS_AS(fourier_amplitude_grid(cfg, BoxState{1}, 0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("box momentum density: frozen peak, squared-amplitude consistency") {
  const PhysicalConfig cfg;
  const MomentumPdf pdf = momentum_pdf(cfg, BoxState{1});
  REQUIRE(pdf.dimension() == 1);
  // P_1(0) = 4 / pi^3.
  REQUIRE(std::abs(pdf(0.0) - 0.12900613773279798) < 1e-15);
  REQUIRE(pdf.normalization_constant() ==
          Catch::Approx(4.0 * pi * cfg.width * std::pow(cfg.hbar, 3)).epsilon(1e-15));

  const MomentumPdf pdf2 = momentum_pdf(cfg, BoxState{2});
  for (double p : {0.5, 3.0, -4.4, two_pi}) {  // last one exercises the guard
    const double direct = pdf2(p);
    const double squared = std::norm(fourier_amplitude(cfg, BoxState{2}, p / cfg.hbar)) / cfg.hbar;
    REQUIRE(direct == Catch::Approx(squared).margin(1e-14).epsilon(1e-10));
  }
  REQUIRE_THROWS_AS(pdf(1.0, 2.0), std::logic_error);  // box pdf is one-dimensional
}

TEST_CASE("box momentum density integrates to one with honest error bars") {
  const PhysicalConfig cfg;
  for (int N : {1, 2}) {
    const MomentEstimate m0 = pdf_moment_estimate(momentum_pdf(cfg, BoxState{N}), 0);
    REQUIRE(std::abs(m0.value - 1.0) < 1e-7);
    REQUIRE(std::abs(m0.value - 1.0) <= m0.error + 1e-7);
    REQUIRE(m0.error < 1e-6);
  }
}

TEST_CASE("box momentum density first moment vanishes by symmetry") {
  const PhysicalConfig cfg;
  const MomentEstimate m1 = pdf_moment_estimate(momentum_pdf(cfg, BoxState{2}), 1);
  REQUIRE(std::abs(m1.value) < 1e-8);
}

TEST_CASE("box second momentum moment equals the sharp kinetic value") {
  for (const PhysicalConfig& cfg :
       {PhysicalConfig{}, PhysicalConfig{1.7, 1.0, 2.3, 1.0}}) {
    for (int N : {1, 3}) {
      const double expect = N * N * pi * pi * cfg.hbar * cfg.hbar / (cfg.width * cfg.width);
      const MomentEstimate m2 = pdf_moment_estimate(momentum_pdf(cfg, BoxState{N}), 2);
      REQUIRE(std::abs(m2.value - expect) < 1e-6 * expect);
      REQUIRE(std::abs(m2.value - expect) <= m2.error + 1e-6 * expect);
    }
  }
  REQUIRE_THROWS_AS(pdf_moment(momentum_pdf(PhysicalConfig{}, BoxState{1}), 3),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(pdf_moment(momentum_pdf(PhysicalConfig{}, BoxState{1}), -1),
                    std::invalid_argument);
}

TEST_CASE("switch-off at t = 0 reproduces the confined state") {
  const PhysicalConfig cfg;
  for (int N : {1, 2}) {
    double sup = 0.0;
    for (int j = 0; j <= 40; ++j) {
      const double r = -0.2 + 1.4 * j / 40.0;
      const QuadratureResult q = free_evolution(cfg, BoxState{N}, r, 0.0);
      sup = std::max(sup, std::abs(q.value - complex(well_eigenfunction(cfg, N, r), 0.0)));
    }
    REQUIRE(sup < 1e-6);
  }
}

TEST_CASE("free evolution keeps the mirror symmetry of the level") {
  const PhysicalConfig cfg;
  const double t = 0.5;
  for (int N : {1, 2}) {
    const double parity = (N % 2 == 1) ? 1.0 : -1.0;  // psi_N(a - x) = parity psi_N(x)
    for (double r : {-0.4, 0.1, 0.33}) {
      const QuadratureResult qa = free_evolution(cfg, BoxState{N}, r, t);
      const QuadratureResult qb = free_evolution(cfg, BoxState{N}, cfg.width - r, t);
      REQUIRE(std::abs(qb.value - parity * qa.value) <=
              qa.error_estimate + qb.error_estimate + 1e-9);
    }
  }
}

TEST_CASE("free evolution agrees with direct propagator quadrature") {
  const PhysicalConfig cfg;
  const struct {
    int N;
    double r;
  } pts[] = {{1, 0.37}, {2, -0.6}};
  for (const auto& c : pts) {
    const QuadratureResult q = free_evolution(cfg, BoxState{c.N}, c.r, 0.7);
    const complex ref = propagated_state(cfg, c.N, c.r, 0.7);
    REQUIRE(std::abs(q.value - ref) < 1e-6);
  }
}

TEST_CASE("free evolution cutoff error responds to the tolerance knob") {
  const PhysicalConfig cfg;
  const QuadratureResult loose = free_evolution(cfg, BoxState{1}, 0.2, 0.3, 1e-4);
  const QuadratureResult tight = free_evolution(cfg, BoxState{1}, 0.2, 0.3, 1e-8);
  REQUIRE(tight.error_estimate < loose.error_estimate);
  REQUIRE(std::abs(tight.value - loose.value) <=
          loose.error_estimate + tight.error_estimate);
  REQUIRE_THROWS_AS(free_evolution(cfg, BoxState{1}, 0.0, -0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(free_evolution(cfg, BoxState{1}, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("planar oscillator level: energies, state values, pdf structure") {
  const PhysicalConfig cfg;
  REQUIRE(oscillator_energy(cfg, {0, 0}) == 1.0);
  REQUIRE(oscillator_energy(cfg, {2, 1}) == 4.0);
  const PhysicalConfig scaled{0.5, 2.0, 1.0, 3.0};
  REQUIRE(oscillator_energy(scaled, {1, 3}) == Catch::Approx(7.5).epsilon(1e-15));
  REQUIRE_THROWS_AS(oscillator_energy(cfg, {-1, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(oscillator_energy(cfg, {0, 31}), std::invalid_argument);

  // Ground state peaks at 1/sqrt(pi); one quantum in x kills the axis.
  REQUIRE(std::abs(sling_state(cfg, {0, 0}, 0.0, 0.0) - 0.5641895835477563) < 1e-15);
  REQUIRE(sling_state(cfg, {1, 0}, 0.0, 0.7) == 0.0);

  const MomentumPdf pdf = sling_momentum_pdf(cfg, {0, 0});
  REQUIRE(pdf.dimension() == 2);
  REQUIRE(std::abs(pdf(0.0, 0.0) - 1.0 / pi) < 1e-15);
  REQUIRE_THROWS_AS(pdf(1.0), std::logic_error);  // planar pdf wants both components
}

TEST_CASE("planar momentum density normalizes and carries the level energy") {
  const PhysicalConfig cfg;
  for (const OscillatorState st : {OscillatorState{0, 0}, OscillatorState{2, 1}}) {
    const MomentumPdf pdf = sling_momentum_pdf(cfg, st);
    REQUIRE(std::abs(pdf_moment(pdf, 0) - 1.0) < 1e-9);
    const MomentEstimate m1 = pdf_moment_estimate(pdf, 1);
    REQUIRE(m1.value == 0.0);
    REQUIRE(m1.error == 0.0);
    // <px^2 + py^2> = m omega hbar (n1 + n2 + 1), twice the kinetic share of E.
    const double expect = cfg.mass * cfg.omega * cfg.hbar * (st.n1 + st.n2 + 1.0);
    REQUIRE(std::abs(pdf_moment(pdf, 2) - expect) < 1e-8 * expect);
  }
  const PhysicalConfig scaled{0.5, 2.0, 1.0, 3.0};
  const double expect = 3.0 * 5.0;  // m omega hbar = 3, n1 + n2 + 1 = 5
  REQUIRE(std::abs(pdf_moment(sling_momentum_pdf(scaled, {1, 3}), 2) - expect) < 1e-8 * expect);
}

TEST_CASE("impact energy distribution of the freed oscillator level") {
  const PhysicalConfig cfg;
  // Ground level at its own energy: exact mass 1 - e^{-2}.
  const MomentEstimate g = sling_impact_cdf_estimate(cfg, {0, 0}, oscillator_energy(cfg, {0, 0}));
  REQUIRE(std::abs(g.value - 0.8646647167633873) < 1e-9);
  REQUIRE(g.error < 1e-8);
  // (2, 1) at its own energy sits in a frozen band.
  const double c21 = sling_impact_cdf(cfg, {2, 1}, oscillator_energy(cfg, {2, 1}));
  REQUIRE(c21 > 0.9480);
  REQUIRE(c21 < 0.9495);

  REQUIRE(sling_impact_cdf(cfg, {1, 1}, 0.0) == 0.0);
  REQUIRE(sling_impact_cdf(cfg, {1, 1}, -2.0) == 0.0);
  const double c1 = sling_impact_cdf(cfg, {1, 1}, 0.5);
  const double c2 = sling_impact_cdf(cfg, {1, 1}, 1.0);
  const double c3 = sling_impact_cdf(cfg, {1, 1}, 2.0);
  REQUIRE(c1 < c2);
  REQUIRE(c2 < c3);
  REQUIRE(c3 < 1.0);
  // Far past the Gaussian shoulder everything has landed.
  REQUIRE(std::abs(sling_impact_cdf(cfg, {1, 1}, 200.0) - 1.0) < 1e-9);
}
