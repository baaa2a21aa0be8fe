#pragma once

#include <array>
#include <cmath>
#include <map>
#include <variant>

#include "boxmom/spectral.hpp"

namespace boxmom {

struct BoostParams {
  double velocity = 0.0;
};

// The boundary twist a uniformly moving observer attributes to the box:
// sigma(V) = (-m V a / hbar) mod 2 pi. V = pi hbar / (m a) lands exactly on
// sigma = pi, the odd-N resonance.
inline SigmaExtension sigma_of_velocity(const PhysicalConfig& cfg, double V) {
  cfg.validate();
  return SigmaExtension(-cfg.mass * V * cfg.width / cfg.hbar);
}

// Phase of the Galilei boost in the zero-gauge,
//   u(zeta, tau) = -(m V / hbar) zeta - (m V^2 / (2 hbar)) tau,
// so that Psi_moving(zeta, tau) = e^{i u} Psi_rest(zeta + V tau, tau).
inline double boost_phase(const PhysicalConfig& cfg, double V, double zeta, double tau) {
  cfg.validate();
  return -(cfg.mass * V / cfg.hbar) * zeta - (cfg.mass * V * V / (2.0 * cfg.hbar)) * tau;
}

// Well level N seen from the frame in which the box moves with velocity -V:
// support zeta + V tau in [0, a], energy shifted by the kinetic m V^2 / 2.
inline complex boosted_stationary_state(const PhysicalConfig& cfg, const BoxState& st, double V,
                                        double zeta, double tau) {
  const double psi = well_eigenfunction(cfg, st.N, zeta + V * tau);
  if (psi == 0.0) return {};
  const double phase = boost_phase(cfg, V, zeta, tau) - energy_level(cfg, st.N) * tau / cfg.hbar;
  return psi * std::exp(complex(0.0, phase));
}

// Momentum eigenfunction comoving with the box,
//   f_n(zeta, tau) = e^{-i m V zeta / hbar} e^{i 2 pi n (zeta + V tau) / a} / sqrt(a)
// on the moving support, zero outside. It carries momentum
// 2 pi n hbar / a - m V.
inline complex moving_momentum_eigenfunction(const PhysicalConfig& cfg, double V, int n,
                                             double zeta, double tau) {
  cfg.validate();
  const double a = cfg.width;
  const double x = zeta + V * tau;
  if (x < 0.0 || x > a) return {};
  const double phase = -(cfg.mass * V / cfg.hbar) * zeta + two_pi * n * x / a;
  return std::exp(complex(0.0, phase)) / std::sqrt(a);
}

inline double moving_momentum_value(const PhysicalConfig& cfg, double V, int n) {
  cfg.validate();
  return two_pi * n * cfg.hbar / cfg.width - cfg.mass * V;
}

// Expansion of the boosted level over the comoving momentum eigenfunctions.
// The boost drops out of the moduli entirely; time enters as one overall
// energy phase e^{-i (E_N + m V^2 / 2) tau / hbar} times the sigma = 0
// lab coefficients.
struct MovingExpansion {
  BoxState state;
  BoostParams boost;
  double tau = 0.0;
  int M = 0;
  std::map<int, complex> coefficients;

  double parseval_sum() const {
    double s = 0.0;
    for (const auto& [n, c] : coefficients) s += std::norm(c);
    return s;
  }
};

inline MovingExpansion moving_expansion(const PhysicalConfig& cfg, const BoxState& st,
                                        const BoostParams& boost, double tau, int M) {
  cfg.validate();
  st.validate();
  if (static_cast<double>(M) < 0.5 * st.N + 1.0)
    throw std::invalid_argument("moving_expansion: truncation must satisfy M >= N/2 + 1");

  const double theta =
      -(energy_level(cfg, st.N) + 0.5 * cfg.mass * boost.velocity * boost.velocity) * tau /
      cfg.hbar;
  const complex phase = std::exp(complex(0.0, theta));

  MovingExpansion out;
  out.state = st;
  out.boost = boost;
  out.tau = tau;
  out.M = M;
  if (st.N % 2 == 0) {
    out.coefficients[st.N / 2] = phase * complex(0.0, -detail::inv_root2);
    out.coefficients[-st.N / 2] = phase * complex(0.0, detail::inv_root2);
    return out;
  }
  for (int n = -M; n <= M; ++n) {
    const double b = -2.0 * st.N * std::numbers::sqrt2 /
                     ((4.0 * n * n - static_cast<double>(st.N) * st.N) * pi);
    out.coefficients[n] = phase * b;
  }
  return out;
}

// Two-term plane-wave form of the boosted level. Exists only for even N,
// where the state is a superposition of exactly two comoving momentum
// eigenfunctions; for odd N the half-integer waves fall outside the comoving
// lattice and no finite plane-wave form exists.
struct PlaneWaveTerm {
  double momentum = 0.0;
  complex amplitude{};
  double energy = 0.0;  // momentum^2 / (2 m), the phase velocity of the term
};

struct NotRepresentable {};

using PlaneWaveDecomposition = std::variant<std::array<PlaneWaveTerm, 2>, NotRepresentable>;

inline PlaneWaveDecomposition plane_wave_decomposition(const PhysicalConfig& cfg,
                                                       const BoxState& st,
                                                       const BoostParams& boost) {
  cfg.validate();
  st.validate();
  if (st.N % 2 == 1) return NotRepresentable{};
  const double a = cfg.width;
  const double k = st.N * pi * cfg.hbar / a;
  const double mv = cfg.mass * boost.velocity;
  // psi_N = (1/2i) sqrt(2/a) (e^{i N pi x / a} - e^{-i N pi x / a}) carried
  // through the boost: momenta shift by -mV, amplitudes are untouched.
  const complex amp = complex(0.0, -0.5) * std::sqrt(2.0 / a);
  const double p_plus = k - mv;
  const double p_minus = -(k + mv);
  return std::array<PlaneWaveTerm, 2>{
      PlaneWaveTerm{p_plus, amp, p_plus * p_plus / (2.0 * cfg.mass)},
      PlaneWaveTerm{p_minus, -amp, p_minus * p_minus / (2.0 * cfg.mass)}};
}

// <E> in the moving frame: the level energy plus the kinetic piece of the
// boost. Conserved in time even though the momentum distribution is not a
// single eigenvalue.
inline double energy_expectation(const PhysicalConfig& cfg, const BoxState& st, double V) {
  return energy_level(cfg, st.N) + 0.5 * cfg.mass * V * V;
}

// The same number the hard way: i hbar int conj(Psi) dPsi/dtau dzeta over the
// moving support, with the tau derivative taken by a central difference and
// one Richardson pass (h then h/2). Serves as an independent check that the
// closed form above really is the conserved energy.
inline double energy_expectation_quadrature(const PhysicalConfig& cfg, const BoxState& st,
                                            double V, double tau, double h = 1e-5) {
  cfg.validate();
  st.validate();
  auto psi = [&](double z, double t) { return boosted_stationary_state(cfg, st, V, z, t); };
  auto integrand = [&](double z) {
    auto diff = [&](double step) { return (psi(z, tau + step) - psi(z, tau - step)) / (2.0 * step); };
    const complex d1 = diff(h);
    const complex d2 = diff(0.5 * h);
    const complex dtau = (4.0 * d2 - d1) / 3.0;
    return complex(0.0, cfg.hbar) * std::conj(psi(z, tau)) * dtau;
  };
  QuadratureOptions opt;
  opt.rel_tol = 1e-9;
  opt.abs_tol = 1e-12;
  opt.period_hint = 2.0 * cfg.width / st.N;
  const QuadratureResult r =
      adaptive_quadrature(integrand, -V * tau, cfg.width - V * tau, opt);
  if (!r.converged) throw QuadratureError("energy_expectation_quadrature", r.error_estimate);
  return r.value.real();
}

}  // namespace boxmom
