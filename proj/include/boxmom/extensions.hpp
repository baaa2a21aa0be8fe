#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "boxmom/config.hpp"

namespace boxmom {

// Boundary twist f(a) = e^{i sigma} f(0). Each sigma in [0, 2 pi) labels one
// self-adjoint realization of the momentum operator -i hbar d/dx on [0, a];
// the constructor folds arbitrary input into that window.
struct SigmaExtension {
  double sigma = 0.0;

  SigmaExtension() = default;
  explicit SigmaExtension(double s) : sigma(canonical(s)) {}

  static double canonical(double s) {
    double r = std::fmod(s, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;  // fmod can land exactly on 2 pi after the lift
    return r;
  }
};

// p_n(sigma) = hbar (sigma + 2 pi n) / a, n integer. Discrete, nondegenerate,
// spacing 2 pi hbar / a.
inline double sigma_eigenvalue(const PhysicalConfig& cfg, const SigmaExtension& ext, int n) {
  cfg.validate();
  return cfg.hbar * (ext.sigma + two_pi * n) / cfg.width;
}

// f_n(x) = e^{i (sigma + 2 pi n) x / a} / sqrt(a) on [0, a], zero outside.
inline complex sigma_eigenfunction(const PhysicalConfig& cfg, const SigmaExtension& ext, int n,
                                   double x) {
  cfg.validate();
  const double a = cfg.width;
  if (x < 0.0 || x > a) return {};
  return std::exp(complex(0.0, (ext.sigma + two_pi * n) * x / a)) / std::sqrt(a);
}

// Membership test for the extension's domain: |f(a) - e^{i sigma} f(0)|
// against tol, scaled by the size of f at the boundary.
inline bool sigma_boundary_check(const SigmaExtension& ext, complex f0, complex fa,
                                 double tol = 1e-12) {
  const double scale = std::max({1.0, std::abs(f0), std::abs(fa)});
  return std::abs(fa - std::exp(complex(0.0, ext.sigma)) * f0) <= tol * scale;
}

// The Dirichlet domain (both endpoint values vanish) belongs to no sigma
// extension; it is the natural home of the well eigenstates.
inline bool dirichlet_domain_check(complex f0, complex fa, double tol = 1e-12) {
  return std::abs(f0) <= tol && std::abs(fa) <= tol;
}

// Boundary-condition rows for the kinetic-energy operator -hbar^2/(2m) d^2/dx^2:
//   alpha_i1 f(0) + beta_i1 f(a) - alpha_i2 f'(0) - beta_i2 f'(a) = 0, i = 1, 2.
// alpha[i][0] multiplies f(0), alpha[i][1] multiplies f'(0); same for beta at a.
struct HamiltonianBC {
  std::array<std::array<complex, 2>, 2> alpha{};
  std::array<std::array<complex, 2>, 2> beta{};
};

enum class NamedBC { Dirichlet, Periodic, Antiperiodic };

inline HamiltonianBC named_bc_matrices(NamedBC which) {
  HamiltonianBC bc;
  switch (which) {
    case NamedBC::Dirichlet:
      // f(0) = f(a) = 0: row 1 takes f(0) - f(a) = 0, row 2 takes f(0) = 0.
      bc.alpha[0][0] = 1.0;
      bc.beta[0][0] = -1.0;
      bc.alpha[1][0] = 1.0;
      break;
    case NamedBC::Periodic:
      // f(0) = f(a), f'(0) = f'(a).
      bc.alpha[0][0] = 1.0;
      bc.beta[0][0] = -1.0;
      bc.alpha[1][1] = 1.0;
      bc.beta[1][1] = -1.0;
      break;
    case NamedBC::Antiperiodic:
      // f(0) = -f(a), f'(0) = -f'(a).
      bc.alpha[0][0] = 1.0;
      bc.beta[0][0] = 1.0;
      bc.alpha[1][1] = 1.0;
      bc.beta[1][1] = 1.0;
      break;
  }
  return bc;
}

// Self-adjointness requires, row by row,
//   alpha_i1 conj(alpha_i2) - alpha_i2 conj(alpha_i1)
//     = beta_i1 conj(beta_i2) - beta_i2 conj(beta_i1),
// i.e. equal boundary-current contributions at the two endpoints. The
// residual is the modulus of the difference (both sides are purely
// imaginary, so this is 2 |Im lhs - Im rhs|).
inline double hamiltonian_bc_residual(const HamiltonianBC& bc, int row) {
  if (row < 0 || row > 1) throw std::invalid_argument("hamiltonian_bc_residual: row is 0 or 1");
  const complex la = bc.alpha[row][0] * std::conj(bc.alpha[row][1]) -
                     bc.alpha[row][1] * std::conj(bc.alpha[row][0]);
  const complex lb = bc.beta[row][0] * std::conj(bc.beta[row][1]) -
                     bc.beta[row][1] * std::conj(bc.beta[row][0]);
  return std::abs(la - lb);
}

inline bool validate_hamiltonian_bc(const HamiltonianBC& bc, double tol = 1e-12) {
  return hamiltonian_bc_residual(bc, 0) <= tol && hamiltonian_bc_residual(bc, 1) <= tol;
}

enum class Waveform { Constant, Sin, Cos };

// One energy eigenline of the kinetic operator under a named boundary
// condition. frequency is the spatial wavenumber of the mode; degeneracy
// marks the size of the multiplet the line belongs to.
struct SpectralLine {
  double energy = 0.0;
  double frequency = 0.0;
  Waveform waveform = Waveform::Sin;
  int degeneracy = 1;
};

inline double spectral_line_value(const PhysicalConfig& cfg, const SpectralLine& line, double x) {
  cfg.validate();
  const double a = cfg.width;
  if (x < 0.0 || x > a) return 0.0;
  switch (line.waveform) {
    case Waveform::Constant:
      return 1.0 / std::sqrt(a);
    case Waveform::Sin:
      return std::sqrt(2.0 / a) * std::sin(line.frequency * x);
    case Waveform::Cos:
      return std::sqrt(2.0 / a) * std::cos(line.frequency * x);
  }
  return 0.0;
}

// First `count` lines, ascending in energy; within a degenerate pair the sin
// mode precedes the cos mode. Dirichlet: frequencies N pi / a, simple.
// Periodic: a constant zero mode, then doubly degenerate pairs at 2 N pi / a.
// Antiperiodic: doubly degenerate pairs at (2N + 1) pi / a.
inline std::vector<SpectralLine> hamiltonian_spectrum(const PhysicalConfig& cfg, NamedBC which,
                                                      int count) {
  cfg.validate();
  if (count < 1) throw std::invalid_argument("hamiltonian_spectrum: count must be >= 1");
  const double a = cfg.width;
  auto energy_of = [&](double freq) { return cfg.hbar * cfg.hbar * freq * freq / (2.0 * cfg.mass); };

  std::vector<SpectralLine> lines;
  lines.reserve(count);
  switch (which) {
    case NamedBC::Dirichlet:
      for (int N = 1; static_cast<int>(lines.size()) < count; ++N)
        lines.push_back({energy_of(N * pi / a), N * pi / a, Waveform::Sin, 1});
      break;
    case NamedBC::Periodic:
      lines.push_back({0.0, 0.0, Waveform::Constant, 1});
      for (int N = 1; static_cast<int>(lines.size()) < count; ++N) {
        const double freq = 2.0 * N * pi / a;
        lines.push_back({energy_of(freq), freq, Waveform::Sin, 2});
        if (static_cast<int>(lines.size()) < count)
          lines.push_back({energy_of(freq), freq, Waveform::Cos, 2});
      }
      break;
    case NamedBC::Antiperiodic:
      for (int N = 0; static_cast<int>(lines.size()) < count; ++N) {
        const double freq = (2.0 * N + 1.0) * pi / a;
        lines.push_back({energy_of(freq), freq, Waveform::Sin, 2});
        if (static_cast<int>(lines.size()) < count)
          lines.push_back({energy_of(freq), freq, Waveform::Cos, 2});
      }
      break;
  }
  return lines;
}

}  // namespace boxmom
