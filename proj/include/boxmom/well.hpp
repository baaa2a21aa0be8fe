#pragma once

#include <cmath>

#include "boxmom/config.hpp"

namespace boxmom {

// E_N = pi^2 hbar^2 N^2 / (2 m a^2)
inline double energy_level(const PhysicalConfig& cfg, int N) {
  cfg.validate();
  BoxState{N}.validate();
  const double kn = N * pi / cfg.width;
  return cfg.hbar * cfg.hbar * kn * kn / (2.0 * cfg.mass);
}

// psi_N(x) = sqrt(2/a) sin(N pi x / a) on (0, a). The state lives on [0, a]
// only; endpoints and everything outside return an exact zero so that
// supports stay sharp under later translations.
inline double well_eigenfunction(const PhysicalConfig& cfg, int N, double x) {
  cfg.validate();
  BoxState{N}.validate();
  const double a = cfg.width;
  if (x <= 0.0 || x >= a) return 0.0;
  return std::sqrt(2.0 / a) * std::sin(N * pi * x / a);
}

}  // namespace boxmom
