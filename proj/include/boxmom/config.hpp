#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>

namespace boxmom {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Problem-wide physical constants. Natural units (hbar = mass = width = 1)
// are the defaults; everything downstream scales through these fields.
struct PhysicalConfig {
  double hbar = 1.0;
  double mass = 1.0;
  double width = 1.0;  // interval length a
  double omega = 1.0;  // trap frequency, used by the planar oscillator states

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(width > 0.0) || !(omega > 0.0))
      throw std::invalid_argument(
          "PhysicalConfig: hbar, mass, width and omega must all be positive");
  }
};

// Infinite-well level, quantum number N >= 1.
struct BoxState {
  int N = 1;

  void validate() const {
    if (N < 1) throw std::invalid_argument("BoxState: N must be >= 1");
  }
};

// One grid sample of a complex-valued function.
struct ComplexSample {
  double argument = 0.0;
  complex value{};
};

}  // namespace boxmom
