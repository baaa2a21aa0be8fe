#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "boxmom/extensions.hpp"
#include "boxmom/quadrature.hpp"
#include "boxmom/series.hpp"
#include "boxmom/well.hpp"

namespace boxmom {

// A well state psi_N collides with a momentum eigenfunction when the sine's
// two exponentials both sit on the sigma lattice: even N at sigma = 0, odd N
// at sigma = pi. There the expansion degenerates to two delta coefficients.
enum class ResonanceCase { NonResonant, EvenSigmaZero, OddSigmaPi };

inline ResonanceCase classify_resonance(int N, const SigmaExtension& ext) {
  if (N % 2 == 0 && ext.sigma == 0.0) return ResonanceCase::EvenSigmaZero;
  if (N % 2 == 1 && ext.sigma == pi) return ResonanceCase::OddSigmaPi;
  return ResonanceCase::NonResonant;
}

namespace detail {

inline constexpr double inv_root2 = 1.0 / std::numbers::sqrt2;

// The two indices whose coefficients survive at resonance: the lattice hits
// +-N pi / a exactly, everything else is orthogonal.
inline std::pair<int, int> resonant_indices(int N) {
  if (N % 2 == 0) return {N / 2, -N / 2};
  return {(N - 1) / 2, -(N + 1) / 2};
}

}  // namespace detail

// c_n(sigma) = <f_n^(sigma), psi_N> = pi N sqrt2 (e^{-i sigma} (-1)^N - 1) /
// ((sigma + 2 pi n)^2 - pi^2 N^2), independent of the interval width.
// Evaluated in the cancellation-free parity form
//   even N: -2 sqrt2 pi N  e^{-i sigma/2} i sin(sigma/2) / D
//   odd  N: -2 sqrt2 pi N  e^{-i sigma/2}   cos(sigma/2) / D
// whose numerator and denominator vanish together at the resonances, so the
// quotient stays accurate arbitrarily close to them. At an exact resonance
// (and in the guard band |D| < 1e-12, where the quotient would be junk) the
// analytic limit -+ i/sqrt2 at the two surviving indices is returned.
inline complex expansion_coefficient(int N, const SigmaExtension& ext, int n) {
  BoxState{N}.validate();
  const double sigma = ext.sigma;
  const double q = sigma + two_pi * n;  // eigenvalue in units of hbar / a
  // q -+ N pi written as sigma + pi (2n -+ N): the lattice part is an exact
  // integer multiple of pi, so the difference keeps full precision near the
  // resonances instead of cancelling against the large q.
  const double den = (sigma + pi * (2.0 * n - N)) * (sigma + pi * (2.0 * n + N));

  auto resonant_value = [&]() -> complex {
    const auto [up, down] = detail::resonant_indices(N);
    if (n == up) return complex(0.0, -detail::inv_root2);
    if (n == down) return complex(0.0, detail::inv_root2);
    return {};
  };

  if (classify_resonance(N, ext) != ResonanceCase::NonResonant) return resonant_value();

  if (std::abs(den) < 1e-12) {
    // Only reachable when sigma sits within ~1e-13 of a resonance of the
    // matching parity; there the numerator vanishes too and the limit is the
    // delta value, signed by which lattice point was grazed.
    const double trig = (N % 2 == 0) ? std::sin(0.5 * sigma) : std::cos(0.5 * sigma);
    if (std::abs(trig) > 1e-6)
      throw std::domain_error("expansion_coefficient: degenerate denominator off resonance");
    return complex(0.0, q > 0.0 ? -detail::inv_root2 : detail::inv_root2);
  }

  const complex half_phase = std::exp(complex(0.0, -0.5 * sigma));
  const double pre = 2.0 * std::numbers::sqrt2 * pi * N / den;
  if (N % 2 == 0) return complex(0.0, -pre) * half_phase * std::sin(0.5 * sigma);
  return -pre * half_phase * std::cos(0.5 * sigma);
}

// Same inner product by direct quadrature, sqrt2 int_0^1 e^{-i q x} sin(N pi x) dx
// with q = sigma + 2 pi n. Deliberately takes the integral route end to end
// so it shares nothing with the closed form above.
inline complex coefficient_oracle(int N, const SigmaExtension& ext, int n,
                                  double rel_tol = 1e-10) {
  BoxState{N}.validate();
  const double q = ext.sigma + two_pi * n;
  auto f = [&](double x) {
    return std::numbers::sqrt2 * std::exp(complex(0.0, -q * x)) * std::sin(N * pi * x);
  };
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = std::min(1e-13, rel_tol);  // resonant zeros never meet a pure rel_tol
  opt.period_hint = two_pi / std::max({std::abs(q), N * pi, 1.0});
  const QuadratureResult r = adaptive_quadrature(f, 0.0, 1.0, opt);
  if (!r.converged) throw QuadratureError("coefficient_oracle", r.error_estimate);
  return r.value;
}

// Truncated sigma-expansion of a well state. Coefficients are stored
// sparsely; at resonance exactly the two surviving entries appear and
// tail_bound is zero. Off resonance tail_bound dominates the Parseval
// defect 1 - sum |c_n|^2 by integral comparison of the 1/n^4 envelope.
struct SigmaExpansion {
  BoxState state;
  SigmaExtension ext;
  int M = 0;
  std::map<int, complex> coefficients;
  double tail_bound = 0.0;
  ResonanceCase resonance = ResonanceCase::NonResonant;

  double parseval_sum() const {
    double s = 0.0;
    for (const auto& [n, c] : coefficients) s += std::norm(c);
    return s;
  }
};

// |c_n| <= 2 sqrt2 pi N / (2 pi |n| - pi N - 2 pi)^2 once the denominator is
// positive, which M >= N/2 + 1 guarantees for all omitted indices. That is
// why the precondition is not merely M >= 0.
inline SigmaExpansion expand_state(const PhysicalConfig& cfg, const BoxState& st,
                                   const SigmaExtension& ext, int M) {
  cfg.validate();
  st.validate();
  if (static_cast<double>(M) < 0.5 * st.N + 1.0)
    throw std::invalid_argument("expand_state: truncation must satisfy M >= N/2 + 1");

  SigmaExpansion out;
  out.state = st;
  out.ext = ext;
  out.M = M;
  out.resonance = classify_resonance(st.N, ext);

  if (out.resonance != ResonanceCase::NonResonant) {
    const auto [up, down] = detail::resonant_indices(st.N);
    out.coefficients[up] = complex(0.0, -detail::inv_root2);
    out.coefficients[down] = complex(0.0, detail::inv_root2);
    out.tail_bound = 0.0;  // every omitted coefficient is identically zero
    return out;
  }

  for (int n = -M; n <= M; ++n) out.coefficients[n] = expansion_coefficient(st.N, ext, n);

  const double num = 2.0 * std::numbers::sqrt2 * pi * st.N;
  auto envelope = [&](double t) {
    const double d = two_pi * t - pi * st.N - two_pi;
    const double e = num / (d * d);
    return e * e;  // envelope of |c_n|^2
  };
  out.tail_bound = 2.0 * one_sided_tail_bound(envelope, M);
  return out;
}

// Pointwise partial sum  sum_n c_n f_n^(sigma)(x). Converges to psi_N
// uniformly on compacts of (0, a) as M grows; at resonance it reproduces
// psi_N identically.
inline complex reconstruct(const PhysicalConfig& cfg, const SigmaExpansion& expansion, double x) {
  cfg.validate();
  const double a = cfg.width;
  if (x < 0.0 || x > a) return {};
  complex acc{};
  for (const auto& [n, c] : expansion.coefficients)
    acc += c * std::exp(complex(0.0, two_pi * n * x / a));
  return std::exp(complex(0.0, expansion.ext.sigma * x / a)) * acc / std::sqrt(a);
}

}  // namespace boxmom
