#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "boxmom/hermite.hpp"
#include "boxmom/quadrature.hpp"
#include "boxmom/well.hpp"

namespace boxmom {

struct MomentumAmplitude {
  double wavenumber = 0.0;
  complex value{};
};

// Planar oscillator level used by the sling model. Degrees share the Hermite
// recurrence cap.
struct OscillatorState {
  int n1 = 0;
  int n2 = 0;

  void validate() const {
    if (n1 < 0 || n2 < 0 || n1 > hermite_max_degree || n2 > hermite_max_degree)
      throw std::invalid_argument("OscillatorState: degrees must lie in [0, 30]");
  }
};

inline double oscillator_energy(const PhysicalConfig& cfg, const OscillatorState& st) {
  cfg.validate();
  st.validate();
  return cfg.hbar * cfg.omega * (st.n1 + st.n2 + 1.0);
}

// Free-space Fourier transform of the well state,
//   psi~_N(k) = (2 pi)^{-1/2} int_0^a psi_N(x) e^{-i k x} dx
//             = -sqrt(pi a) 2 N / (a^2 k^2 - N^2 pi^2) e^{-i a k / 2}
//               * (i sin(a k / 2) for even N, cos(a k / 2) for odd N).
// The denominator zeros at a |k| = N pi are removable (the trig factor
// vanishes with them); inside a guard window of 1e-4 around them the
// defining integral is evaluated by quadrature instead of the quotient.
inline complex fourier_amplitude(const PhysicalConfig& cfg, const BoxState& st, double k) {
  cfg.validate();
  st.validate();
  const double a = cfg.width;
  const int N = st.N;

  if (std::abs(std::abs(a * k) - N * pi) < 1e-4) {
    auto f = [&](double x) {
      return well_eigenfunction(cfg, N, x) * std::exp(complex(0.0, -k * x)) / std::sqrt(two_pi);
    };
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-16;
    opt.period_hint = 2.0 * a / N;
    return adaptive_quadrature(f, 0.0, a, opt).value;
  }

  const double den = (a * k - N * pi) * (a * k + N * pi);
  const complex phase = std::exp(complex(0.0, -0.5 * a * k));
  const double pre = -2.0 * N * std::sqrt(pi * a) / den;
  if (N % 2 == 0) return pre * phase * complex(0.0, std::sin(0.5 * a * k));
  return pre * phase * std::cos(0.5 * a * k);
}

inline std::vector<MomentumAmplitude> fourier_amplitude_grid(const PhysicalConfig& cfg,
                                                             const BoxState& st, double k_lo,
                                                             double k_hi, int npoints) {
  if (npoints < 2) throw std::invalid_argument("fourier_amplitude_grid: need at least 2 points");
  std::vector<MomentumAmplitude> out;
  out.reserve(npoints);
  for (int j = 0; j < npoints; ++j) {
    const double k = k_lo + (k_hi - k_lo) * j / (npoints - 1.0);
    out.push_back({k, fourier_amplitude(cfg, st, k)});
  }
  return out;
}

// Momentum distribution right after the confinement is switched off, for
// either prepared state. Box level (1D):
//   P_N(p) = 4 pi a hbar^3 N^2 trig^2(a p / (2 hbar)) / (a^2 p^2 - hbar^2 N^2 pi^2)^2
// with the same removable-point guard as fourier_amplitude. Oscillator level
// (2D):
//   P(px, py) = B e^{-(px^2+py^2)/(m omega hbar)} H_n1^2(px/s) H_n2^2(py/s),
//   s = sqrt(m omega hbar),  B = 1 / (pi m omega hbar 2^{n1+n2} n1! n2!).
// normalization_constant() is the closed-form prefactor (4 pi a hbar^3 N^2
// resp. B); both densities integrate to one.
class MomentumPdf {
 public:
  MomentumPdf(const PhysicalConfig& cfg, const BoxState& st) : cfg_(cfg), state_(st) {
    cfg.validate();
    st.validate();
    norm_ = 4.0 * pi * cfg.width * cfg.hbar * cfg.hbar * cfg.hbar * st.N * st.N;
  }
  MomentumPdf(const PhysicalConfig& cfg, const OscillatorState& st) : cfg_(cfg), state_(st) {
    cfg.validate();
    st.validate();
    const double s2 = cfg.mass * cfg.omega * cfg.hbar;
    norm_ = 1.0 / (pi * s2 * std::pow(2.0, st.n1 + st.n2) * factorial(st.n1) * factorial(st.n2));
  }

  int dimension() const { return std::holds_alternative<BoxState>(state_) ? 1 : 2; }
  double normalization_constant() const { return norm_; }
  const PhysicalConfig& config() const { return cfg_; }
  const std::variant<BoxState, OscillatorState>& descriptor() const { return state_; }

  double operator()(double p) const {
    const BoxState* st = std::get_if<BoxState>(&state_);
    if (!st) throw std::logic_error("MomentumPdf: planar pdf needs two momentum arguments");
    const double a = cfg_.width;
    const double h = cfg_.hbar;
    const int N = st->N;
    const double ak = a * p / h;
    if (std::abs(std::abs(ak) - N * pi) < 1e-4)
      return std::norm(fourier_amplitude(cfg_, *st, p / h)) / h;
    const double den = (ak - N * pi) * (ak + N * pi);
    const double tr = (N % 2 == 0) ? std::sin(0.5 * ak) : std::cos(0.5 * ak);
    return 4.0 * pi * a * N * N * tr * tr / (h * den * den);
  }

  double operator()(double px, double py) const {
    const OscillatorState* st = std::get_if<OscillatorState>(&state_);
    if (!st) throw std::logic_error("MomentumPdf: box pdf takes one momentum argument");
    const double s = std::sqrt(cfg_.mass * cfg_.omega * cfg_.hbar);
    const double h1 = hermite(st->n1, px / s);
    const double h2 = hermite(st->n2, py / s);
    return norm_ * std::exp(-(px * px + py * py) / (s * s)) * h1 * h1 * h2 * h2;
  }

 private:
  PhysicalConfig cfg_;
  std::variant<BoxState, OscillatorState> state_;
  double norm_ = 1.0;
};

inline MomentumPdf momentum_pdf(const PhysicalConfig& cfg, const BoxState& st) {
  return MomentumPdf(cfg, st);
}

inline MomentumPdf sling_momentum_pdf(const PhysicalConfig& cfg, const OscillatorState& st) {
  return MomentumPdf(cfg, st);
}

struct MomentEstimate {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

// Closed tails of the box pdf beyond the cutoff, in the scaled variable
// w = a p / hbar with c = N pi:
//   J2(u) = int_u^inf w^2 (w^2-c^2)^{-2} dw,  J0(u) = int_u^inf (w^2-c^2)^{-2} dw.
inline double tail_J2(double u, double c) {
  return u / (2.0 * (u * u - c * c)) + std::log((u + c) / (u - c)) / (4.0 * c);
}
inline double tail_J0(double u, double c) {
  return (2.0 * u / (u * u - c * c) + std::log((u - c) / (u + c)) / c) / (4.0 * c * c);
}

// Angular average of the planar pdf at radius rho by an equally spaced
// trapezoid, exact for the trig polynomial the Hermite factors produce.
inline double sling_angular_mean(const MomentumPdf& pdf, const OscillatorState& st, double rho) {
  const int m = 2 * (st.n1 + st.n2) + 9;
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double th = two_pi * j / m;
    acc += pdf(rho * std::cos(th), rho * std::sin(th));
  }
  return acc / m;
}

inline MomentEstimate box_pdf_moment(const MomentumPdf& pdf, const BoxState& st, int order) {
  const PhysicalConfig& cfg = pdf.config();
  const double a = cfg.width;
  const double h = cfg.hbar;
  const int N = st.N;
  const double c = N * pi;
  const double p_sing = c * h / a;

  // Brute truncation cannot reach 1e-8 on the second moment (the tail decays
  // like 1/P); instead the smooth half of trig^2 = (1 -+ cos)/2 is integrated
  // past the cutoff in closed form and the oscillatory half is bounded by
  // parts and charged to the error.
  const double P = std::max(12000.0 * h / a, 40.0 * p_sing);
  const double u = a * P / h;
  const double scale = std::pow(p_sing, order);

  auto f = [&](double p) { return std::pow(p, order) * pdf(p); };
  QuadratureOptions opt;
  opt.rel_tol = 1e-9;
  opt.abs_tol = 1e-11 * std::max(scale, 1e-30);
  opt.period_hint = two_pi * h / a;
  const QuadratureResult r = adaptive_quadrature(f, -P, P, opt);
  if (!r.converged) throw QuadratureError("pdf_moment", r.error_estimate);

  MomentEstimate out{r.value.real(), r.error_estimate};
  const double d2 = (u * u - c * c) * (u * u - c * c);
  switch (order) {
    case 0:
      out.value += 4.0 * pi * N * N * tail_J0(u, c);
      out.error += 16.0 * pi * N * N / d2;
      break;
    case 1:
      // Odd integrand: the smooth tails of the two sides cancel exactly.
      out.error += 16.0 * pi * N * N * h * u / (a * d2);
      break;
    case 2:
      out.value += 4.0 * pi * h * h * N * N * tail_J2(u, c) / (a * a);
      out.error += 16.0 * pi * N * N * h * h * u * u / (a * a * d2);
      break;
  }
  return out;
}

inline MomentEstimate sling_pdf_moment(const MomentumPdf& pdf, const OscillatorState& st,
                                       int order) {
  const PhysicalConfig& cfg = pdf.config();
  if (order == 1) return {0.0, 0.0};  // odd in each component, exact zero by parity

  const double s = std::sqrt(cfg.mass * cfg.omega * cfg.hbar);
  const double cut = s * (std::sqrt(2.0 * (st.n1 + st.n2) + 1.0) + 9.0);
  auto f = [&](double rho) {
    const double w = (order == 2) ? rho * rho : 1.0;
    return two_pi * rho * w * sling_angular_mean(pdf, st, rho);
  };
  QuadratureOptions opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-14 * std::pow(s, order);
  opt.period_hint = cut / 8.0;
  const QuadratureResult r = adaptive_quadrature(f, 0.0, cut, opt);
  if (!r.converged) throw QuadratureError("pdf_moment", r.error_estimate);
  // Gaussian truncation of the radial integral is far below double noise.
  return {r.value.real(), r.error_estimate + 1e-15 * std::pow(s, order)};
}

}  // namespace detail

// Moments of the momentum distribution: order 0 (total mass, equal to 1),
// order 1 (vanishes by symmetry) and order 2 (<p^2>; N^2 pi^2 hbar^2 / a^2
// for the box level, m omega hbar (n1 + n2 + 1) summed over components for
// the oscillator level).
inline MomentEstimate pdf_moment_estimate(const MomentumPdf& pdf, int order) {
  if (order < 0 || order > 2)
    throw std::invalid_argument("pdf_moment: order must be 0, 1 or 2");
  if (const BoxState* st = std::get_if<BoxState>(&pdf.descriptor()))
    return detail::box_pdf_moment(pdf, *st, order);
  return detail::sling_pdf_moment(pdf, std::get<OscillatorState>(pdf.descriptor()), order);
}

inline double pdf_moment(const MomentumPdf& pdf, int order) {
  return pdf_moment_estimate(pdf, order).value;
}

namespace detail {

// Tail of int_K^inf e^{i p rho / hbar} / D(p) dp with D(p) = (ap/hbar)^2 - (N pi)^2.
// rho = 0 integrates exactly (log form); fast phases get a two-term
// integration-by-parts value whose residual is returned alongside; slow
// nonzero phases are left uncorrected and fully charged to the error.
struct TailPair {
  complex value{};
  double residual = 0.0;
};

inline TailPair evolution_tail_pair(double rho, double K, double a, double hbar, int N) {
  const double c = N * pi;
  const double u = a * K / hbar;
  const double D = (u - c) * (u + c);
  const double f = 1.0 / D;
  const double fp = -2.0 * (a / hbar) * (a / hbar) * K / (D * D);
  const double t0_log = hbar * std::log((u + c) / (u - c)) / (2.0 * a * c);

  TailPair out;
  if (rho == 0.0) {
    out.value = 2.0 * t0_log;  // T(rho) + T(-rho) collapse onto the exact form
    return out;
  }
  if (std::abs(rho) * K / hbar >= 20.0) {
    auto asym = [&](double r) {
      return std::exp(complex(0.0, K * r / hbar)) *
             (complex(0.0, hbar * f / r) - hbar * hbar * fp / (r * r));
    };
    out.value = asym(rho) + asym(-rho);
    out.residual = 2.0 * (hbar / rho) * (hbar / rho) * std::abs(fp);
    return out;
  }
  out.residual = 2.0 * t0_log;  // |T(+-rho)| <= T(0); no value, honest bound
  return out;
}

}  // namespace detail

// Amplitude of the freed box state at position r, time t >= 0:
//   Psi(r, t) = int g(p) e^{i p r / hbar - i p^2 t / (2 m hbar)} dp,
//   g(p) = psi~_N(p / hbar) / (hbar sqrt(2 pi)).
// The cutoff-induced remainder is folded into error_estimate; at t = 0 the
// two plane-wave pieces of psi~ get their truncated tails restored by parts
// (exact log form at r = 0 and r = a), which holds the grid error near 1e-9.
inline QuadratureResult free_evolution(const PhysicalConfig& cfg, const BoxState& st, double r,
                                       double t, double tol = 1e-6) {
  cfg.validate();
  st.validate();
  if (t < 0.0) throw std::invalid_argument("free_evolution: time must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("free_evolution: tol must be positive");
  const double a = cfg.width;
  const double h = cfg.hbar;
  const double m = cfg.mass;
  const int N = st.N;
  const double amp = N * std::sqrt(pi * a) / (h * std::sqrt(two_pi));

  if (t == 0.0) {
    const double K = (6000.0 + 40.0 * N * pi) * h / a;
    auto f = [&](double p) {
      return fourier_amplitude(cfg, st, p / h) / (h * std::sqrt(two_pi)) *
             std::exp(complex(0.0, p * r / h));
    };
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 0.02 * tol / std::sqrt(a);
    opt.period_hint = two_pi * h / (std::abs(r) + a);
    QuadratureResult out = adaptive_quadrature(f, -K, K, opt);

    const detail::TailPair at_r = detail::evolution_tail_pair(r, K, a, h, N);
    const detail::TailPair at_ra = detail::evolution_tail_pair(r - a, K, a, h, N);
    const double parity = (N % 2 == 0) ? 1.0 : -1.0;
    out.value += amp * (parity * at_ra.value - at_r.value);
    out.error_estimate += amp * (at_r.residual + at_ra.residual);
    return out;
  }

  const double k_tail = std::cbrt(4.0 * amp * h * h * h * m / (a * a * t * tol));
  const double K = 1.3 * m * std::abs(r) / t + k_tail + 40.0 * N * pi * h / a;
  auto f = [&](double p) {
    return fourier_amplitude(cfg, st, p / h) / (h * std::sqrt(two_pi)) *
           std::exp(complex(0.0, p * r / h - p * p * t / (2.0 * m * h)));
  };
  QuadratureOptions opt;
  opt.rel_tol = 1e-9;
  opt.abs_tol = 0.05 * tol / std::sqrt(a);
  opt.period_hint = two_pi / ((std::abs(r) + a) / h + K * t / (m * h));
  QuadratureResult out = adaptive_quadrature(f, -K, K, opt);

  // Chirped tail beyond the cutoff, first-derivative bound; reported only.
  const double u = a * K / h;
  const double fK = 1.0 / ((u - N * pi) * (u + N * pi));
  out.error_estimate += 8.0 * amp * h * fK / (t * K / m - std::abs(r));
  return out;
}

// Planar oscillator level in position space (real-valued),
//   phi(x, y) = C e^{-m omega (x^2+y^2) / (2 hbar)} H_n1(x/l) H_n2(y/l),
// l = sqrt(hbar / (m omega)), unit L^2 norm.
inline double sling_state(const PhysicalConfig& cfg, const OscillatorState& st, double x,
                          double y) {
  cfg.validate();
  st.validate();
  const double il = std::sqrt(cfg.mass * cfg.omega / cfg.hbar);
  const double c2 = cfg.mass * cfg.omega / (pi * cfg.hbar) /
                    (std::pow(2.0, st.n1 + st.n2) * factorial(st.n1) * factorial(st.n2));
  return std::sqrt(c2) * std::exp(-0.5 * il * il * (x * x + y * y)) * hermite(st.n1, il * x) *
         hermite(st.n2, il * y);
}

// Probability that the freed oscillator level is detected with kinetic
// energy p^2 / (2m) at most E: the pdf mass of the disk |p| <= sqrt(2 m E),
// by adaptive radial quadrature over the exact angular averages.
inline MomentEstimate sling_impact_cdf_estimate(const PhysicalConfig& cfg,
                                                const OscillatorState& st, double energy) {
  cfg.validate();
  st.validate();
  if (energy <= 0.0) return {0.0, 0.0};
  const MomentumPdf pdf = sling_momentum_pdf(cfg, st);
  const double s = std::sqrt(cfg.mass * cfg.omega * cfg.hbar);
  const int nsum = st.n1 + st.n2;
  const double radius = std::sqrt(2.0 * cfg.mass * energy);
  const double cut = s * (std::sqrt(2.0 * nsum + 1.0) + 9.0);
  const double upper = std::min(radius, cut);

  auto f = [&](double rho) { return two_pi * rho * detail::sling_angular_mean(pdf, st, rho); };
  QuadratureOptions opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-14;
  opt.period_hint = upper / 8.0;
  const QuadratureResult r = adaptive_quadrature(f, 0.0, upper, opt);
  if (!r.converged) throw QuadratureError("sling_impact_cdf", r.error_estimate);

  MomentEstimate out{std::clamp(r.value.real(), 0.0, 1.0), r.error_estimate};
  if (radius > cut) {
    // Mass beyond the Gaussian cutoff: H_n(v)^2 <= 2^{2n+2} v^{2n} out there,
    // and the incomplete-gamma tail is under 2 e^{-t0} t0^{n} for t0 >= 2n.
    const double t0 = (cut / s) * (cut / s);
    out.error += std::pow(2.0, nsum + 5) * std::pow(t0, nsum) * std::exp(-t0) /
                 (factorial(st.n1) * factorial(st.n2));
  }
  return out;
}

inline double sling_impact_cdf(const PhysicalConfig& cfg, const OscillatorState& st,
                               double energy) {
  return sling_impact_cdf_estimate(cfg, st, energy).value;
}

}  // namespace boxmom
