#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "boxmom/galilei.hpp"
#include "boxmom/record.hpp"
#include "boxmom/release.hpp"

namespace boxmom::cli {

struct CommonParams {
  double hbar = 1.0;
  double mass = 1.0;
  double width = 1.0;
  double omega = 1.0;
};

inline PhysicalConfig to_config(const CommonParams& c) {
  PhysicalConfig cfg{c.hbar, c.mass, c.width, c.omega};
  cfg.validate();
  return cfg;
}

// Inclusive uniform grid written as lo:hi:npoints.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int npoints = 1;

  static GridSpec parse(const std::string& text) {
    GridSpec g;
    const auto c1 = text.find(':');
    const auto c2 = (c1 == std::string::npos) ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
      throw std::invalid_argument("grid must be lo:hi:npoints");
    size_t used = 0;
    try {
      g.lo = std::stod(text.substr(0, c1), &used);
      if (used != c1) throw std::invalid_argument("");
      g.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &used);
      if (used != c2 - c1 - 1) throw std::invalid_argument("");
      g.npoints = std::stoi(text.substr(c2 + 1), &used);
      if (used != text.size() - c2 - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("grid must be lo:hi:npoints with numeric fields");
    }
    g.validate();
    return g;
  }

  void validate() const {
    if (npoints < 1 || npoints > 100000)
      throw std::invalid_argument("grid npoints must lie in [1, 100000]");
    if (npoints == 1 && lo != hi)
      throw std::invalid_argument("grid with one point needs lo == hi");
    if (npoints > 1 && !(hi > lo)) throw std::invalid_argument("grid needs hi > lo");
  }

  std::vector<double> points() const {
    std::vector<double> xs(npoints);
    for (int j = 0; j < npoints; ++j)
      xs[j] = (npoints == 1) ? lo : lo + (hi - lo) * j / (npoints - 1.0);
    return xs;
  }

  std::string str() const {
    return format_double(lo) + ":" + format_double(hi) + ":" + std::to_string(npoints);
  }
};

namespace detail_cli {

inline void echo_common(OutputRecord& rec, const CommonParams& c) {
  rec.params.emplace_back("hbar", format_double(c.hbar));
  rec.params.emplace_back("mass", format_double(c.mass));
  rec.params.emplace_back("width", format_double(c.width));
  rec.params.emplace_back("omega", format_double(c.omega));
}

}  // namespace detail_cli

struct SpectrumParams {
  CommonParams common;
  std::optional<double> sigma;
  std::optional<std::string> bc;
  int count = 10;
};

inline NamedBC parse_named_bc(const std::string& name) {
  if (name == "dirichlet") return NamedBC::Dirichlet;
  if (name == "periodic") return NamedBC::Periodic;
  if (name == "antiperiodic") return NamedBC::Antiperiodic;
  throw std::invalid_argument("unknown preset '" + name +
                              "' (expected dirichlet, periodic or antiperiodic)");
}

inline const char* waveform_name(Waveform w) {
  switch (w) {
    case Waveform::Constant: return "const";
    case Waveform::Sin: return "sin";
    case Waveform::Cos: return "cos";
  }
  return "?";
}

// spectrum --sigma s | --bc preset: momentum eigenvalues of one extension,
// or the kinetic-energy lines of a named boundary condition.
inline OutputRecord cmd_spectrum(const SpectrumParams& p) {
  if (p.sigma.has_value() == p.bc.has_value())
    throw std::invalid_argument("spectrum needs exactly one of --sigma and --bc");
  if (p.count < 1 || p.count > 10000)
    throw std::invalid_argument("spectrum count must lie in [1, 10000]");
  const PhysicalConfig cfg = to_config(p.common);

  OutputRecord rec;
  rec.command = "spectrum";
  detail_cli::echo_common(rec, p.common);

  if (p.sigma) {
    const SigmaExtension ext(*p.sigma);
    rec.params.emplace_back("sigma", format_double(*p.sigma));
    rec.params.emplace_back("count", std::to_string(p.count));
    // The count eigenvalues closest to zero momentum, ascending; ties on
    // |momentum| resolve toward the lower one.
    std::vector<int> ns;
    for (int n = -(p.count + 1); n <= p.count + 1; ++n) ns.push_back(n);
    std::stable_sort(ns.begin(), ns.end(), [&](int x, int y) {
      const double px = sigma_eigenvalue(cfg, ext, x);
      const double py = sigma_eigenvalue(cfg, ext, y);
      return std::abs(px) != std::abs(py) ? std::abs(px) < std::abs(py) : px < py;
    });
    ns.resize(p.count);
    std::sort(ns.begin(), ns.end());
    rec.columns = {"index", "momentum", "wavenumber"};
    for (int n : ns) {
      const double mom = sigma_eigenvalue(cfg, ext, n);
      rec.rows.push_back({static_cast<double>(n), mom, mom / cfg.hbar});
    }
    rec.diagnostics.emplace_back("level_spacing", two_pi * cfg.hbar / cfg.width);
    rec.diagnostics.emplace_back("canonical_sigma", ext.sigma);
    return rec;
  }

  rec.params.emplace_back("bc", *p.bc);
  rec.params.emplace_back("count", std::to_string(p.count));
  const auto lines = hamiltonian_spectrum(cfg, parse_named_bc(*p.bc), p.count);
  rec.columns = {"index", "energy", "frequency", "kind", "degeneracy"};
  for (size_t i = 0; i < lines.size(); ++i)
    rec.rows.push_back({static_cast<double>(i + 1), lines[i].energy, lines[i].frequency,
                        std::string(waveform_name(lines[i].waveform)),
                        static_cast<double>(lines[i].degeneracy)});
  return rec;
}

struct ExpandParams {
  CommonParams common;
  int N = 1;
  std::optional<double> sigma;
  std::optional<double> frame;  // observer velocity
  double tau = 0.0;
  int M = 50;
};

// expand --N n [--sigma s | --frame V --tau t] --M m: momentum-representation
// coefficients of a well level, in the lab for one extension, or in a
// uniformly moving frame.
inline OutputRecord cmd_expand(const ExpandParams& p) {
  if (p.sigma && p.frame)
    throw std::invalid_argument("expand takes --sigma or --frame, not both");
  const PhysicalConfig cfg = to_config(p.common);
  const BoxState st{p.N};

  OutputRecord rec;
  rec.command = "expand";
  detail_cli::echo_common(rec, p.common);
  rec.params.emplace_back("N", std::to_string(p.N));

  rec.columns = {"n", "momentum", "re", "im", "modulus_sq"};
  if (p.frame) {
    const BoostParams boost{*p.frame};
    rec.params.emplace_back("frame", format_double(*p.frame));
    rec.params.emplace_back("tau", format_double(p.tau));
    rec.params.emplace_back("M", std::to_string(p.M));
    const MovingExpansion exp = moving_expansion(cfg, st, boost, p.tau, p.M);
    for (const auto& [n, c] : exp.coefficients)
      rec.rows.push_back({static_cast<double>(n), moving_momentum_value(cfg, *p.frame, n),
                          c.real(), c.imag(), std::norm(c)});
    rec.diagnostics.emplace_back("parseval_sum", exp.parseval_sum());
    rec.diagnostics.emplace_back("induced_sigma", sigma_of_velocity(cfg, *p.frame).sigma);
    return rec;
  }

  const SigmaExtension ext(p.sigma.value_or(0.0));
  rec.params.emplace_back("sigma", format_double(p.sigma.value_or(0.0)));
  rec.params.emplace_back("M", std::to_string(p.M));
  const SigmaExpansion exp = expand_state(cfg, st, ext, p.M);
  for (const auto& [n, c] : exp.coefficients)
    rec.rows.push_back({static_cast<double>(n), sigma_eigenvalue(cfg, ext, n), c.real(), c.imag(),
                        std::norm(c)});
  rec.diagnostics.emplace_back("parseval_sum", exp.parseval_sum());
  rec.diagnostics.emplace_back("tail_bound", exp.tail_bound);
  rec.diagnostics.emplace_back("resonance_case",
                               static_cast<double>(static_cast<int>(exp.resonance)));
  return rec;
}

struct ReleaseParams {
  CommonParams common;
  int N = 1;
  GridSpec grid{-20.0, 20.0, 401};
  std::optional<double> time;
};

// release --N n [--grid lo:hi:npoints] [--time t]: momentum pdf after the
// sudden switch-off, its moments, and optionally the freed position density
// at time t on a fixed 101-point grid across the original box.
inline OutputRecord cmd_release(const ReleaseParams& p) {
  const PhysicalConfig cfg = to_config(p.common);
  const BoxState st{p.N};
  const MomentumPdf pdf = momentum_pdf(cfg, st);

  OutputRecord rec;
  rec.command = "release";
  detail_cli::echo_common(rec, p.common);
  rec.params.emplace_back("N", std::to_string(p.N));
  rec.params.emplace_back("grid", p.grid.str());
  if (p.time) rec.params.emplace_back("time", format_double(*p.time));

  rec.columns = {"section", "argument", "value", "error"};
  for (double x : p.grid.points()) rec.rows.push_back({std::string("pdf"), x, pdf(x), 0.0});

  if (p.time) {
    const GridSpec xgrid{0.0, cfg.width, 101};
    for (double r : xgrid.points()) {
      const QuadratureResult q = free_evolution(cfg, st, r, *p.time);
      if (!q.converged) throw QuadratureError("release density", q.error_estimate);
      const double absval = std::abs(q.value);
      rec.rows.push_back({std::string("density"), r, absval * absval,
                          2.0 * absval * q.error_estimate + q.error_estimate * q.error_estimate});
    }
  }

  const MomentEstimate m0 = pdf_moment_estimate(pdf, 0);
  const MomentEstimate m1 = pdf_moment_estimate(pdf, 1);
  const MomentEstimate m2 = pdf_moment_estimate(pdf, 2);
  rec.diagnostics.emplace_back("norm", m0.value);
  rec.diagnostics.emplace_back("norm_error", m0.error);
  rec.diagnostics.emplace_back("mean_momentum", m1.value);
  rec.diagnostics.emplace_back("mean_momentum_error", m1.error);
  rec.diagnostics.emplace_back("second_moment", m2.value);
  rec.diagnostics.emplace_back("second_moment_error", m2.error);
  return rec;
}

struct SlingParams {
  CommonParams common;
  int n1 = 0;
  int n2 = 0;
  std::optional<double> energy;
  std::optional<GridSpec> grid;
};

// sling --n1 a --n2 b [--energy E] [--grid lo:hi:npoints]: angular mean of
// the planar release pdf on a radial momentum grid, plus the probability of
// impact energy at most E (default: the level's own energy).
inline OutputRecord cmd_sling(const SlingParams& p) {
  const PhysicalConfig cfg = to_config(p.common);
  const OscillatorState st{p.n1, p.n2};
  st.validate();
  const MomentumPdf pdf = sling_momentum_pdf(cfg, st);
  const double energy = p.energy.value_or(oscillator_energy(cfg, st));
  if (p.energy && !(*p.energy >= 0.0))
    throw std::invalid_argument("sling energy must be >= 0");
  const double s = std::sqrt(cfg.mass * cfg.omega * cfg.hbar);
  const GridSpec grid = p.grid.value_or(GridSpec{0.0, 6.0 * s, 121});
  grid.validate();

  OutputRecord rec;
  rec.command = "sling";
  detail_cli::echo_common(rec, p.common);
  rec.params.emplace_back("n1", std::to_string(p.n1));
  rec.params.emplace_back("n2", std::to_string(p.n2));
  rec.params.emplace_back("energy", format_double(energy));
  rec.params.emplace_back("grid", grid.str());

  rec.columns = {"p", "density_angular_mean"};
  for (double rho : grid.points())
    rec.rows.push_back({rho, detail::sling_angular_mean(pdf, st, std::abs(rho))});

  const MomentEstimate cdf = sling_impact_cdf_estimate(cfg, st, energy);
  rec.diagnostics.emplace_back("impact_cdf", cdf.value);
  rec.diagnostics.emplace_back("impact_cdf_error", cdf.error);
  rec.diagnostics.emplace_back("level_energy", oscillator_energy(cfg, st));
  rec.diagnostics.emplace_back("normalization_constant", pdf.normalization_constant());
  return rec;
}

struct ValidateBcParams {
  std::optional<std::string> preset;
  // Row-major re/im pairs: a11 a12 a21 a22, then the same for beta.
  std::optional<std::array<double, 16>> entries;
  double tol = 1e-12;
};

inline OutputRecord cmd_validate_bc(const ValidateBcParams& p) {
  if (p.preset.has_value() == p.entries.has_value())
    throw std::invalid_argument("validate-bc needs exactly one of --preset and --entries");
  if (!(p.tol > 0.0)) throw std::invalid_argument("validate-bc tol must be positive");

  HamiltonianBC bc;
  OutputRecord rec;
  rec.command = "validate-bc";
  if (p.preset) {
    bc = named_bc_matrices(parse_named_bc(*p.preset));
    rec.params.emplace_back("preset", *p.preset);
  } else {
    const auto& e = *p.entries;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        bc.alpha[i][j] = complex(e[4 * i + 2 * j], e[4 * i + 2 * j + 1]);
        bc.beta[i][j] = complex(e[8 + 4 * i + 2 * j], e[8 + 4 * i + 2 * j + 1]);
      }
    std::string echoed;
    for (int i = 0; i < 16; ++i) {
      if (i) echoed += ' ';
      echoed += format_double(e[i]);
    }
    rec.params.emplace_back("entries", echoed);
  }
  rec.params.emplace_back("tol", format_double(p.tol));

  rec.columns = {"row", "residual", "pass"};
  bool all = true;
  for (int row = 0; row < 2; ++row) {
    const double res = hamiltonian_bc_residual(bc, row);
    const bool ok = res <= p.tol;
    all = all && ok;
    rec.rows.push_back({static_cast<double>(row + 1), res, ok ? 1.0 : 0.0});
  }
  rec.diagnostics.emplace_back("self_adjoint", all ? 1.0 : 0.0);
  return rec;
}

}  // namespace boxmom::cli
