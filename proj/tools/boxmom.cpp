// Command-line front end. Prints one output record per invocation on stdout
// (CSV by default, JSON on request); diagnostics for humans go to stderr.
// Exit codes: 0 success, 2 bad flags or parameters, 3 quadrature failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxmom/commands.hpp"

namespace {

using namespace boxmom;
using namespace boxmom::cli;

int emit(const OutputRecord& rec, const std::string& format) {
  std::cout << (format == "json" ? to_json(rec) : to_csv(rec));
  return 0;
}

void add_common(CLI::App* sub, CommonParams& c) {
  sub->fallthrough();  // lets --format trail the subcommand arguments
  sub->add_option("--hbar", c.hbar, "Planck constant over 2 pi")->capture_default_str();
  sub->add_option("--mass", c.mass, "particle mass")->capture_default_str();
  sub->add_option("--width", c.width, "interval length a")->capture_default_str();
  sub->add_option("--omega", c.omega, "oscillator trap frequency")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string format = "csv";
  bool env_format_bad = false;
  if (const char* env = std::getenv("BOXMOM_FORMAT")) {
    format = env;
    if (format != "csv" && format != "json") env_format_bad = true;
  }

  CLI::App app{"self-adjoint momentum extensions on an interval: spectra, expansions,\n"
               "moving frames, switch-off release and the planar sling model"};
  app.require_subcommand(1);
  // BOXMOM_FORMAT is read manually above so that an invalid value is rejected
  // even when the flag is absent; the flag, when given, wins.
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SpectrumParams sp;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "momentum eigenvalues of one extension (--sigma) or energy lines of a "
                  "named boundary condition (--bc)");
  add_common(spectrum, sp.common);
  double sigma_in = 0.0, frame_in = 0.0;
  CLI::Option* o_sigma = spectrum->add_option("--sigma", sigma_in, "boundary twist in [0, 2 pi)");
  CLI::Option* o_bc =
      spectrum->add_option("--bc", sp.bc, "dirichlet, periodic or antiperiodic");
  o_sigma->excludes(o_bc);
  o_bc->excludes(o_sigma);
  spectrum->add_option("--count", sp.count, "number of lines")->capture_default_str();

  ExpandParams ep;
  CLI::App* expand = app.add_subcommand(
      "expand", "momentum-representation coefficients of a well level, in the lab "
                "(--sigma) or in a moving frame (--frame, --tau)");
  add_common(expand, ep.common);
  expand->add_option("--N", ep.N, "well quantum number")->capture_default_str();
  CLI::Option* e_sigma = expand->add_option("--sigma", sigma_in, "boundary twist in [0, 2 pi)");
  CLI::Option* e_frame = expand->add_option("--frame", frame_in, "observer velocity V");
  e_sigma->excludes(e_frame);
  e_frame->excludes(e_sigma);
  expand->add_option("--tau", ep.tau, "moving-frame time")->capture_default_str();
  expand->add_option("--M", ep.M, "truncation: n runs over [-M, M]")->capture_default_str();

  ReleaseParams rp;
  std::string release_grid;
  CLI::App* release = app.add_subcommand(
      "release", "momentum pdf and moments after the sudden switch-off; --time adds the "
                 "freed position density on a fixed 101-point grid across the box");
  add_common(release, rp.common);
  release->add_option("--N", rp.N, "well quantum number")->capture_default_str();
  release->add_option("--grid", release_grid, "momentum grid lo:hi:npoints (default -20:20:401)");
  release->add_option("--time", rp.time, "release time t >= 0");

  SlingParams lp;
  std::string sling_grid;
  CLI::App* sling = app.add_subcommand(
      "sling", "planar-oscillator release: angular mean of the momentum pdf on a radial "
               "grid and the impact-energy CDF");
  add_common(sling, lp.common);
  sling->add_option("--n1", lp.n1, "oscillator degree along x")->capture_default_str();
  sling->add_option("--n2", lp.n2, "oscillator degree along y")->capture_default_str();
  sling->add_option("--energy", lp.energy, "impact energy bound (default: the level energy)");
  sling->add_option("--grid", sling_grid,
                    "radial momentum grid lo:hi:npoints (default 0:6*sqrt(m omega hbar):121)");

  ValidateBcParams vp;
  std::vector<double> entries;
  CLI::App* validate = app.add_subcommand(
      "validate-bc", "check kinetic-energy boundary matrices for self-adjointness");
  validate->fallthrough();
  CLI::Option* v_preset =
      validate->add_option("--preset", vp.preset, "dirichlet, periodic or antiperiodic");
  CLI::Option* v_entries = validate->add_option(
      "--entries", entries,
      "16 reals: alpha then beta, rows a11 a12 a21 a22 as re/im pairs");
  v_entries->expected(16);
  v_preset->excludes(v_entries);
  v_entries->excludes(v_preset);
  validate->add_option("--tol", vp.tol, "residual tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (env_format_bad && !app.count("--format")) {
    std::cerr << "BOXMOM_FORMAT must be csv or json\n";
    return 2;
  }

  try {
    if (*spectrum) {
      if (spectrum->count("--sigma")) sp.sigma = sigma_in;
      return emit(cmd_spectrum(sp), format);
    }
    if (*expand) {
      if (expand->count("--sigma")) ep.sigma = sigma_in;
      if (expand->count("--frame")) ep.frame = frame_in;
      return emit(cmd_expand(ep), format);
    }
    if (*release) {
      if (release->count("--grid")) rp.grid = GridSpec::parse(release_grid);
      return emit(cmd_release(rp), format);
    }
    if (*sling) {
      if (sling->count("--grid")) lp.grid = GridSpec::parse(sling_grid);
      return emit(cmd_sling(lp), format);
    }
    if (*validate) {
      if (validate->count("--entries")) {
        std::array<double, 16> e{};
        std::copy(entries.begin(), entries.end(), e.begin());
        vp.entries = e;
      }
      return emit(cmd_validate_bc(vp), format);
    }
  } catch (const QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // no subcommand matched; require_subcommand should prevent this
}
