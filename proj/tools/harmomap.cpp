// harmomap: command-line front end for certifying, scanning and drawing
// planar harmonic maps. Every subcommand is a thin adapter over the library.
//
// Exit codes: 0 certified/passed, 1 not-certified/violated, 2 usage or
// hypothesis error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "harmomap/convolution.hpp"
#include "harmomap/criteria.hpp"
#include "harmomap/error.hpp"
#include "harmomap/families.hpp"
#include "harmomap/geometry.hpp"
#include "harmomap/render.hpp"
#include "harmomap/report.hpp"

namespace {

using namespace harmomap;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

/// Raised for bad flag combinations that CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Settings that may come from --config and are overridden by flags.
struct Settings {
  std::vector<double> radii;
  std::size_t angles = 1024;
  std::size_t order = kDefaultHypergeometricOrder;
  std::size_t series_truncation = 20000;
  bool refined = false;
};

struct MapSource {
  std::string family;
  std::string coeffs;
  int n = 2;
  double a = 1.0;
  double a_im = 0.0;
  double b = 1.0;
  double c = 0.0;
  double alpha = 0.0;
  double alpha_im = 0.0;
  bool conjugate = false;
  int m = 0;
  std::vector<double> psi{0.0, 0.0, 0.0};
  double theta = 0.0;
  std::vector<double> q{1.0};
  double phi = 0.0;
  double beta = 0.0;
  double t = 0.0;
};

void add_source_options(CLI::App* cmd, MapSource& src) {
  cmd->add_option("--family", src.family,
                  "identity, mocanu, fig1, fig2, koebe, conjecture, limit, suffridge, T41a..C46b");
  cmd->add_option("--coeffs", src.coeffs, "coefficient file {\"h\": [[re,im],...], \"b\": [[re,im],...]}");
  cmd->add_option("--n", src.n, "degree parameter (mocanu, conjecture, suffridge)");
  cmd->add_option("--a", src.a, "hypergeometric a, or the mocanu coefficient");
  cmd->add_option("--a-im", src.a_im, "imaginary part of a (conjugate pair)");
  cmd->add_option("--b", src.b, "hypergeometric b");
  cmd->add_option("--c", src.c, "hypergeometric c");
  cmd->add_option("--alpha", src.alpha, "real part of alpha");
  cmd->add_option("--alpha-im", src.alpha_im, "imaginary part of alpha");
  cmd->add_flag("--conjugate", src.conjugate, "use b = conj(a)");
  cmd->add_option("--m", src.m, "polynomial case a = b = -m");
  cmd->add_option("--psi", src.psi, "three angles for the limit mapping")->expected(3);
  cmd->add_option("--theta", src.theta, "dilatation angle for the limit mapping");
  cmd->add_option("--q", src.q, "real coefficients of Q, constant term first (suffridge)");
  cmd->add_option("--phi", src.phi, "suffridge phi");
  cmd->add_option("--beta", src.beta, "suffridge beta");
  cmd->add_option("--t", src.t, "suffridge t in [0, 1]");
}

void add_setting_options(CLI::App* cmd, Settings& settings) {
  cmd->add_option("--radii", settings.radii, "scan or render radii");
  cmd->add_option("--angles,--samples", settings.angles, "angles per circle");
  cmd->add_option("--order", settings.order, "truncation order for infinite series");
  cmd->add_option("--series", settings.series_truncation, "truncation N for the series cross-check");
  cmd->add_flag("--refined", settings.refined, "add radii 0.995 and 0.999 to the default grid");
}

/// Fills settings that were not given on the command line from the config file.
void apply_config(const std::string& path, CLI::App* cmd, Settings& settings) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot open config file '{}'", path));
  json config;
  try {
    in >> config;
  } catch (const json::parse_error& e) {
    throw UsageError(fmt::format("malformed config file '{}': {}", path, e.what()));
  }
  const auto unset = [&](const char* flag) {
    const auto* opt = cmd->get_option_no_throw(flag);
    return opt == nullptr || opt->count() == 0;
  };
  if (config.contains("radii") && unset("--radii")) settings.radii = config["radii"].get<std::vector<double>>();
  if (config.contains("angles") && unset("--angles")) settings.angles = config["angles"].get<std::size_t>();
  if (config.contains("order") && unset("--order")) settings.order = config["order"].get<std::size_t>();
  if (config.contains("series_truncation") && unset("--series")) {
    settings.series_truncation = config["series_truncation"].get<std::size_t>();
  }
  if (config.contains("refined") && unset("--refined")) settings.refined = config["refined"].get<bool>();
}

bool is_hyper_family(const std::string& name) {
  for (auto f : all_hyper_families()) {
    if (to_string(f) == name) return true;
  }
  return false;
}

FamilySpec hyper_spec(const MapSource& src) {
  if (!(src.c > 0.0)) throw HypothesisError(fmt::format("{} needs --c > 0", src.family));
  const auto family = parse_hyper_family(src.family);
  const Complex alpha(src.alpha, src.alpha_im);
  if (src.m > 0) return {family, HypergeometricParams::negative_integer(src.m, src.c), alpha};
  if (src.conjugate) return {family, HypergeometricParams::conjugate_pair(Complex(src.a, src.a_im), src.c), alpha};
  return {family, HypergeometricParams::real_pair(src.a, src.b, src.c), alpha};
}

HarmonicMap build_map(const MapSource& src, const Settings& settings) {
  if (!src.coeffs.empty()) {
    if (!src.family.empty()) throw UsageError("give either --family or --coeffs, not both");
    return read_coefficients(src.coeffs);
  }
  const std::string& name = src.family;
  if (name.empty()) throw UsageError("a map source is required: --family NAME or --coeffs FILE");
  if (name == "identity") return HarmonicMap::identity();
  if (name == "mocanu") return mocanu_example(src.n, src.a).map;
  if (name == "fig1") return mocanu_example(2, 0.3).map;
  if (name == "fig2") return figure_two_map();
  if (name == "koebe") return harmonic_koebe(settings.order);
  if (name == "conjecture") return conjectured_starlike(src.n);
  if (name == "limit") return limit_mapping({src.psi[0], src.psi[1], src.psi[2]}, src.theta, settings.order);
  if (name == "suffridge") {
    std::vector<Complex> q(src.q.begin(), src.q.end());
    const std::size_t hat = src.n >= 2 ? static_cast<std::size_t>(src.n) - 2 : 0;
    const PolynomialSpec spec(std::move(q), std::max(hat, src.q.size() - 1));
    return suffridge_family(spec, {src.phi, src.beta, src.t, static_cast<std::size_t>(std::max(src.n, 0))}).map;
  }
  if (is_hyper_family(name)) return hypergeometric_family(hyper_spec(src), settings.order);
  throw UsageError(fmt::format("unknown family '{}'", name));
}

ScanGrid build_grid(const Settings& settings) {
  if (!settings.radii.empty()) return ScanGrid(settings.radii, settings.angles);
  if (settings.refined) return ScanGrid::boundary_refined(settings.angles);
  return ScanGrid(ScanGrid::defaults().radii(), settings.angles);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError(fmt::format("cannot write '{}'", path));
  out << contents;
  if (!out) throw DomainError(fmt::format("failed writing '{}'", path));
}

// ---- certify ---------------------------------------------------------------

struct CertifyArgs {
  MapSource src;
  Settings settings;
  std::string criterion = "auto";
  bool series = false;
  bool as_json = false;
  std::string config;
};

CoefficientRoute parse_route(const std::string& name, const HarmonicMap& f) {
  if (name == "auto") return f.b1() == Complex{} ? CoefficientRoute::kFullyStarlike : CoefficientRoute::kCloseToConvex;
  if (name == "close-to-convex" || name == "lemma12") return CoefficientRoute::kCloseToConvex;
  if (name == "fully-starlike" || name == "lemma13") return CoefficientRoute::kFullyStarlike;
  throw UsageError(fmt::format("unknown criterion '{}' (expected auto, close-to-convex or fully-starlike)", name));
}

int run_certify(const CertifyArgs& args) {
  json out;
  Certificate cert;
  if (is_hyper_family(args.src.family) && args.src.coeffs.empty()) {
    const auto spec = hyper_spec(args.src);
    check_hypotheses(spec);
    cert = family_k_closed(spec);
    if (args.series) {
      const auto series = family_k_series(spec, args.settings.series_truncation);
      const double gap = std::abs(series.value - cert.sum_value);
      const double allowed = series.tail_bound.value_or(0.0) + 1e-8;
      cert.notes.push_back(fmt::format("series cross-check: N={} value={:.15g} tail_bound={:.6g} |closed-series|={:.3g} {}",
                                       series.truncation.value_or(0), series.value,
                                       series.tail_bound.value_or(0.0), gap, gap <= allowed ? "agrees" : "DISAGREES"));
    }
  } else {
    const auto f = build_map(args.src, args.settings);
    cert = coefficient_margin(f, parse_route(args.criterion, f));
  }
  if (args.as_json) {
    std::cout << to_json(cert).dump(2) << '\n';
  } else {
    std::cout << format_certificate(cert);
  }
  return cert.certified() ? kExitOk : kExitNegative;
}

// ---- scan ------------------------------------------------------------------

struct ScanArgs {
  MapSource src;
  Settings settings;
  std::string functional = "ch1";
  double lower = -0.5;
  double upper = 1.5;
  std::string csv;
  bool as_json = false;
  std::string config;
};

int run_scan(const ScanArgs& args) {
  const auto f = build_map(args.src, args.settings);
  const auto grid = build_grid(args.settings);
  const ScanOptions options{!args.csv.empty()};
  GridReport report;
  if (args.functional == "ch1") {
    report = scan_ch1(f, grid, options);
  } else if (args.functional == "jacobian") {
    report = scan_jacobian(f, grid, options);
  } else if (args.functional == "starlike") {
    report = scan_fully_starlike(f, grid, options);
  } else if (args.functional == "convexity") {
    report = scan_convexity_functional(f.h(), grid, args.lower, options);
  } else if (args.functional == "convexity-upper") {
    report = scan_convexity_upper(f.h(), grid, args.upper, options);
  } else if (args.functional == "disk-bound") {
    report = starlike_disk_bound_check(f.h(), grid, options);
  } else {
    throw UsageError(fmt::format(
        "unknown functional '{}' (expected ch1, jacobian, starlike, convexity, convexity-upper, disk-bound)",
        args.functional));
  }
  if (!args.csv.empty()) {
    std::ostringstream csv;
    write_scan_csv(csv, report);
    write_file(args.csv, csv.str());
  }
  if (args.as_json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << format_grid_report(report);
  }
  return report.passed() ? kExitOk : kExitNegative;
}

// ---- render ----------------------------------------------------------------

struct RenderArgs {
  MapSource src;
  Settings settings;
  std::string preset;
  std::string svg;
  std::string csv;
  double width = 800.0;
  double height = 800.0;
  std::string config;
};

int run_render(const RenderArgs& args, const CLI::App* cmd) {
  if (args.svg.empty() && args.csv.empty()) throw UsageError("render needs --svg and/or --csv");
  std::optional<RenderPreset> preset;
  if (!args.preset.empty()) {
    if (!args.src.family.empty() || !args.src.coeffs.empty()) throw UsageError("give either --preset or a map source");
    preset = render_preset(args.preset);
  }
  HarmonicMap f = preset ? preset->map : build_map(args.src, args.settings);
  RenderSpec spec = preset ? preset->spec : RenderSpec{{0.2, 0.4, 0.6, 0.8, 0.9, 0.99}, 1024};
  if (!args.settings.radii.empty()) spec.radii = args.settings.radii;
  if (cmd->get_option("--angles")->count() > 0 || !preset) spec.samples_per_circle = args.settings.angles;
  spec.width = args.width;
  spec.height = args.height;

  const auto curves = sample_image_curves(f, spec);
  std::optional<CurveCrossing> crossing;
  if (preset && preset->crossing_radius) {
    crossing = curve_self_intersection(f, *preset->crossing_radius, spec.samples_per_circle);
  }
  if (!args.svg.empty()) write_file(args.svg, render_svg(curves, spec, crossing));
  if (!args.csv.empty()) write_file(args.csv, render_csv(curves));
  std::cout << "curves: " << curves.size() << '\n';
  std::cout << "samples_per_circle: " << spec.samples_per_circle << '\n';
  if (preset) std::cout << "map: " << preset->caption << '\n';
  if (crossing) {
    std::cout << fmt::format("crossing: segments {} and {} at {:.9g}{:+.9g}i\n", crossing->segment_i,
                             crossing->segment_j, crossing->point.real(), crossing->point.imag());
  }
  if (!args.svg.empty()) std::cout << "svg: " << args.svg << '\n';
  if (!args.csv.empty()) std::cout << "csv: " << args.csv << '\n';
  return kExitOk;
}

// ---- threshold ---------------------------------------------------------------

struct ThresholdArgs {
  std::string family;
  double b = 1.0;
  double alpha = 0.0;
  double alpha_im = 0.0;
  bool as_json = false;
};

int run_threshold(const ThresholdArgs& args) {
  const auto family = parse_threshold_family(args.family);
  const Complex alpha(args.alpha, args.alpha_im);
  ThresholdRoots roots;
  try {
    roots = threshold_c(family, args.b, alpha);
  } catch (const DegenerateQuadraticError& e) {
    std::cerr << "error: degenerate quadratic: " << e.what() << '\n';
    return kExitError;
  }
  const auto& q = roots.quadratic;
  const double c = roots.root_plus;
  const double scale = std::abs(q.a2) * c * c + std::abs(q.a1) * std::abs(c) + std::abs(q.a0);
  const double quad_residual = std::abs((q.a2 * c + q.a1) * c + q.a0) / std::max(scale, 1.0);
  std::optional<double> closed_residual;
  std::string closed_note;
  if (std::abs(alpha) > 0.0) {
    try {
      const auto cert = family_k_closed(threshold_parent(family, args.b, alpha, c));
      closed_residual = std::abs(cert.sum_value - 1.0);
    } catch (const std::exception& e) {
      closed_note = e.what();
    }
  } else {
    closed_note = "alpha = 0: the parent sum vanishes identically";
  }
  if (args.as_json) {
    json out{{"family", to_string(family)},
             {"b", args.b},
             {"alpha", {alpha.real(), alpha.imag()}},
             {"root_plus", roots.root_plus},
             {"root_minus", roots.root_minus},
             {"quadratic", {q.a2, q.a1, q.a0}},
             {"quadratic_residual", quad_residual},
             {"closed_form_residual", closed_residual ? json(*closed_residual) : json(nullptr)}};
    if (!closed_note.empty()) out["note"] = closed_note;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "family: " << to_string(family) << '\n';
  std::cout << fmt::format("quadratic: ({:.15g}) c^2 + ({:.15g}) c + ({:.15g}) >= 0\n", q.a2, q.a1, q.a0);
  std::cout << fmt::format("root_plus: {:.12g}\n", roots.root_plus);
  std::cout << fmt::format("root_minus: {:.12g}\n", roots.root_minus);
  std::cout << fmt::format("quadratic_residual: {:.3g}\n", quad_residual);
  if (closed_residual) std::cout << fmt::format("closed_form_residual: {:.3g}\n", *closed_residual);
  if (!closed_note.empty()) std::cout << "note: " << closed_note << '\n';
  return kExitOk;
}

// ---- problem-scan ------------------------------------------------------------

struct ProblemScanArgs {
  std::vector<double> alphas;
  double alpha_min = 0.67;
  double alpha_max = 1.0;
  double alpha_step = 0.01;
  std::vector<int> degrees{2, 3, 4};
  double radius = 0.995;
  std::size_t samples = 4096;
};

int run_problem_scan(const ProblemScanArgs& args, const CLI::App* cmd) {
  std::vector<double> alphas = args.alphas;
  if (cmd->get_option("--alphas")->count() == 0) {
    if (!(args.alpha_step > 0.0)) throw UsageError("--alpha-step must be positive");
    for (int k = 0;; ++k) {
      const double alpha = args.alpha_min + k * args.alpha_step;
      if (alpha > args.alpha_max + 1e-12) break;
      alphas.push_back(std::min(alpha, args.alpha_max));
    }
  }
  std::cout << "# exploratory: self-intersection witnesses for h = z - a z^n, g' = z h', with\n"
               "# sup Re(1 + z h''/h') = 3 alpha / 2. No witness is not a univalence proof.\n";
  std::cout << fmt::format("# radius {} samples {}\n", args.radius, args.samples);
  std::cout << "alpha,n,a,bound_ok,witness,theta_i,theta_j\n";
  const ScanGrid grid = ScanGrid::boundary_refined();
  for (double alpha : alphas) {
    for (int n : args.degrees) {
      const auto fixture = problem_fixture(alpha, n);
      // The bound is strict in the disk and approached on the circle.
      const auto bound = scan_convexity_upper(fixture.map.h(), grid, 1.5 * alpha + 1e-12);
      const auto crossing = curve_self_intersection(fixture.map, args.radius, args.samples);
      std::cout << fmt::format("{:.6g},{},{:.9g},{},{},", alpha, n, fixture.a, bound.passed() ? "yes" : "no",
                               crossing ? "yes" : "no");
      if (crossing) {
        std::cout << fmt::format("{:.9g},{:.9g}\n", crossing->theta_i, crossing->theta_j);
      } else {
        std::cout << ",\n";
      }
    }
  }
  return kExitOk;
}

// ---- construct ---------------------------------------------------------------

struct ConstructArgs {
  MapSource src;
  Settings settings;
  std::string out;
};

int run_construct(const ConstructArgs& args) {
  const auto f = build_map(args.src, args.settings);
  const std::string text = coefficients_json(f).dump() + "\n";
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_file(args.out, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify, scan and render planar harmonic maps f = h + conj(g)"};
  app.require_subcommand(1);

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "coefficient certificate for a map or family");
  add_source_options(certify_cmd, certify.src);
  add_setting_options(certify_cmd, certify.settings);
  certify_cmd->add_option("--criterion", certify.criterion, "auto, close-to-convex or fully-starlike");
  certify_cmd->add_flag("--cross-check", certify.series, "also sum the family series with a tail bound");
  certify_cmd->add_flag("--json", certify.as_json, "JSON output");
  certify_cmd->add_option("--config", certify.config, "JSON config file");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "grid scan of a geometric functional");
  add_source_options(scan_cmd, scan.src);
  add_setting_options(scan_cmd, scan.settings);
  scan_cmd->add_option("--functional", scan.functional,
                       "ch1, jacobian, starlike, convexity, convexity-upper, disk-bound");
  scan_cmd->add_option("--lower", scan.lower, "lower bound for the convexity functional");
  scan_cmd->add_option("--upper", scan.upper, "upper bound for convexity-upper");
  scan_cmd->add_option("--csv", scan.csv, "write every sample as CSV");
  scan_cmd->add_flag("--json", scan.as_json, "JSON output");
  scan_cmd->add_option("--config", scan.config, "JSON config file");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "draw image curves f(r e^{i theta})");
  add_source_options(render_cmd, render.src);
  add_setting_options(render_cmd, render.settings);
  render_cmd->add_option("--preset", render.preset, "fig1, fig2 or identity");
  render_cmd->add_option("--svg", render.svg, "SVG output path");
  render_cmd->add_option("--csv", render.csv, "CSV output path");
  render_cmd->add_option("--width", render.width, "canvas width");
  render_cmd->add_option("--height", render.height, "canvas height");
  render_cmd->add_option("--config", render.config, "JSON config file");

  ThresholdArgs threshold;
  auto* threshold_cmd = app.add_subcommand("threshold", "smallest c for the threshold corollaries");
  threshold_cmd->add_option("--family", threshold.family, "C42a, C42b or C47")->required();
  threshold_cmd->add_option("--b", threshold.b, "b > 0");
  threshold_cmd->add_option("--alpha", threshold.alpha, "real part of alpha");
  threshold_cmd->add_option("--alpha-im", threshold.alpha_im, "imaginary part of alpha");
  threshold_cmd->add_flag("--json", threshold.as_json, "JSON output");

  ProblemScanArgs problem;
  auto* problem_cmd = app.add_subcommand("problem-scan", "exploratory self-intersection table over alpha");
  problem_cmd->add_option("--alphas", problem.alphas, "explicit alpha values");
  problem_cmd->add_option("--alpha-min", problem.alpha_min, "first alpha");
  problem_cmd->add_option("--alpha-max", problem.alpha_max, "last alpha");
  problem_cmd->add_option("--alpha-step", problem.alpha_step, "alpha increment");
  problem_cmd->add_option("--n", problem.degrees, "fixture degrees");
  problem_cmd->add_option("--radius", problem.radius, "circle radius for the sweep");
  problem_cmd->add_option("--samples", problem.samples, "points on the circle");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "print the coefficient record of a map");
  add_source_options(construct_cmd, construct.src);
  add_setting_options(construct_cmd, construct.settings);
  construct_cmd->add_option("--out", construct.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (certify_cmd->parsed()) {
      apply_config(certify.config, certify_cmd, certify.settings);
      return run_certify(certify);
    }
    if (scan_cmd->parsed()) {
      apply_config(scan.config, scan_cmd, scan.settings);
      return run_scan(scan);
    }
    if (render_cmd->parsed()) {
      apply_config(render.config, render_cmd, render.settings);
      return run_render(render, render_cmd);
    }
    if (threshold_cmd->parsed()) return run_threshold(threshold);
    if (problem_cmd->parsed()) return run_problem_scan(problem, problem_cmd);
    if (construct_cmd->parsed()) return run_construct(construct);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
