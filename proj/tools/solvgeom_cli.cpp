// solvgeom command line front end. Links only the C interface.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "solvgeom/solvgeom.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_number(double v, int digits) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string json_number(double v) { return format_number(v, 17); }
std::string csv_number(double v) { return format_number(v, 12); }
const char* boolean(int v) { return v ? "true" : "false"; }

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string json_array(const double* v, std::size_t n) {
  std::string out = "[";
  for (std::size_t i = 0; i < n; ++i) out += (i ? ", " : "") + json_number(v[i]);
  return out + "]";
}

// Accepts plain numbers and multiples of pi: "pi", "pi/3", "2pi/3", "2*pi/3".
double parse_angle(const std::string& text, bool degrees) {
  static const std::regex pi_form(R"(^\s*([-+]?[0-9]*\.?[0-9]*(?:[eE][-+]?[0-9]+)?)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
  std::smatch m;
  double value;
  if (std::regex_match(text, m, pi_form)) {
    std::string coef = m[1].str();
    double k = 1.0;
    if (coef == "-") k = -1.0;
    else if (!coef.empty() && coef != "+") k = std::stod(coef);
    const double den = m[2].matched ? std::stod(m[2].str()) : 1.0;
    value = k * std::numbers::pi / den;
    if (degrees) throw UsageError("angle '" + text + "' uses pi together with --degrees");
    return value;
  }
  std::size_t used = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse angle '" + text + "'");
  }
  if (used != text.size()) throw UsageError("cannot parse angle '" + text + "'");
  return degrees ? (value / 180.0) * std::numbers::pi : value;
}

double check_alpha(double alpha, const std::string& what) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2.0)) {
    throw UsageError(what + " must lie in [0, pi/2] radians");
  }
  return alpha;
}

void parse_complex(const std::string& text, double& re, double& im) {
  std::stringstream ss(text);
  std::string a, b;
  std::getline(ss, a, ',');
  const bool has_im = static_cast<bool>(std::getline(ss, b));
  try {
    std::size_t used = 0;
    re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument("trailing");
    im = 0.0;
    if (has_im) {
      im = std::stod(b, &used);
      if (used != b.size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::exception&) {
    throw UsageError("cannot parse complex coordinate '" + text + "' (expected re or re,im)");
  }
  if (!std::isfinite(re) || !std::isfinite(im)) throw UsageError("coordinates must be finite");
}

std::vector<size_t> parse_indices(const std::string& text) {
  std::vector<size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument("bad index");
      out.push_back(static_cast<size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("cannot parse index list '" + text + "'");
    }
  }
  return out;
}

void check_status(sg_status st) {
  if (st != SG_OK) throw UsageError(std::string(sg_status_name(st)) + ": " + sg_last_error());
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file " + path);
  out << text;
}

bool use_color(const std::string& output) {
  return (output.empty() || output == "-") && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
}

// ---- sweep ----------------------------------------------------------------

struct SweepConfig {
  std::string alpha_start = "0";
  std::string alpha_end = "pi/2";
  int steps = 5;
  long long samples = 1000;
  unsigned long long seed = 1;
  double tolerance = 1e-10;
  std::string format = "csv";
  bool degrees = false;
  std::string output;
};

int cmd_sweep(const SweepConfig& cfg) {
  const double start = check_alpha(parse_angle(cfg.alpha_start, cfg.degrees), "--alpha-start");
  const double end = check_alpha(parse_angle(cfg.alpha_end, cfg.degrees), "--alpha-end");
  if (start > end) throw UsageError("--alpha-start must not exceed --alpha-end");
  if (cfg.steps < 1) throw UsageError("--steps must be >= 1");
  if (cfg.samples < 0) throw UsageError("--samples must be >= 0");
  if (!(cfg.tolerance > 0.0)) throw UsageError("--tol must be positive");

  std::vector<sg_curvature_report> rows(static_cast<std::size_t>(cfg.steps));
  for (int i = 0; i < cfg.steps; ++i) {
    double alpha = cfg.steps == 1 ? start : start + (end - start) * i / (cfg.steps - 1);
    if (i == cfg.steps - 1 && cfg.steps > 1) alpha = end;
    check_status(sg_classify(alpha, static_cast<size_t>(cfg.samples), cfg.seed, &rows[static_cast<std::size_t>(i)]));
  }

  bool within = true;
  for (const auto& r : rows) within = within && r.cross_pipeline_residual <= cfg.tolerance;

  std::ostringstream out;
  if (cfg.format == "csv") {
    out << "alpha,mean_curvature,cheeger,ricci_min,ricci_max,k_sigma,regime,minimal,einstein,horosphere_range,"
           "cross_residual\n";
    for (const auto& r : rows) {
      out << csv_number(r.alpha) << ',' << csv_number(r.mean_curvature) << ',' << csv_number(r.cheeger) << ','
          << csv_number(r.ricci_min) << ',' << csv_number(r.ricci_max) << ',' << csv_number(r.k_sigma) << ','
          << sg_regime_name(r.regime) << ',' << boolean(r.is_minimal) << ',' << boolean(r.is_einstein) << ','
          << boolean(r.is_horosphere_range) << ',' << csv_number(r.cross_pipeline_residual) << '\n';
    }
  } else {
    out << "{\n  \"tolerance\": " << json_number(cfg.tolerance) << ",\n  \"samples\": " << cfg.samples
        << ",\n  \"seed\": " << cfg.seed << ",\n  \"all_within_tolerance\": " << boolean(within)
        << ",\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << (i ? ",\n" : "\n") << "    {\"alpha\": " << json_number(r.alpha)
          << ", \"mean_curvature\": " << json_number(r.mean_curvature) << ", \"cheeger\": " << json_number(r.cheeger)
          << ", \"ricci_min\": " << json_number(r.ricci_min) << ", \"ricci_max\": " << json_number(r.ricci_max)
          << ", \"k_sigma\": " << json_number(r.k_sigma) << ", \"regime\": \"" << sg_regime_name(r.regime)
          << "\", \"minimal\": " << boolean(r.is_minimal) << ", \"einstein\": " << boolean(r.is_einstein)
          << ", \"horosphere_range\": " << boolean(r.is_horosphere_range)
          << ", \"cross_residual\": " << json_number(r.cross_pipeline_residual)
          << ", \"shape_eigenvalues\": " << json_array(r.shape_eigenvalues, 7) << "}";
    }
    out << "\n  ]\n}\n";
  }
  emit(out.str(), cfg.output);
  return within ? kExitOk : kExitVerifyFailed;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(long long samples, unsigned long long seed, const std::string& output) {
  if (samples < 1) throw UsageError("--samples must be >= 1");
  sg_verify_report* report = nullptr;
  check_status(sg_verify_run(static_cast<size_t>(samples), seed, &report));
  const bool color = use_color(output);
  std::ostringstream out;
  bool all = true;
  for (size_t i = 0; i < sg_verify_count(report); ++i) {
    sg_check c{};
    check_status(sg_verify_get(report, i, &c));
    all = all && c.passed;
    const char* verdict = c.passed ? "PASS" : "FAIL";
    out << c.name << ": ";
    if (color) out << (c.passed ? "\033[32m" : "\033[31m") << verdict << "\033[0m";
    else out << verdict;
    out << " (residual " << format_number(c.residual, 3) << (c.upper_bound ? " <= " : " >= ")
        << format_number(c.tolerance, 3) << ")\n";
  }
  sg_verify_free(report);
  out << (all ? "all checks passed\n" : "some checks FAILED\n");
  emit(out.str(), output);
  return all ? kExitOk : kExitVerifyFailed;
}

// ---- foliation ------------------------------------------------------------

struct FoliationArgs {
  std::string alpha = "0";
  double s = 1.0;
  std::string x = "0", y = "0", z = "0";
  double t = 0.0;
  bool degrees = false;
  std::string output;
};

std::string group_json(const sg_group_element& q) {
  std::ostringstream o;
  o << "{\"x\": [" << json_number(q.x_re) << ", " << json_number(q.x_im) << "], \"y\": [" << json_number(q.y_re)
    << ", " << json_number(q.y_im) << "], \"z\": [" << json_number(q.z_re) << ", " << json_number(q.z_im)
    << "], \"t\": " << json_number(q.t) << ", \"normal\": " << json_number(q.normal) << "}";
  return o.str();
}

int cmd_foliation(const FoliationArgs& a) {
  const double alpha = check_alpha(parse_angle(a.alpha, a.degrees), "--alpha");
  if (!std::isfinite(a.s) || !std::isfinite(a.t)) throw UsageError("coordinates must be finite");
  sg_group_element q{};
  parse_complex(a.x, q.x_re, q.x_im);
  parse_complex(a.y, q.y_re, q.y_im);
  parse_complex(a.z, q.z_re, q.z_im);
  q.t = a.t;
  q.alpha = alpha;

  sg_group_element flowed{}, conjugate{};
  double distortion = 0.0, residual = 0.0;
  check_status(sg_flow_point(&q, a.s, &flowed));
  check_status(sg_leaf_conjugate(&q, a.s, &conjugate));
  check_status(sg_volume_distortion(alpha, a.s, &distortion));
  check_status(sg_foliation_residual(&q, a.s, &residual));

  std::ostringstream out;
  out << "{\n  \"alpha\": " << json_number(alpha) << ",\n  \"s\": " << json_number(a.s) << ",\n  \"q\": "
      << group_json(q) << ",\n  \"flow_point\": " << group_json(flowed) << ",\n  \"leaf_conjugate\": "
      << group_json(conjugate) << ",\n  \"volume_distortion\": " << json_number(distortion)
      << ",\n  \"residual\": " << json_number(residual) << "\n}\n";
  emit(out.str(), a.output);
  return kExitOk;
}

// ---- algebra --------------------------------------------------------------

struct AlgebraArgs {
  std::string path;
  std::string op;
  double tolerance = 1e-10;
  std::string v, z;
  long long a = -1;
  std::string output;
};

int cmd_algebra(const AlgebraArgs& args) {
  sg_algebra* alg = nullptr;
  check_status(sg_algebra_load(args.path.c_str(), &alg));
  std::unique_ptr<sg_algebra, decltype(&sg_algebra_free)> guard(alg, &sg_algebra_free);
  size_t n = 0;
  check_status(sg_algebra_dim(alg, &n));

  std::ostringstream out;
  out << "{\n  \"dim\": " << n << ",\n  \"labels\": [";
  for (size_t i = 0; i < n; ++i) {
    const char* label = nullptr;
    check_status(sg_algebra_label(alg, i, &label));
    out << (i ? ", " : "") << json_string(label);
  }
  out << "],\n";

  if (args.op == "ricci") {
    std::vector<double> ric(n * n);
    check_status(sg_algebra_ricci_form(alg, ric.data()));
    out << "  \"ricci_form\": [";
    for (size_t i = 0; i < n; ++i) out << (i ? ",\n                 " : "") << json_array(&ric[i * n], n);
    out << "]\n";
  } else if (args.op == "cheeger") {
    double h = 0.0;
    std::vector<double> tv(n);
    check_status(sg_algebra_cheeger(alg, &h));
    check_status(sg_algebra_trace_form_vector(alg, tv.data()));
    out << "  \"cheeger\": " << json_number(h) << ",\n  \"trace_form_vector\": " << json_array(tv.data(), n) << "\n";
  } else if (args.op == "einstein") {
    if (!(args.tolerance > 0.0)) throw UsageError("--tol must be positive");
    sg_einstein_result r{};
    check_status(sg_algebra_einstein(alg, args.tolerance, &r));
    out << "  \"einstein\": " << boolean(r.is_einstein) << ",\n  \"constant\": " << json_number(r.constant)
        << ",\n  \"spread\": " << json_number(r.spread) << ",\n  \"tolerance\": " << json_number(args.tolerance)
        << "\n";
  } else {  // dr-check
    if (args.v.empty() || args.z.empty() || args.a < 0) throw UsageError("dr-check needs --v, --z and --a");
    const auto v = parse_indices(args.v);
    const auto z = parse_indices(args.z);
    sg_damek_ricci_report r{};
    check_status(sg_algebra_damek_ricci_check(alg, v.data(), v.size(), z.data(), z.size(),
                                              static_cast<size_t>(args.a), &r));
    out << "  \"axioms\": [";
    for (int i = 0; i < 5; ++i) {
      out << (i ? ", " : "") << "{\"axiom\": " << i + 1 << ", \"passed\": " << boolean(r.axiom_passed[i])
          << ", \"residual\": " << json_number(r.axiom_residual[i]) << "}";
    }
    out << "],\n  \"j_squared_residual\": " << json_number(r.j_squared_residual)
        << ",\n  \"two_step_nilpotent\": " << boolean(r.is_two_step_nilpotent)
        << ",\n  \"overall\": " << boolean(r.overall) << "\n";
  }
  out << "}\n";
  emit(out.str(), args.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature of SL(3,C)/SU(3) and its homogeneous hypersurfaces S_H"};
  app.require_subcommand(1);

  SweepConfig sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate curvature data over a range of alpha");
  sweep_cmd->add_option("--alpha-start", sweep.alpha_start, "First angle (radians; accepts pi/3 style)");
  sweep_cmd->add_option("--alpha-end", sweep.alpha_end, "Last angle");
  sweep_cmd->add_option("--steps", sweep.steps, "Number of angles, endpoints included");
  sweep_cmd->add_option("--samples", sweep.samples, "Random unit vectors per angle for the cross-pipeline check");
  sweep_cmd->add_option("--seed", sweep.seed, "PRNG seed");
  sweep_cmd->add_option("--tol", sweep.tolerance, "Allowed cross-pipeline residual");
  sweep_cmd->add_option("--format", sweep.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_flag("--degrees", sweep.degrees, "Angles are given in degrees");
  sweep_cmd->add_option("--output", sweep.output, "Output file (default stdout)");

  long long verify_samples = 1000;
  unsigned long long verify_seed = 1;
  std::string verify_output;
  auto* verify_cmd = app.add_subcommand("verify", "Run the self-verification suite");
  verify_cmd->add_option("--samples", verify_samples, "Random samples per check");
  verify_cmd->add_option("--seed", verify_seed, "PRNG seed");
  verify_cmd->add_option("--output", verify_output, "Output file (default stdout)");

  FoliationArgs fol;
  auto* fol_cmd = app.add_subcommand("foliation", "Flow a point along the normal foliation");
  fol_cmd->add_option("--alpha", fol.alpha, "Angle of H");
  fol_cmd->add_option("--s", fol.s, "Flow time");
  fol_cmd->add_option("--x", fol.x, "x coordinate, re or re,im");
  fol_cmd->add_option("--y", fol.y, "y coordinate, re or re,im");
  fol_cmd->add_option("--z", fol.z, "z coordinate, re or re,im");
  fol_cmd->add_option("--t", fol.t, "exp(tH) coordinate");
  fol_cmd->add_flag("--degrees", fol.degrees, "Angle is given in degrees");
  fol_cmd->add_option("--output", fol.output, "Output file (default stdout)");

  AlgebraArgs alg;
  auto* alg_cmd = app.add_subcommand("algebra", "Evaluate a metric Lie algebra stored as JSON");
  alg_cmd->add_option("path", alg.path, "Algebra JSON file")->required();
  alg_cmd->add_option("operation", alg.op, "ricci | cheeger | einstein | dr-check")
      ->required()
      ->check(CLI::IsMember({"ricci", "cheeger", "einstein", "dr-check"}));
  alg_cmd->add_option("--tol", alg.tolerance, "Einstein tolerance");
  alg_cmd->add_option("--v", alg.v, "dr-check: comma separated indices of v");
  alg_cmd->add_option("--z", alg.z, "dr-check: comma separated indices of z");
  alg_cmd->add_option("--a", alg.a, "dr-check: index of the unit vector A");
  alg_cmd->add_option("--output", alg.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*verify_cmd) return cmd_verify(verify_samples, verify_seed, verify_output);
    if (*fol_cmd) return cmd_foliation(fol);
    return cmd_algebra(alg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
