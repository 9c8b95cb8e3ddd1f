// Copyright 2026 The spinjoint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinjoint/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "spinjoint/io.hpp"

namespace spinjoint::cli {
namespace {

using io::format_double;
using io::json;

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

Vector3 parse_vector(const std::string& text, std::string_view what) {
  Vector3 v;
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = text.find(',', start);
    const bool last = (k == 2);
    if (last != (comma == std::string::npos)) {
      throw UsageError("malformed " + std::string(what) + ": expected three comma-separated numbers");
    }
    const std::size_t end = last ? text.size() : comma;
    v(k) = parse_number(std::string_view(text).substr(start, end - start), what);
    start = end + 1;
  }
  return v;
}

UnitVector3 parse_direction(const std::string& text, std::string_view what) {
  const Vector3 v = parse_vector(text, what);
  if (!(v.norm() > 0.0)) throw UsageError(std::string(what) + " must be nonzero");
  return UnitVector3::normalized(v);
}

double theta_from(const RunConfig& cfg) {
  const double deg = cfg.theta_deg.value_or(90.0);
  if (!(deg >= 0.0 && deg <= 180.0)) throw UsageError("--theta-deg must lie in [0, 180]");
  return deg * kPi / 180.0;
}

/// a' at angle θ from a, rotated towards y × a (the xz-plane when a is in it).
UnitVector3 rotate_from(const UnitVector3& a, double theta) {
  Vector3 e = Vector3::UnitY().cross(a.vec());
  if (e.norm() <= 1e-12) e = Vector3::UnitX();
  e.normalize();
  return UnitVector3::normalized(std::cos(theta) * a.vec() + std::sin(theta) * e);
}

struct AlphaArg {
  enum Kind { Unset, OptimalSymmetric, Value } kind = Unset;
  double value = 0.0;
};

AlphaArg parse_alpha(const std::string& text, std::string_view what) {
  if (text.empty()) return {};
  if (text == "optimal-symmetric") return {AlphaArg::OptimalSymmetric, 0.0};
  return {AlphaArg::Value, parse_number(text, what)};
}

JointSpec build_spec(const RunConfig& cfg) {
  const UnitVector3 a = parse_direction(cfg.a, "--a");
  if (!cfg.a_prime.empty() && cfg.theta_deg) {
    throw UsageError("--a-prime and --theta-deg are mutually exclusive");
  }
  const UnitVector3 a_prime =
      cfg.a_prime.empty() ? rotate_from(a, theta_from(cfg)) : parse_direction(cfg.a_prime, "--a-prime");

  const AlphaArg al = parse_alpha(cfg.alpha, "--alpha");
  const AlphaArg alp = parse_alpha(cfg.alpha_prime, "--alpha-prime");
  if (al.kind != AlphaArg::Value && alp.kind != AlphaArg::Value) {
    return JointSpec::optimal_symmetric(a, a_prime);
  }
  if (al.kind == AlphaArg::OptimalSymmetric || alp.kind == AlphaArg::OptimalSymmetric) {
    throw UsageError("optimal-symmetric cannot be combined with a numeric sharpness factor");
  }
  const double alpha = al.kind == AlphaArg::Value ? al.value : alp.value;
  const double alpha_prime = alp.kind == AlphaArg::Value ? alp.value : al.value;
  return JointSpec(a, a_prime, alpha, alpha_prime);
}

Settings build_settings(const RunConfig& cfg, const JointSpec& spec) {
  if (cfg.b.empty() != cfg.b_prime.empty()) throw UsageError("--b and --b-prime go together");
  if (cfg.b.empty()) return optimal_settings(spec);
  return {parse_direction(cfg.b, "--b"), parse_direction(cfg.b_prime, "--b-prime")};
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "csv" && f != "json" && f != "table") throw UsageError("unknown --format '" + f + "'");
  return f;
}

double theta_deg_of(const JointSpec& spec) { return spec.theta() * 180.0 / kPi; }

/// Flat key/value record in the requested format.
std::string render_record(const std::vector<std::pair<std::string, json>>& fields,
                          const std::string& format) {
  std::ostringstream os;
  auto scalar = [](const json& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  if (format == "json") {
    json j = json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : fields) {
      std::string s = scalar(v);
      if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
        s = quoted + "\"";
      }
      os << k << "," << s << "\n";
    }
  } else {
    std::size_t width = 0;
    for (const auto& f : fields) width = std::max(width, f.first.size());
    for (const auto& [k, v] : fields) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << k << scalar(v) << "\n";
    }
  }
  return os.str();
}

struct Outcome {
  int code = 0;
  std::string text;
};

Outcome cmd_validate(const RunConfig& cfg) {
  const JointSpec spec = build_spec(cfg);
  const double lhs = bound_lhs(spec);
  const bool admissible = is_admissible(spec);
  const bool saturating = saturates(spec);
  const Povm povm = saturating ? optimal_joint_povm(spec) : general_joint_effects(spec);
  const ValidationReport report = validate(povm);
  const bool ok = admissible && report.passed;

  json mins = json::object();
  for (const auto& e : report.effects) mins[e.label] = e.min_eigenvalue;
  std::string status = "ok";
  if (!admissible) status = std::string(to_string(Errc::BoundViolated));
  else if (!report.passed) status = std::string(to_string(Errc::InvalidPovm));

  return {ok ? 0 : 1,
          render_record({{"status", status},
                         {"spec", io::to_json(spec)},
                         {"theta_deg", theta_deg_of(spec)},
                         {"bound_lhs", lhs},
                         {"product_form", product_form_check(spec)},
                         {"admissible", admissible},
                         {"saturating", saturating},
                         {"povm", saturating ? "optimal" : "general"},
                         {"min_eigenvalue", report.min_eigenvalue},
                         {"min_eigenvalues", mins},
                         {"completeness_defect", report.completeness_defect}},
                        format_or(cfg, "json"))};
}

Outcome cmd_scan_theta(const RunConfig& cfg) {
  if (cfg.points < 2) throw UsageError("--points must be at least 2");
  const std::string format = format_or(cfg, "csv");
  const UnitVector3 a = UnitVector3::z();
  json rows = json::array();
  std::ostringstream csv;
  csv << "theta_deg,theta_rad,max_symmetric_alpha,product_form_slack,cloning_gap\n";
  for (std::size_t i = 0; i < cfg.points; ++i) {
    const double theta = kPi * static_cast<double>(i) / static_cast<double>(cfg.points - 1);
    const double alpha = max_symmetric_alpha(theta);
    const JointSpec spec(a, rotate_from(a, theta), alpha, alpha);
    const double slack = product_form(spec).slack;
    const double gap = cloning_joint(theta).gap;
    const double deg = 180.0 * static_cast<double>(i) / static_cast<double>(cfg.points - 1);
    csv << format_double(deg) << "," << format_double(theta) << "," << format_double(alpha) << ","
        << format_double(slack) << "," << format_double(gap) << "\n";
    rows.push_back({{"theta_deg", deg},
                    {"theta_rad", theta},
                    {"max_symmetric_alpha", alpha},
                    {"product_form_slack", slack},
                    {"cloning_gap", gap}});
  }
  if (format == "json") return {0, json{{"points", cfg.points}, {"rows", rows}}.dump(2) + "\n"};
  return {0, csv.str()};
}

Outcome cmd_chsh(const RunConfig& cfg) {
  const JointSpec spec = build_spec(cfg);
  if (!is_admissible(spec)) (void)general_joint_povm(spec);
  const Settings settings = build_settings(cfg, spec);
  const CorrelationSet corr = joint_correlations(spec, settings);
  const CorrelationSet born = born_joint_correlations(spec, settings);
  const double chsh = chsh_value(corr);

  const Vector3 z = Vector3::UnitZ(), x = Vector3::UnitX();
  const Settings classic{UnitVector3::normalized(z + x), UnitVector3::normalized(z - x)};
  const double sharp = cirelson_check(sharp_correlations(UnitVector3::z(), UnitVector3::x(), classic));

  const bool holds = chsh <= 2.0 + kAdmissibilityTol;
  std::vector<std::pair<std::string, json>> fields = {
      {"status", holds ? "ok" : "ChshViolated"},
      {"spec", io::to_json(spec)},
      {"settings", io::to_json(settings)},
      {"correlations", io::to_json(corr)},
      {"chsh", chsh},
      {"chsh_born", chsh_value(born)},
      {"joint_bound", 2.0},
      {"sharp_reference_chsh", sharp},
      {"cirelson_bound", kCirelsonBound}};

  if (cfg.n && *cfg.n > 0) {
    const Povm povm = general_joint_povm(spec);
    const SeededStream stream{cfg.seed, 0};
    const auto tb = sample_two_party(povm, settings.b, *cfg.n, stream.fork(0), cfg.workers);
    const auto tbp = sample_two_party(povm, settings.b_prime, *cfg.n, stream.fork(1), cfg.workers);
    const CorrelationSet emp{tb.correlation(0).value, tb.correlation(1).value,
                             tbp.correlation(0).value, tbp.correlation(1).value};
    fields.push_back({"empirical_correlations", io::to_json(emp)});
    fields.push_back({"empirical_chsh", chsh_value(emp)});
    fields.push_back({"metadata", io::stream_metadata(stream, *cfg.n)});
  }
  return {holds ? 0 : 1, render_record(fields, format_or(cfg, "json"))};
}

Outcome cmd_sample(const RunConfig& cfg) {
  const JointSpec spec = build_spec(cfg);
  const QubitState state = QubitState::from_bloch(parse_vector(cfg.state, "--state"));
  Povm povm;
  if (cfg.povm == "joint") {
    povm = general_joint_povm(spec);
  } else if (cfg.povm == "optimal") {
    povm = optimal_joint_povm(spec);
  } else if (cfg.povm == "projective") {
    povm = projective_povm(spec.a());
  } else {
    throw UsageError("--povm must be joint, optimal or projective");
  }
  const std::uint64_t n = cfg.n.value_or(100000);
  if (n < 1) throw UsageError("--n must be at least 1");
  const SeededStream stream{cfg.seed, 0};
  const SampleStats stats = sample_povm(povm, state, n, stream, cfg.workers);

  std::vector<std::uint64_t> counts;
  std::vector<double> probs;
  for (const auto& o : outcome_probabilities(povm, state)) {
    probs.push_back(o.probability);
    counts.push_back(stats.count(o.label));
  }
  const ChiSquareResult chi = chi_square_gof(counts, probs);

  json meta = io::stream_metadata(stream, n);
  meta["povm"] = cfg.povm;
  meta["mean"] = stats.mean;
  meta["std_error"] = stats.std_error;
  meta["chi_square"] = chi.statistic;
  meta["chi_square_p"] = chi.p_value;

  const std::string format = format_or(cfg, "csv");
  if (format == "json") {
    json j = {{"metadata", meta}, {"stats", io::to_json(stats)}, {"povm", io::to_json(povm)}};
    return {0, j.dump(2) + "\n"};
  }
  return {0, io::tally_csv(stats, meta)};
}

Outcome cmd_signal(const RunConfig& cfg) {
  const JointSpec spec = build_spec(cfg);
  const Settings settings = build_settings(cfg, spec);
  const std::uint64_t n = cfg.n.value_or(1000000);
  if (n < 1) throw UsageError("--n must be at least 1");
  const SeededStream stream{cfg.seed, 0};
  const NoSignallingProbe probe = no_signalling_probe(spec, settings);
  const SignallingResult mc = signalling_experiment(spec, settings, n, stream, cfg.workers);
  const bool consistent = std::abs(mc.z) < 5.0;
  return {consistent ? 0 : 1,
          render_record({{"status", consistent ? "ok" : "SignallingDetected"},
                         {"spec", io::to_json(spec)},
                         {"settings", io::to_json(settings)},
                         {"analytic", io::to_json(probe)},
                         {"p_equal_b", mc.under_b.mean},
                         {"p_equal_b_prime", mc.under_b_prime.mean},
                         {"z", mc.z},
                         {"metadata", io::stream_metadata(stream, n)}},
                        format_or(cfg, "json"))};
}

Outcome cmd_uncertainty(const RunConfig& cfg) {
  const JointSpec spec = build_spec(cfg);
  const SeededStream stream{cfg.seed, 0};
  auto engine = stream.engine();

  std::vector<std::pair<long, UncertaintyReport>> reports;
  reports.emplace_back(-1, product_form(spec));
  reports.emplace_back(-1, cirelson_product(spec));
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Vector3 m;
    do {
      for (int k = 0; k < 3; ++k) m(k) = 2.0 * uniform01(engine) - 1.0;
    } while (m.squaredNorm() > 1.0);
    const QubitState state = QubitState::from_bloch(m);
    const long idx = static_cast<long>(i);
    reports.emplace_back(idx, robertson(state, spec.a(), spec.a_prime()));
    reports.emplace_back(idx, schroedinger(state, spec.a(), spec.a_prime()));
    reports.emplace_back(idx, total_joint(spec, state));
    reports.emplace_back(idx, arthurs_goodman(spec, state));
  }

  std::size_t violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (const auto& [idx, r] : reports) {
    (void)idx;
    if (r.slack < -kAdmissibilityTol) ++violations;
    min_slack = std::min(min_slack, r.slack);
  }
  const int code = violations == 0 ? 0 : 1;

  if (format_or(cfg, "csv") == "json") {
    json list = json::array();
    for (const auto& [idx, r] : reports) {
      json j = io::to_json(r);
      j["state_index"] = idx;
      list.push_back(std::move(j));
    }
    json j = {{"metadata", io::stream_metadata(stream, cfg.samples)},
              {"spec", io::to_json(spec)},
              {"min_slack", min_slack},
              {"violations", violations},
              {"reports", std::move(list)}};
    return {code, j.dump(2) + "\n"};
  }
  std::string csv = "# " + io::stream_metadata(stream, cfg.samples).dump() + "\n";
  csv += io::uncertainty_csv_header() + ",state_index\n";
  for (const auto& [idx, r] : reports) {
    csv += io::uncertainty_csv_row(r) + "," + std::to_string(idx) + "\n";
  }
  return {code, csv};
}

Outcome cmd_bb84(const RunConfig& cfg) {
  const double theta = theta_from(cfg);
  const std::uint64_t n = cfg.n.value_or(100000);
  if (n < 1) throw UsageError("--n must be at least 1");
  const Bb84EveReport r = bb84_eve(n, {cfg.seed, 0}, theta, cfg.workers);
  const double z = r.std_error > 0.0
                       ? (r.empirical_success - r.guess_success_prob_after_announcement) / r.std_error
                       : 0.0;
  return {0, render_record({{"theta_deg", theta * 180.0 / kPi},
                            {"alpha", r.alpha},
                            {"analytic_success", r.guess_success_prob_after_announcement},
                            {"empirical_success", r.empirical_success},
                            {"std_error", r.std_error},
                            {"z", z},
                            {"trials", r.trials},
                            {"values", "derived"},
                            {"metadata", io::stream_metadata(r.stream, r.trials)}},
                           format_or(cfg, "table"))};
}

Outcome cmd_cloning(const RunConfig& cfg) {
  const double theta = theta_from(cfg);
  const CloningScenario s = cloning_joint(theta, cfg.eta);
  const CloningGapScan scan = cloning_min_gap(cfg.eta, cfg.points);
  return {0, render_record({{"theta_deg", theta * 180.0 / kPi},
                            {"eta", s.eta},
                            {"alpha_clone", s.alpha_clone},
                            {"alpha_optimal", s.alpha_optimal},
                            {"gap", s.gap},
                            {"cloning_optimal", s.gap <= 0.0},
                            {"grid_points", scan.points},
                            {"min_gap", scan.min_gap},
                            {"theta_deg_at_min_gap", scan.theta_at_min * 180.0 / kPi}},
                           format_or(cfg, "table"))};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Joint measurements of two spin-1/2 components: bounds, POVMs, CHSH, sampling"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--a", cfg.a, "first direction, x,y,z (normalized)");
  app.add_option("--a-prime", cfg.a_prime, "second direction, x,y,z (normalized)");
  app.add_option("--theta-deg", cfg.theta_deg, "angle of a' from a in degrees (default 90)");
  app.add_option("--alpha", cfg.alpha, "sharpness for a, or optimal-symmetric");
  app.add_option("--alpha-prime", cfg.alpha_prime, "sharpness for a', or optimal-symmetric");
  app.add_option("--b", cfg.b, "observer-2 direction b (default: optimal)");
  app.add_option("--b-prime", cfg.b_prime, "observer-2 direction b'");
  app.add_option("--n", cfg.n, "number of Monte Carlo draws");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--out", cfg.out, "write output to this file instead of stdout");
  app.add_option("--format", cfg.format, "csv, json or table");
  app.add_option("--workers", cfg.workers, "sampling threads (results do not depend on it)");

  auto* validate_cmd = app.add_subcommand("validate", "check admissibility and POVM validity");
  auto* scan = app.add_subcommand("scan-theta", "max symmetric sharpness over [0, 180] degrees");
  scan->add_option("--points", cfg.points, "grid size");
  auto* chsh = app.add_subcommand("chsh", "CHSH value of the joint measurement on a singlet");
  auto* sample = app.add_subcommand("sample", "draw outcomes of a POVM on a qubit state");
  sample->add_option("--state", cfg.state, "Bloch vector x,y,z");
  sample->add_option("--povm", cfg.povm, "joint, optimal or projective");
  auto* signal = app.add_subcommand("signal", "Monte Carlo signalling test");
  auto* uncertainty = app.add_subcommand("uncertainty", "evaluate all uncertainty relations");
  uncertainty->add_option("--samples", cfg.samples, "number of random states");
  auto* bb84 = app.add_subcommand("bb84", "eavesdropper joint measurement on BB84 states");
  auto* cloning = app.add_subcommand("cloning", "universal-cloner joint measurement vs optimum");
  cloning->add_option("--eta", cfg.eta, "cloner shrink factor in (0, 2/3]");
  cloning->add_option("--points", cfg.points, "grid size for the minimum gap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Outcome outcome;
  try {
    if (validate_cmd->parsed()) outcome = cmd_validate(cfg);
    else if (scan->parsed()) outcome = cmd_scan_theta(cfg);
    else if (chsh->parsed()) outcome = cmd_chsh(cfg);
    else if (sample->parsed()) outcome = cmd_sample(cfg);
    else if (signal->parsed()) outcome = cmd_signal(cfg);
    else if (uncertainty->parsed()) outcome = cmd_uncertainty(cfg);
    else if (bb84->parsed()) outcome = cmd_bb84(cfg);
    else if (cloning->parsed()) outcome = cmd_cloning(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }

  if (cfg.out.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "cannot open " << cfg.out << " for writing\n";
      return 2;
    }
    file << outcome.text;
  }
  if (outcome.code != 0) err << "domain check failed (exit " << outcome.code << ")\n";
  return outcome.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("spinjoint");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace spinjoint::cli
