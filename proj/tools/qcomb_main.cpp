// Copyright 2026 qcomb developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <clocale>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qcomb/checks.hpp"
#include "qcomb/biqkd.hpp"
#include "qcomb/tradeoff.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnalysisFailure = 1;
constexpr int kExitUsage = 2;

// All numbers go out with twelve significant digits, locale-independent.
std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

class JsonObject {
 public:
  JsonObject& field(const std::string& key, double value) {
    return raw(key, fmt(value));
  }
  JsonObject& field(const std::string& key, const std::string& value) {
    return raw(key, "\"" + value + "\"");
  }
  JsonObject& field(const std::string& key, bool value) {
    return raw(key, value ? "true" : "false");
  }
  JsonObject& field(const std::string& key, std::uint64_t value) {
    return raw(key, std::to_string(value));
  }
  std::string str() const { return "{" + body_ + "}\n"; }

 private:
  JsonObject& raw(const std::string& key, const std::string& value) {
    if (!body_.empty()) body_ += ",";
    body_ += "\"" + key + "\":" + value;
    return *this;
  }
  std::string body_;
};

double default_tolerance() {
  if (const char* env = std::getenv("QCOMB_EPS")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && value > 0.0) return value;
  }
  return 1e-10;
}

int run_validate(const std::string& kind, const std::string& basis_name,
                 std::optional<double> y, double tol) {
  const qcomb::UnitaryBasis& basis = basis_name == "standard"
                                         ? qcomb::standard_basis()
                                         : qcomb::muub_basis();
  const qcomb::NetworkKind network_kind = kind == "projective"
                                              ? qcomb::NetworkKind::kProjective
                                              : qcomb::NetworkKind::kOptimalI;
  if (network_kind == qcomb::NetworkKind::kOptimalI && !y.has_value()) {
    std::cerr << "validate: --y is required for the optimal network\n";
    return kExitUsage;
  }
  const qcomb::NetworkParams params = qcomb::NetworkParams::from_y(
      network_kind == qcomb::NetworkKind::kProjective ? 0.0 : *y);
  const double x_used = params.x();
  const double y_used = params.y();
  const qcomb::Tester tester = qcomb::make_network(network_kind, basis, params);
  const qcomb::TesterReport report = qcomb::validate_tester(tester);
  const bool pass = report.pass(tol);
  JsonObject json;
  json.field("kind", kind)
      .field("basis", basis_name)
      .field("x", x_used)
      .field("y", y_used)
      .field("min_eigenvalue", report.min_eigenvalue)
      .field("chain_residual", report.chain_residual)
      .field("marginal_residual", report.marginal_residual)
      .field("trace_residual", report.trace_residual)
      .field("tolerance", tol)
      .field("pass", pass);
  std::cout << json.str();
  return pass ? kExitOk : kExitAnalysisFailure;
}

int run_tradeoff(std::size_t samples, const std::string& out) {
  const auto curve = qcomb::tradeoff_curve(samples);
  std::string csv = "y,x,I,D,residual\n";
  for (const auto& point : curve) {
    csv += fmt(point.y) + "," + fmt(point.x) + "," + fmt(point.information) +
           "," + fmt(point.disturbance) + "," + fmt(point.residual) + "\n";
  }
  write_output(out, csv);
  return kExitOk;
}

std::string analysis_json(double y, const qcomb::SecurityAnalysis& analysis,
                          bool diagnostics) {
  const qcomb::NetworkParams params = qcomb::NetworkParams::from_y(y);
  JsonObject json;
  json.field("x", params.x())
      .field("y", params.y())
      .field("H_AE", analysis.h_ae)
      .field("I_AE", analysis.i_ae)
      .field("E_AB", analysis.e_ab)
      .field("I_AB", analysis.i_ab)
      .field("conclusive_rate", analysis.conclusive_rate);
  if (diagnostics) {
    // The eavesdropper's two posterior-entropy branches, plus the
    // alternative flat-marginal reading of her average uncertainty.
    json.field("h_guess_match", qcomb::eve_entropy_match(params))
        .field("h_guess_other", qcomb::eve_entropy_other(params))
        .field("H_AE_uniform_marginals",
               qcomb::alice_eve_entropy_uniform_marginals(params));
  }
  return json.str();
}

int run_analyze(std::optional<double> y, bool curve, std::size_t samples,
                const std::string& out, const std::string& format,
                bool diagnostics) {
  if (curve) {
    std::string csv = "E_AB,I_AB,I_AE\n";
    for (std::size_t k = 0; k < samples; ++k) {
      const double yk = static_cast<double>(samples - 1 - k) /
                        static_cast<double>(samples - 1);
      const qcomb::SecurityAnalysis analysis =
          qcomb::analyze(qcomb::NetworkParams::from_y(yk));
      csv += fmt(analysis.e_ab) + "," + fmt(analysis.i_ab) + "," +
             fmt(analysis.i_ae) + "\n";
    }
    write_output(out, csv);
    return kExitOk;
  }
  if (!y.has_value()) {
    std::cerr << "analyze: --y is required unless --curve is given\n";
    return kExitUsage;
  }
  const qcomb::SecurityAnalysis analysis =
      qcomb::analyze(qcomb::NetworkParams::from_y(*y));
  if (format == "csv") {
    const qcomb::NetworkParams params = qcomb::NetworkParams::from_y(*y);
    std::string csv = "x,y,H_AE,I_AE,E_AB,I_AB,conclusive_rate\n";
    csv += fmt(params.x()) + "," + fmt(params.y()) + "," + fmt(analysis.h_ae) +
           "," + fmt(analysis.i_ae) + "," + fmt(analysis.e_ab) + "," +
           fmt(analysis.i_ab) + "," + fmt(analysis.conclusive_rate) + "\n";
    write_output(out, csv);
  } else {
    write_output(out, analysis_json(*y, analysis, diagnostics));
  }
  return kExitOk;
}

int run_simulate(double y, std::uint64_t rounds, std::uint64_t seed,
                 const std::string& out) {
  const qcomb::NetworkParams params = qcomb::NetworkParams::from_y(y);
  const qcomb::MonteCarloResult mc =
      qcomb::simulate_monte_carlo(qcomb::EveConfig{params}, rounds, seed);
  JsonObject json;
  json.field("x", params.x())
      .field("y", params.y())
      .field("rounds", mc.rounds)
      .field("seed", mc.seed)
      .field("conclusive_rounds", mc.conclusive_rounds)
      .field("H_AE", mc.analysis.h_ae)
      .field("I_AE", mc.analysis.i_ae)
      .field("E_AB", mc.analysis.e_ab)
      .field("I_AB", mc.analysis.i_ab)
      .field("conclusive_rate", mc.analysis.conclusive_rate)
      .field("E_AB_stderr", mc.e_ab_stderr)
      .field("conclusive_rate_stderr", mc.conclusive_rate_stderr)
      .field("H_AE_stderr", mc.h_ae_stderr)
      .field("E_AB_defined", mc.e_ab_defined);
  write_output(out, json.str());
  return kExitOk;
}

int run_threshold(double tol, const std::string& out) {
  qcomb::ThresholdResult threshold;
  try {
    threshold = qcomb::security_threshold(tol);
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return kExitAnalysisFailure;
  }
  JsonObject json;
  json.field("y_star", threshold.y_star)
      .field("E_star", threshold.e_star)
      .field("I_star", threshold.i_star);
  write_output(out, json.str());
  return kExitOk;
}

int run_check(std::uint64_t rounds, std::uint64_t seed, int perturb) {
  qcomb::CheckOptions options;
  options.monte_carlo_rounds = rounds;
  options.seed = seed;
  options.perturb_row = perturb;
  const auto rows = qcomb::run_reference_checks(options);
  const auto& groups = qcomb::check_group_names();
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  int index = 0;
  for (const auto& row : rows) {
    std::ostringstream line;
    line << (row.pass ? "[ ok ] " : "[FAIL] ") << index++ << "  "
         << groups[static_cast<std::size_t>(row.group)] << ": " << row.name;
    line << std::string(width + 2 > row.name.size() ? width + 2 - row.name.size() : 1, ' ')
         << "computed=" << fmt(row.computed) << " expected=" << fmt(row.expected)
         << " tol=" << fmt(row.tolerance);
    std::cout << line.str() << "\n";
  }
  const bool pass = qcomb::all_pass(rows);
  std::cout << (pass ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
  return pass ? kExitOk : kExitAnalysisFailure;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"Finite-outcome 2-tester networks and two-way QKD security analysis"};
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand(
      "validate", "Check a network against the causal normalization conditions");
  std::string kind = "projective";
  std::string basis_name = "standard";
  std::optional<double> validate_y;
  double validate_tol = default_tolerance();
  validate->add_option("--kind", kind, "Network kind")
      ->check(CLI::IsMember({"projective", "optimal"}));
  validate->add_option("--basis", basis_name, "Guess basis")
      ->check(CLI::IsMember({"standard", "muub"}));
  validate->add_option("--y", validate_y, "Curve parameter y")
      ->check(CLI::Range(0.0, 1.0));
  validate->add_option("--tol", validate_tol, "Pass tolerance");

  // tradeoff
  auto* tradeoff = app.add_subcommand(
      "tradeoff", "Emit the information-disturbance curve as CSV");
  std::size_t tradeoff_samples = 1001;
  std::string tradeoff_out;
  tradeoff->add_option("--samples", tradeoff_samples, "Sample count (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  tradeoff->add_option("--out", tradeoff_out, "Output path (default stdout)");

  // qkd
  auto* qkd = app.add_subcommand("qkd", "Two-way protocol security analysis");
  qkd->require_subcommand(1);

  auto* analyze = qkd->add_subcommand(
      "analyze", "Exact analysis at one y, or the full curve with --curve");
  std::optional<double> analyze_y;
  bool analyze_curve = false;
  std::size_t analyze_samples = 101;
  std::string analyze_out;
  std::string analyze_format = "json";
  bool analyze_diagnostics = false;
  analyze->add_option("--y", analyze_y, "Curve parameter y")
      ->check(CLI::Range(0.0, 1.0));
  analyze->add_flag("--curve", analyze_curve,
                    "Emit CSV E_AB,I_AB,I_AE sampled over y");
  analyze->add_option("--samples", analyze_samples, "Curve sample count")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  analyze->add_option("--out", analyze_out, "Output path (default stdout)");
  analyze->add_option("--format", analyze_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_flag("--diagnostics", analyze_diagnostics,
                    "Include the alternative entropy reading");

  auto* simulate = qkd->add_subcommand("simulate", "Monte Carlo protocol rounds");
  double simulate_y = 0.0;
  std::uint64_t simulate_rounds = 1000000;
  std::uint64_t simulate_seed = 1;
  std::string simulate_out;
  simulate->add_option("--y", simulate_y, "Curve parameter y")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--rounds", simulate_rounds, "Round count (>= 1)")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  simulate->add_option("--seed", simulate_seed, "Stream seed");
  simulate->add_option("--out", simulate_out, "Output path (default stdout)");

  auto* threshold = qkd->add_subcommand(
      "threshold", "Error rate where the two mutual informations cross");
  double threshold_tol = 1e-9;
  std::string threshold_out;
  threshold->add_option("--tol", threshold_tol, "Bisection width on y")
      ->check(CLI::PositiveNumber);
  threshold->add_option("--out", threshold_out, "Output path (default stdout)");

  // check
  auto* check = app.add_subcommand(
      "check", "Recompute every built-in reference value and compare");
  std::uint64_t check_rounds = 1000000;
  std::uint64_t check_seed = 1;
  int check_perturb = -1;
  check->add_option("--rounds", check_rounds, "Monte Carlo rounds")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  check->add_option("--seed", check_seed, "Monte Carlo seed");
  check
      ->add_option("--perturb", check_perturb,
                   "Test hook: corrupt the given row and expect a failure")
      ->check(CLI::Range(0, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      return run_validate(kind, basis_name, validate_y, validate_tol);
    }
    if (tradeoff->parsed()) {
      return run_tradeoff(tradeoff_samples, tradeoff_out);
    }
    if (qkd->parsed()) {
      if (analyze->parsed()) {
        return run_analyze(analyze_y, analyze_curve, analyze_samples,
                           analyze_out, analyze_format, analyze_diagnostics);
      }
      if (simulate->parsed()) {
        return run_simulate(simulate_y, simulate_rounds, simulate_seed,
                            simulate_out);
      }
      if (threshold->parsed()) {
        return run_threshold(threshold_tol, threshold_out);
      }
    }
    if (check->parsed()) {
      return run_check(check_rounds, check_seed, check_perturb);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysisFailure;
  }
  return kExitUsage;
}
