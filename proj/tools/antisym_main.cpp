// Command-line front end: state sampling, single-state analysis, Monte-Carlo
// bound campaigns, and entanglement-of-formation sandwich runs.
//
// Exit codes: 0 = all checks pass, 1 = a bound violation was found,
// 2 = usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "antisym/campaigns.hpp"
#include "antisym/eof.hpp"
#include "antisym/io.hpp"

using nlohmann::json;
using namespace antisym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("ANTISYM_OUT_DIR"); dir != nullptr && *dir != '\0')
      p = std::filesystem::path(dir) / p;
  }
  return p;
}

/// Writes to the resolved path, or stdout when out is empty.
void emit(const std::string& out, const std::string& payload) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  auto path = resolve_out(out);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << payload;
}

std::string render_campaign(const CampaignResult& result, const std::string& format) {
  std::ostringstream os;
  if (format == "jsonl") {
    for (const auto& rec : result.records) os << to_json(rec).dump() << "\n";
    os << to_json(result.summary).dump() << "\n";
  } else if (format == "json") {
    json records = json::array();
    for (const auto& rec : result.records) records.push_back(to_json(rec));
    os << json{{"records", records}, {"summary", to_json(result.summary)}}.dump(2) << "\n";
  } else if (format == "csv") {
    os << "sample,seed,bound,lhs,rhs,slack,satisfied\n";
    os << std::setprecision(17);
    for (const auto& rec : result.records)
      os << rec.index << "," << rec.seed << "," << rec.report.bound_name << "," << rec.report.lhs
         << "," << rec.report.rhs << "," << rec.report.slack << ","
         << (rec.report.satisfied ? 1 : 0) << "\n";
  } else {
    throw CLI::ValidationError("--format", "expected json, jsonl or csv");
  }
  return os.str();
}

int run_sample_state(int n, std::uint64_t seed, const std::string& out) {
  AmplitudeTensor a = random_amplitude_tensor(n, seed);
  write_state_file(resolve_out(out), a);
  std::cout << std::setprecision(17) << "n=" << n << " norm=" << a.entries().norm() << " wrote "
            << resolve_out(out).string() << "\n";
  return kExitOk;
}

int run_analyze(const std::string& state_path, const std::string& out) {
  AmplitudeTensor a = read_state_file(state_path);
  DensityMatrix rho = reduced_density(coefficient_matrix(a));
  json report{{"n", a.copies()},
              {"spectrum", to_json(summarize(rho))},
              {"bounds",
               json::array({to_json(purity_bound_check(a)), to_json(antisym_entropy_check(a)),
                            to_json(entropy_purity_bound(rho))})}};
  emit(out, report.dump(2) + "\n");
  return kExitOk;
}

int run_verify(const std::string& bound, int n, std::size_t samples, std::uint64_t seed,
               std::optional<double> tol, const std::string& out, const std::string& format) {
  if (bound == "furuta") {
    FurutaGridSpec spec;
    if (tol) spec.tol = *tol;
    FurutaGridResult grid = furuta_grid_campaign(spec);
    emit(out, to_json(grid).dump(2) + "\n");
    std::cerr << "furuta grid: " << grid.points << " points, " << grid.violations
              << " violations, " << grid.equality_cases << " equality cases\n";
    return grid.violations == 0 ? kExitOk : kExitViolation;
  }

  CampaignResult result;
  if (bound == "purity") {
    result = purity_campaign(n, samples, seed, tol.value_or(1e-10));
  } else if (bound == "entropy") {
    result = entropy_campaign(n, samples, seed, tol.value_or(1e-9));
  } else if (bound == "oracle") {
    result = oracle_campaign(n, samples, seed, tol.value_or(1e-9));
  } else {
    throw CLI::ValidationError("bound", "expected purity, entropy, furuta or oracle");
  }
  emit(out, render_campaign(result, format));
  std::cerr << result.summary.bound << ": " << result.summary.samples << " samples, "
            << result.summary.violations << " violations, min slack " << std::setprecision(17)
            << result.summary.min_slack << "\n";
  return result.summary.violations == 0 ? kExitOk : kExitViolation;
}

int run_eof(const std::string& input, const OptimizerConfig& cfg, double gap_tol,
            const std::string& out, const std::string& trace_out) {
  MixedState state = read_mixed_state_file(input);
  if (!state.antisym_copies) {
    std::cerr << "error: input support could not be verified antisymmetric\n";
    return kExitUsage;
  }
  if (*state.antisym_copies > 3) {
    std::cerr << "error: eof guarded to n <= 3\n";
    return kExitUsage;
  }
  SandwichReport report = eof_sandwich(state, cfg);
  json j = to_json(report);
  j["cfg"] = to_json(cfg);
  j["timestamp"] = iso_timestamp_utc();
  emit(out, j.dump(2) + "\n");
  if (!trace_out.empty()) {
    std::ostringstream os;
    for (const auto& t : report.opt.trace) os << to_json(t).dump() << "\n";
    emit(trace_out, os.str());
  }
  return report.gap <= gap_tol ? kExitOk : kExitViolation;
}

int run_ec_estimate(const std::string& input, int n_max, const OptimizerConfig& cfg,
                    double ratio_tol, const std::string& out) {
  MixedState state = read_mixed_state_file(input);
  if (!state.antisym_copies || *state.antisym_copies != 1) {
    std::cerr << "error: input must be a verified one-copy antisymmetric state\n";
    return kExitUsage;
  }
  auto points = ec_estimate(state, n_max, cfg);
  json arr = json::array();
  bool ok = true;
  for (const auto& p : points) {
    arr.push_back(to_json(p));
    ok = ok && p.upper_ratio <= 1.0 + ratio_tol && p.lower_ratio >= 1.0 - 1e-9;
  }
  emit(out, json{{"points", arr}, {"cfg", to_json(cfg)}, {"timestamp", iso_timestamp_utc()}}.dump(2) + "\n");
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-level antisymmetric state toolkit"};
  app.require_subcommand(1);

  // sample-state
  auto* sample = app.add_subcommand("sample-state", "draw a Haar-random state and write it");
  int sample_n = 1;
  std::uint64_t sample_seed_v = 0;
  std::string sample_out;
  sample->add_option("--n", sample_n, "copy count")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_seed_v, "RNG seed")->required();
  sample->add_option("--out", sample_out, "output state file")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "spectrum summary and bound reports for a state");
  std::string analyze_state, analyze_out;
  analyze->add_option("--state", analyze_state, "state file")->required();
  analyze->add_option("--out", analyze_out, "output file (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "Monte-Carlo or grid bound campaign");
  std::string verify_bound;
  int verify_n = 1;
  std::size_t verify_samples = 100;
  std::uint64_t verify_seed = 0;
  double verify_tol = -1.0;
  std::string verify_out, verify_format = "jsonl";
  verify->add_option("bound", verify_bound, "purity | entropy | furuta | oracle")->required();
  verify->add_option("--n", verify_n, "copy count")->check(CLI::PositiveNumber);
  verify->add_option("--samples", verify_samples, "sample count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "base seed");
  verify->add_option("--tol", verify_tol, "tolerance override");
  verify->add_option("--out", verify_out, "output file (stdout when omitted)");
  verify->add_option("--format", verify_format, "json | jsonl | csv");

  // eof
  auto* eof = app.add_subcommand("eof", "entanglement-of-formation sandwich for a state file");
  std::string eof_input, eof_out, eof_trace;
  OptimizerConfig eof_cfg;
  double eof_gap_tol = 5e-3;
  eof->add_option("--input", eof_input, "state, density or mixture file")->required();
  eof->add_option("--ensemble-size", eof_cfg.ensemble_size, "decomposition size (0 = rank+2)");
  eof->add_option("--restarts", eof_cfg.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  eof->add_option("--iters", eof_cfg.max_iterations, "iteration cap per restart");
  eof->add_option("--seed", eof_cfg.seed, "optimizer seed");
  eof->add_option("--gap-tol", eof_gap_tol, "exit 0 iff upper-lower gap <= this");
  eof->add_option("--out", eof_out, "report file (stdout when omitted)");
  eof->add_option("--trace", eof_trace, "iteration trace file (JSON lines)");

  // ec-estimate
  auto* ec = app.add_subcommand("ec-estimate", "finite-n entanglement-cost ratios");
  std::string ec_input, ec_out;
  int ec_n_max = 2;
  OptimizerConfig ec_cfg;
  double ec_ratio_tol = 2.5e-3;
  ec->add_option("--input", ec_input, "one-copy state, density or mixture file")->required();
  ec->add_option("--n-max", ec_n_max, "largest copy count (<= 3)")->check(CLI::PositiveNumber);
  ec->add_option("--ensemble-size", ec_cfg.ensemble_size, "decomposition size (0 = rank+2)");
  ec->add_option("--restarts", ec_cfg.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  ec->add_option("--iters", ec_cfg.max_iterations, "iteration cap per restart");
  ec->add_option("--seed", ec_cfg.seed, "optimizer seed");
  ec->add_option("--ratio-tol", ec_ratio_tol, "exit 0 iff every upper/n <= 1 + this");
  ec->add_option("--out", ec_out, "report file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sample->parsed()) return run_sample_state(sample_n, sample_seed_v, sample_out);
    if (analyze->parsed()) return run_analyze(analyze_state, analyze_out);
    if (verify->parsed()) {
      std::optional<double> tol;
      if (verify_tol >= 0.0) tol = verify_tol;
      return run_verify(verify_bound, verify_n, verify_samples, verify_seed, tol, verify_out,
                        verify_format);
    }
    if (eof->parsed()) return run_eof(eof_input, eof_cfg, eof_gap_tol, eof_out, eof_trace);
    if (ec->parsed()) return run_ec_estimate(ec_input, ec_n_max, ec_cfg, ec_ratio_tol, ec_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // Cross-check failure inside the library: a genuine violation signal.
    std::cerr << "violation: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
