#include "antisym/io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace antisym {

using nlohmann::json;

namespace {

json complex_pairs(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back({v(i).real(), v(i).imag()});
  return arr;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": malformed JSON (" + e.what() + ")");
  }
  return j;
}

std::optional<int> infer_antisym_tag(const Matrix& rho, int dim_a, int dim_b) {
  if (dim_a != dim_b) return std::nullopt;
  int n = 0;
  for (int d = dim_a; d > 1; d /= 3, ++n)
    if (d % 3 != 0) return std::nullopt;
  if (n < 1 || n > 6) return std::nullopt;
  if (antisym_support_residual(rho, n) > 1e-9) return std::nullopt;
  return n;
}

}  // namespace

json state_to_json(const AmplitudeTensor& a) {
  return json{{"n", a.copies()}, {"amplitudes", complex_pairs(a.entries())}};
}

AmplitudeTensor state_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("amplitudes"))
    throw std::runtime_error("state file: missing \"n\" or \"amplitudes\"");
  int n = j.at("n").get<int>();
  if (n < 1) throw std::runtime_error("state file: n must be >= 1");
  const auto& arr = j.at("amplitudes");
  if (!arr.is_array() || arr.size() != pow3(n))
    throw std::runtime_error("state file: expected exactly 3^n amplitude pairs");
  Vector entries(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2)
      throw std::runtime_error("state file: amplitudes must be [re, im] pairs");
    entries(static_cast<Eigen::Index>(i)) = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  double norm = entries.norm();
  if (std::abs(norm - 1.0) > 1e-9)
    throw std::runtime_error("state file: amplitude norm deviates from one beyond 1e-9");
  entries /= norm;
  return AmplitudeTensor(n, std::move(entries));
}

void write_state_file(const std::filesystem::path& path, const AmplitudeTensor& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << state_to_json(a).dump(2) << "\n";
}

AmplitudeTensor read_state_file(const std::filesystem::path& path) {
  return state_from_json(load_json_file(path));
}

MixedState read_mixed_state_file(const std::filesystem::path& path) {
  json j = load_json_file(path);

  if (j.contains("amplitudes")) {  // pure state file
    AmplitudeTensor a = state_from_json(j);
    int dim = static_cast<int>(pow3(a.copies()));
    return mixed_from_pure(state_vector(a), dim, dim, a.copies());
  }

  if (j.contains("weights")) {  // mixture of state files
    const auto& weights_j = j.at("weights");
    const auto& states_j = j.at("states");
    if (!weights_j.is_array() || !states_j.is_array() || weights_j.size() != states_j.size() ||
        weights_j.empty())
      throw std::runtime_error(path.string() + ": mixture needs matching weights/states arrays");
    std::vector<double> weights;
    std::vector<Vector> states;
    int n = -1;
    for (std::size_t i = 0; i < weights_j.size(); ++i) {
      weights.push_back(weights_j[i].get<double>());
      std::filesystem::path sp = states_j[i].get<std::string>();
      if (sp.is_relative()) sp = path.parent_path() / sp;
      AmplitudeTensor a = read_state_file(sp);
      if (n < 0) n = a.copies();
      if (a.copies() != n)
        throw std::runtime_error(path.string() + ": mixture components must share n");
      states.push_back(state_vector(a));
    }
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) throw std::runtime_error(path.string() + ": mixture weights must be positive");
    for (double& w : weights) w /= total;
    int dim = static_cast<int>(pow3(n));
    return mixed_from_ensemble(weights, states, dim, dim, n);
  }

  if (j.contains("entries")) {  // explicit density matrix
    int dim_a = j.at("dim_a").get<int>();
    int dim_b = j.at("dim_b").get<int>();
    if (dim_a < 2 || dim_b < 2) throw std::runtime_error(path.string() + ": bad local dimensions");
    const auto& arr = j.at("entries");
    const auto dim = static_cast<std::size_t>(dim_a) * static_cast<std::size_t>(dim_b);
    if (!arr.is_array() || arr.size() != dim * dim)
      throw std::runtime_error(path.string() + ": expected (dim_a*dim_b)^2 row-major entries");
    Matrix rho(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& pair = arr[i];
      if (!pair.is_array() || pair.size() != 2)
        throw std::runtime_error(path.string() + ": entries must be [re, im] pairs");
      rho(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) =
          Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    auto tag = infer_antisym_tag(rho, dim_a, dim_b);
    return make_mixed_state(dim_a, dim_b, std::move(rho), tag);
  }

  throw std::runtime_error(path.string() + ": unrecognized input schema");
}

json to_json(const SpectrumSummary& s) {
  json eig = json::array();
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) eig.push_back(s.eigenvalues(i));
  json out{{"eigenvalues", eig}, {"entropy_bits", s.entropy_bits}, {"concurrence", s.concurrence}};
  if (auto it = s.power_sums.find(2); it != s.power_sums.end()) out["I2"] = it->second;
  if (auto it = s.sym_functions.find(2); it != s.sym_functions.end()) out["s2"] = it->second;
  return out;
}

json to_json(const BoundReport& r) {
  json out{{"bound", r.bound_name}, {"lhs", r.lhs},
           {"rhs", r.rhs},         {"slack", r.slack},
           {"tolerance", r.tolerance}, {"satisfied", r.satisfied},
           {"input_digest", r.input_digest}};
  if (!r.details.empty()) out["details"] = r.details;
  return out;
}

json to_json(const SampleRecord& r) {
  json out = to_json(r.report);
  out["sample"] = r.index;
  out["seed"] = r.seed;
  return out;
}

json to_json(const CampaignSummary& s) {
  return json{{"summary", true},
              {"bound", s.bound},
              {"samples", s.samples},
              {"violations", s.violations},
              {"min_slack", s.min_slack},
              {"argmin_seed", s.argmin_seed},
              {"timestamp", iso_timestamp_utc()}};
}

json to_json(const FurutaGridResult& r) {
  json equalities = json::array();
  for (const auto& pt : r.equality_points) equalities.push_back({{"lambda", pt[0]}, {"x", pt[1]}});
  json violations = json::array();
  for (const auto& rep : r.violation_reports) violations.push_back(to_json(rep));
  return json{{"summary", true},
              {"bound", "furuta_grid"},
              {"points", r.points},
              {"violations", r.violations},
              {"equality_cases", r.equality_cases},
              {"min_slack", r.min_slack},
              {"equality_points", equalities},
              {"violation_reports", violations},
              {"timestamp", iso_timestamp_utc()}};
}

json to_json(const TracePoint& t) {
  return json{{"restart", t.restart},
              {"iteration", t.iteration},
              {"objective", t.objective},
              {"step_norm", t.step_norm}};
}

json to_json(const OptimizerConfig& cfg) {
  return json{{"ensemble_size", cfg.ensemble_size},
              {"restarts", cfg.restarts},
              {"max_iterations", cfg.max_iterations},
              {"step_tolerance", cfg.step_tolerance},
              {"objective_tolerance", cfg.objective_tolerance},
              {"seed", cfg.seed}};
}

json to_json(const SandwichReport& r) {
  return json{{"lower", r.lower},
              {"upper", r.upper},
              {"gap", r.gap},
              {"converged", r.converged},
              {"input_digest", r.input_digest}};
}

json to_json(const EcPoint& p) {
  json out = to_json(p.report);
  out["n"] = p.copies;
  out["upper_ratio"] = p.upper_ratio;
  out["lower_ratio"] = p.lower_ratio;
  return out;
}

std::string iso_timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

}  // namespace antisym
