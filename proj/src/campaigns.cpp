#include "antisym/campaigns.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace antisym {

namespace {

CampaignResult run_sampled(const std::string& bound, int n, std::size_t samples,
                           std::uint64_t base_seed,
                           const std::function<BoundReport(const AmplitudeTensor&)>& check) {
  if (samples < 1) throw std::invalid_argument("campaign: samples must be >= 1");
  CampaignResult result;
  result.records.resize(samples);
  parallel_for_indexed(samples, [&](std::size_t i) {
    std::uint64_t s = sample_seed(base_seed, i);
    AmplitudeTensor a = random_amplitude_tensor(n, s);
    result.records[i] = SampleRecord{i, s, check(a)};
  });

  result.summary.bound = bound;
  result.summary.samples = samples;
  result.summary.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& rec : result.records) {
    if (!rec.report.satisfied) ++result.summary.violations;
    if (rec.report.slack < result.summary.min_slack) {
      result.summary.min_slack = rec.report.slack;
      result.summary.argmin_seed = rec.seed;
    }
  }
  return result;
}

}  // namespace

CampaignResult purity_campaign(int n, std::size_t samples, std::uint64_t seed, double tol) {
  return run_sampled("purity_bound", n, samples, seed, [tol](const AmplitudeTensor& a) {
    BoundReport r = purity_bound_check(a);
    r.tolerance = tol;
    r.satisfied = r.slack >= -tol;
    return r;
  });
}

CampaignResult entropy_campaign(int n, std::size_t samples, std::uint64_t seed, double tol) {
  return run_sampled("entropy_superadditivity", n, samples, seed,
                     [tol](const AmplitudeTensor& a) {
                       BoundReport r = antisym_entropy_check(a);
                       r.tolerance = tol;
                       r.satisfied = r.slack >= -tol;
                       return r;
                     });
}

CampaignResult oracle_campaign(int n, std::size_t samples, std::uint64_t seed, double tol) {
  if (n > 3) throw std::invalid_argument("oracle campaign: guarded to n <= 3");
  return run_sampled("s2_minor_oracle", n, samples, seed, [tol](const AmplitudeTensor& a) {
    CoefficientMatrix alpha = coefficient_matrix(a);
    double from_minors = s2_minor_oracle(alpha);
    double i2 = power_sum(reduced_density(alpha), 2);
    double from_purity = 0.5 * (1.0 - i2);
    return make_identity_report("s2_minor_oracle", from_minors, from_purity, tol,
                                digest(a.entries()), {{"i2", i2}});
  });
}

CampaignResult defect_campaign(int n, std::size_t samples, std::uint64_t seed, double tol) {
  if (n > 3) throw std::invalid_argument("defect campaign: guarded to n <= 3");
  return run_sampled("i2_defect_identity", n, samples, seed, [tol, n](const AmplitudeTensor& a) {
    double i2 = power_sum(reduced_density(coefficient_matrix(a)), 2);
    double defect = i2_defect(a);
    return make_identity_report("i2_defect_identity", i2 + defect, std::pow(0.5, n), tol,
                                digest(a.entries()), {{"i2", i2}, {"defect", defect}});
  });
}

FurutaGridResult furuta_grid_campaign(const FurutaGridSpec& spec) {
  if (spec.lambda_step <= 0.0 || spec.x_step <= 0.0)
    throw std::invalid_argument("furuta grid: steps must be positive");
  FurutaGridResult result;
  result.min_slack = std::numeric_limits<double>::infinity();

  const auto lambda_count =
      static_cast<std::size_t>(std::llround((spec.lambda_max - spec.lambda_min) / spec.lambda_step)) + 1;
  const auto x_count =
      static_cast<std::size_t>(std::llround((spec.x_max - spec.x_min) / spec.x_step)) + 1;

  for (std::size_t i = 0; i < lambda_count; ++i) {
    double lambda = spec.lambda_min + static_cast<double>(i) * spec.lambda_step;
    double lhs = -lambda * std::log2(lambda);
    for (std::size_t j = 0; j < x_count; ++j) {
      double x = spec.x_min + static_cast<double>(j) * spec.x_step;
      double slack = lhs - furuta_rhs(lambda, x);
      ++result.points;
      if (slack < result.min_slack) result.min_slack = slack;
      if (slack < -spec.tol) {
        ++result.violations;
        result.violation_reports.push_back(make_inequality_report(
            "furuta_grid", lhs, furuta_rhs(lambda, x), spec.tol, "",
            {{"lambda", lambda}, {"x", x}}));
      }
      if (std::abs(slack) <= spec.tol) {
        ++result.equality_cases;
        result.equality_points.push_back({lambda, x});
      }
    }
  }
  return result;
}

}  // namespace antisym
