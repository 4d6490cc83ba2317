#pragma once

#include <array>
#include <cstdint>

#include "antisym/bounds.hpp"

namespace antisym {

struct SampleRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  BoundReport report;
};

struct CampaignSummary {
  std::string bound;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;
  std::uint64_t argmin_seed = 0;
};

struct CampaignResult {
  std::vector<SampleRecord> records;
  CampaignSummary summary;
};

/// Monte-Carlo campaigns over Haar-random amplitude tensors. Sample i uses
/// seed base_seed ^ i; records are ordered by sample index.
CampaignResult purity_campaign(int n, std::size_t samples, std::uint64_t seed,
                               double tol = 1e-10);
CampaignResult entropy_campaign(int n, std::size_t samples, std::uint64_t seed,
                                double tol = 1e-9);
CampaignResult oracle_campaign(int n, std::size_t samples, std::uint64_t seed,
                               double tol = 1e-9);
CampaignResult defect_campaign(int n, std::size_t samples, std::uint64_t seed,
                               double tol = 1e-9);

struct FurutaGridSpec {
  double lambda_min = 0.01;
  double lambda_max = 1.0;
  double lambda_step = 0.01;
  double x_min = 0.01;
  double x_max = 10.0;
  double x_step = 0.01;
  double tol = 1e-12;
};

struct FurutaGridResult {
  std::size_t points = 0;
  std::size_t violations = 0;
  std::size_t equality_cases = 0;
  double min_slack = 0.0;
  std::vector<BoundReport> violation_reports;
  std::vector<std::array<double, 2>> equality_points;  // (lambda, x)
};

/// Scans -lambda log2 lambda - furuta_rhs(lambda, x) over the grid. Equality
/// cases (|slack| <= tol) are expected exactly on the diagonal x = lambda.
FurutaGridResult furuta_grid_campaign(const FurutaGridSpec& spec = {});

}  // namespace antisym
