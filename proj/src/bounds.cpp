#include "antisym/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace antisym {

BoundReport make_inequality_report(std::string name, double lhs, double rhs,
                                   double tolerance, std::string input_digest,
                                   std::map<std::string, double> details) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.tolerance = tolerance;
  r.satisfied = r.slack >= -tolerance;
  r.input_digest = std::move(input_digest);
  r.details = std::move(details);
  return r;
}

BoundReport make_identity_report(std::string name, double lhs, double rhs,
                                 double tolerance, std::string input_digest,
                                 std::map<std::string, double> details) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = -std::abs(lhs - rhs);
  r.tolerance = tolerance;
  r.satisfied = r.slack >= -tolerance;
  r.input_digest = std::move(input_digest);
  r.details = std::move(details);
  return r;
}

double furuta_rhs(double lambda, double x) {
  if (!(lambda > 0.0)) throw std::invalid_argument("furuta_rhs: lambda must be positive");
  if (!(x > 0.0)) throw std::invalid_argument("furuta_rhs: x must be positive");
  // Base-2 rescaling of the tangent inequality -t ln t >= (1 - ln x) t - t^2/x.
  return ((1.0 - std::log(x)) * lambda - lambda * lambda / x) * std::numbers::log2e;
}

BoundReport entropy_purity_bound(const DensityMatrix& rho) {
  double lhs = von_neumann_entropy(rho);
  double i2 = power_sum(rho, 2);
  double rhs = -std::log2(i2);
  return make_inequality_report("entropy_purity", lhs, rhs, 1e-9, digest(rho.matrix()),
                                {{"i2", i2}});
}

BoundReport purity_bound_check(const AmplitudeTensor& a) {
  double i2 = power_sum(reduced_density(coefficient_matrix(a)), 2);
  double lhs = std::pow(0.5, a.copies());
  return make_inequality_report("purity_bound", lhs, i2, 1e-10, digest(a.entries()),
                                {{"n", static_cast<double>(a.copies())}});
}

double i2_defect(const AmplitudeTensor& a) {
  const int n = a.copies();
  if (n > 3) throw std::invalid_argument("i2_defect: guarded to n <= 3");
  const std::size_t dim = pow3(n);
  const Vector& amp = a.entries();

  // Digit tables so slot exchanges are cheap.
  std::vector<std::array<int, 3>> digits(dim);
  for (std::size_t flat = 0; flat < dim; ++flat) {
    auto d = decode_multi_index(flat, n);
    for (int m = 0; m < n; ++m) digits[flat][static_cast<std::size_t>(m)] = d[static_cast<std::size_t>(m)];
  }
  std::array<std::size_t, 3> place{};
  {
    std::size_t s = dim / 3;
    for (int m = 0; m < n; ++m, s /= 3) place[static_cast<std::size_t>(m)] = s;
  }

  double total = 0.0;
  const std::size_t subsets = std::size_t{1} << n;
  for (std::size_t mask = 1; mask + 1 < subsets; ++mask) {  // empty and full sets contribute zero
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t pp = 0; pp < dim; ++pp) {
        std::size_t q = p, qp = pp;
        for (int m = 0; m < n; ++m) {
          if ((mask >> m) & 1u) {
            const auto mm = static_cast<std::size_t>(m);
            const long delta = digits[pp][mm] - digits[p][mm];
            q = static_cast<std::size_t>(static_cast<long>(q) + delta * static_cast<long>(place[mm]));
            qp = static_cast<std::size_t>(static_cast<long>(qp) - delta * static_cast<long>(place[mm]));
          }
        }
        Complex diff = amp(static_cast<Eigen::Index>(p)) * amp(static_cast<Eigen::Index>(pp)) -
                       amp(static_cast<Eigen::Index>(q)) * amp(static_cast<Eigen::Index>(qp));
        total += std::norm(diff);
      }
    }
  }
  return total / std::pow(2.0, 2 * n + 1);
}

BoundReport antisym_entropy_check(const AmplitudeTensor& a) {
  const int n = a.copies();
  DensityMatrix rho = reduced_density(coefficient_matrix(a));
  double entropy = von_neumann_entropy(rho);
  double i2 = power_sum(rho, 2);
  double neg_log2_i2 = -std::log2(i2);
  std::map<std::string, double> details{
      {"i2", i2},
      {"neg_log2_i2", neg_log2_i2},
      {"chain_entropy_slack", entropy - neg_log2_i2},
      {"chain_purity_slack", neg_log2_i2 - n},
  };
  return make_inequality_report("entropy_superadditivity", entropy,
                                static_cast<double>(n), 1e-9, digest(a.entries()),
                                std::move(details));
}

double shimono_lower_bound(int d) {
  if (d < 2) throw std::invalid_argument("shimono_lower_bound: d must be >= 2");
  return std::log2(static_cast<double>(d) / (d - 1));
}

}  // namespace antisym
