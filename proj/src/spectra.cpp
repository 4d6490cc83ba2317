#include "antisym/spectra.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace antisym {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kCrossCheckTol = 1e-10;

double entropy_bits(const RealVector& lambda) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    double v = lambda(i);
    if (v > 0.0) s -= v * std::log2(v);
  }
  return s;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw std::invalid_argument("DensityMatrix: expected a square matrix");
  double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace must be one");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (entries_ + entries_.adjoint()),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("DensityMatrix: eigensolver failed");
  RealVector evals = solver.eigenvalues();
  if (evals.minCoeff() < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
  if (evals.maxCoeff() > 1.0 + kPsdTol)
    throw std::invalid_argument("DensityMatrix: eigenvalue above one beyond tolerance");
  eigenvalues_ = RealVector(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    double v = std::min(1.0, std::max(0.0, evals(evals.size() - 1 - i)));
    eigenvalues_(i) = v;  // descending, clamped
  }
}

DensityMatrix reduced_density(const CoefficientMatrix& alpha) {
  const Matrix& m = alpha.matrix();
  return DensityMatrix(m * m.adjoint());
}

RealVector eigenvalues(const DensityMatrix& rho) { return rho.spectrum(); }

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_bits(rho.spectrum()); }

double power_sum(const DensityMatrix& rho, int k) {
  if (k < 1) throw std::invalid_argument("power_sum: k must be >= 1");
  const RealVector& lambda = rho.spectrum();
  double from_spectrum = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) from_spectrum += std::pow(lambda(i), k);

  double from_powers;
  if (k == 1) {
    from_powers = rho.matrix().trace().real();
  } else if (k == 2) {
    from_powers = rho.matrix().squaredNorm();  // Tr(rho^2) = sum |rho_ij|^2
  } else {
    Matrix acc = rho.matrix();
    for (int i = 1; i < k; ++i) acc = acc * rho.matrix();
    from_powers = acc.trace().real();
  }
  if (std::abs(from_spectrum - from_powers) > kCrossCheckTol)
    throw std::logic_error("power_sum: spectrum and matrix-power routes disagree");
  return from_spectrum;
}

double elementary_symmetric(const DensityMatrix& rho, int k) {
  if (k < 1 || k > rho.dim())
    throw std::invalid_argument("elementary_symmetric: k must lie in [1, dim]");
  const RealVector& lambda = rho.spectrum();
  // Newton's identities: k s_k = sum_{i=1..k} (-1)^{i-1} s_{k-i} I_i.
  std::vector<double> power(static_cast<std::size_t>(k) + 1, 0.0);
  for (int i = 1; i <= k; ++i) {
    double p = 0.0;
    for (Eigen::Index t = 0; t < lambda.size(); ++t) p += std::pow(lambda(t), i);
    power[static_cast<std::size_t>(i)] = p;
  }
  std::vector<double> sym(static_cast<std::size_t>(k) + 1, 0.0);
  sym[0] = 1.0;
  for (int i = 1; i <= k; ++i) {
    double acc = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= i; ++j) {
      acc += sign * sym[static_cast<std::size_t>(i - j)] * power[static_cast<std::size_t>(j)];
      sign = -sign;
    }
    sym[static_cast<std::size_t>(i)] = acc / i;
  }
  return sym[static_cast<std::size_t>(k)];
}

double generalized_concurrence(const DensityMatrix& rho) {
  double s2 = rho.dim() >= 2 ? elementary_symmetric(rho, 2) : 0.0;
  return std::sqrt(std::max(s2, 0.0));
}

double s2_minor_oracle(const CoefficientMatrix& alpha) {
  if (alpha.copies() > 3)
    throw std::invalid_argument("s2_minor_oracle: guarded to n <= 3 (cost grows as 3^{4n})");
  const Matrix& m = alpha.matrix();
  const auto dim = m.rows();
  double total = 0.0;
  for (Eigen::Index r1 = 0; r1 < dim; ++r1)
    for (Eigen::Index r2 = r1 + 1; r2 < dim; ++r2)
      for (Eigen::Index c1 = 0; c1 < dim; ++c1)
        for (Eigen::Index c2 = c1 + 1; c2 < dim; ++c2) {
          Complex minor = m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
          total += std::norm(minor);
        }
  return total;
}

double entropy_of_entanglement(const AmplitudeTensor& a) {
  return von_neumann_entropy(reduced_density(coefficient_matrix(a)));
}

SpectrumSummary summarize(const DensityMatrix& rho, std::span<const int> orders) {
  static constexpr int kDefaultOrders[] = {1, 2, 3};
  if (orders.empty()) orders = kDefaultOrders;
  SpectrumSummary s;
  s.eigenvalues = rho.spectrum();
  s.entropy_bits = von_neumann_entropy(rho);
  for (int k : orders) {
    if (k < 1 || k > rho.dim()) continue;
    s.power_sums[k] = power_sum(rho, k);
    s.sym_functions[k] = elementary_symmetric(rho, k);
  }
  s.concurrence = generalized_concurrence(rho);
  return s;
}

}  // namespace antisym
