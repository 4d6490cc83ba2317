#pragma once

#include <map>
#include <span>

#include "antisym/core.hpp"

namespace antisym {

/// Hermitian, trace-one, positive semidefinite complex matrix. Validates on
/// construction: Hermiticity within 1e-12, trace within 1e-12 of one,
/// eigenvalues >= -1e-10. Eigenvalues are kept (descending, clamped to [0,1]).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  const RealVector& spectrum() const { return eigenvalues_; }

 private:
  Matrix entries_;
  RealVector eigenvalues_;
};

/// rho_A = alpha alpha^dagger, the reduced state on Alice's side.
DensityMatrix reduced_density(const CoefficientMatrix& alpha);

/// Eigenvalues, descending, clamped to [0,1].
RealVector eigenvalues(const DensityMatrix& rho);

/// S = -sum lambda_i log2 lambda_i, with 0 log 0 = 0. In bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// I_k = Tr rho^k = sum lambda_i^k, k >= 1. Computed from the spectrum and
/// cross-checked against the matrix-power trace (they must agree to 1e-10).
double power_sum(const DensityMatrix& rho, int k);

/// Elementary symmetric function s_k of the spectrum via Newton's identities
/// on I_1..I_k. s_1 = 1, s_dim = det.
double elementary_symmetric(const DensityMatrix& rho, int k);

/// sqrt(max(s_2, 0)), the generalized concurrence.
double generalized_concurrence(const DensityMatrix& rho);

/// Independent route to s_2: square sum of all 2x2 minors of alpha over
/// ordered row pairs J < J' and column pairs K < K'. Guarded to n <= 3 (cost
/// grows as 3^{4n}).
double s2_minor_oracle(const CoefficientMatrix& alpha);

/// Entropy of entanglement E(psi) = S(Tr_B |psi><psi|) of the pure state with
/// amplitude tensor a. In bits.
double entropy_of_entanglement(const AmplitudeTensor& a);

struct SpectrumSummary {
  RealVector eigenvalues;             // descending
  double entropy_bits = 0.0;
  std::map<int, double> power_sums;   // k -> I_k
  std::map<int, double> sym_functions;  // k -> s_k
  double concurrence = 0.0;
};

/// Spectrum, entropy, I_k and s_k for the requested orders (default 1..3),
/// and the generalized concurrence.
SpectrumSummary summarize(const DensityMatrix& rho, std::span<const int> orders = {});

}  // namespace antisym
