#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antisym/spectra.hpp"

namespace antisym {

/// A bipartite mixed state, optionally tagged as supported in the n-copy
/// antisymmetric subspace (the tag is verified on construction: projector
/// residual < 1e-9).
struct MixedState {
  int dim_a = 0;
  int dim_b = 0;
  Matrix rho;
  std::optional<int> antisym_copies;
};

MixedState make_mixed_state(int dim_a, int dim_b, Matrix rho,
                            std::optional<int> antisym_copies = std::nullopt);
MixedState mixed_from_pure(const Vector& psi, int dim_a, int dim_b,
                           std::optional<int> antisym_copies = std::nullopt);
MixedState mixed_from_ensemble(const std::vector<double>& weights,
                               const std::vector<Vector>& states, int dim_a, int dim_b,
                               std::optional<int> antisym_copies = std::nullopt);

/// Interleaved tensor product; tags combine when both factors are tagged.
MixedState tensor_product(const MixedState& x, const MixedState& y);

/// Weights p_j > 0 summing to one and unit pure states psi_j with
/// sum_j p_j psi_j psi_j^dagger = rho.
struct DecompositionEnsemble {
  std::vector<double> weights;
  std::vector<Vector> states;

  std::size_t size() const { return weights.size(); }
};

/// Max-abs entrywise deviation of sum_j p_j psi_j psi_j^dagger from rho.
double reconstruction_residual(const DecompositionEnsemble& e, const Matrix& rho);

/// sum_j p_j E(psi_j); an upper bound on E_f of the reconstructed state.
double ensemble_average_entropy(const DecompositionEnsemble& e, int dim_a, int dim_b);

/// Rank-trimmed eigendecomposition (eigenvalues > cutoff, descending).
struct Eigensystem {
  RealVector values;
  Matrix vectors;  // columns

  int rank() const { return static_cast<int>(values.size()); }
};
Eigensystem rank_eigensystem(const Matrix& rho, double cutoff = 1e-12);

/// All size-m decompositions of rho arise from an m x r matrix U with
/// orthonormal columns acting on the eigen-ensemble:
///   phi_j = sum_k U_{jk} sqrt(lambda_k) v_k,  p_j = |phi_j|^2.
/// Elements with p_j < 1e-14 are dropped. Throws if U is not an isometry
/// (U^dagger U = I within 1e-10).
DecompositionEnsemble decomposition_from_isometry(const Eigensystem& eig, const Matrix& u);

/// Inverse map: the isometry that reproduces a valid ensemble of rho.
Matrix isometry_from_ensemble(const Eigensystem& eig, const DecompositionEnsemble& e);

struct OptimizerConfig {
  int ensemble_size = 0;       // 0 -> rank + 2
  int restarts = 8;
  int max_iterations = 400;
  double step_tolerance = 1e-10;
  double objective_tolerance = 1e-11;
  std::uint64_t seed = 1;
};

struct TracePoint {
  int restart = 0;
  int iteration = 0;
  double objective = 0.0;
  double step_norm = 0.0;
};

struct EofResult {
  double value = 0.0;
  DecompositionEnsemble best;
  bool converged = false;
  std::vector<TracePoint> trace;
  std::string input_digest;
};

/// Numerical upper bound on E_f(rho): multi-restart Riemannian descent over
/// the isometry parameterization of decompositions. Restart 0 starts from the
/// warm-start ensemble when given, else from the eigen-ensemble; later
/// restarts are Haar-random. Deterministic for a given (rho, cfg); the value
/// is the minimum over every ensemble evaluated and the accepted objective is
/// monotone non-increasing within each restart.
EofResult eof_upper_bound(const MixedState& state, const OptimizerConfig& cfg,
                          const DecompositionEnsemble* warm_start = nullptr);

/// Ensemble for rho1 ⊗ rho2 built from ensembles of the factors: weights
/// multiply and states tensor (interleaved). Its average entropy is the sum
/// of the factors' average entropies.
DecompositionEnsemble product_ensemble(const DecompositionEnsemble& e1, int a1, int b1,
                                       const DecompositionEnsemble& e2, int a2, int b2);

/// Two-sided report for a state tagged antisymmetric (n copies):
/// lower = n analytically (lower = E(psi) when rho is pure), upper from
/// eof_upper_bound. Every ensemble element the optimizer visits is checked
/// against the n - 1e-6 entropy floor.
struct SandwichReport {
  double lower = 0.0;
  double upper = 0.0;
  double gap = 0.0;
  bool converged = false;
  std::string input_digest;
  EofResult opt;
};

SandwichReport eof_sandwich(const MixedState& state, const OptimizerConfig& cfg,
                            const DecompositionEnsemble* warm_start = nullptr);

/// Finite-n entanglement-cost ratios: for each n <= n_max runs eof_sandwich
/// on rho^{⊗n} (warm-started from the previous level's best ensemble) and
/// reports upper/n and lower/n. Guarded to n_max <= 3.
struct EcPoint {
  int copies = 0;
  double upper_ratio = 0.0;
  double lower_ratio = 0.0;
  SandwichReport report;
};

std::vector<EcPoint> ec_estimate(const MixedState& rho, int n_max, const OptimizerConfig& cfg);

}  // namespace antisym
