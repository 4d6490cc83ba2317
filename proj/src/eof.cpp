#include "antisym/eof.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace antisym {

namespace {

constexpr double kWeightFloor = 1e-14;
constexpr double kRankCutoff = 1e-12;
constexpr double kIsometryTol = 1e-10;
constexpr double kSupportTol = 1e-9;
constexpr double kGradNormTol = 1e-8;

Matrix unflatten(const Vector& phi, int dim_a, int dim_b) {
  Matrix m(dim_a, dim_b);
  for (int j = 0; j < dim_a; ++j)
    for (int k = 0; k < dim_b; ++k) m(j, k) = phi(static_cast<Eigen::Index>(j) * dim_b + k);
  return m;
}

Vector flatten(const Matrix& m) {
  Vector phi(m.rows() * m.cols());
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k) phi(j * m.cols() + k) = m(j, k);
  return phi;
}

/// Entropy of entanglement of a unit bipartite vector, in bits.
double element_entropy(const Vector& psi, int dim_a, int dim_b) {
  Matrix a = unflatten(psi, dim_a, dim_b);
  Eigen::SelfAdjointEigenSolver<Matrix> es(a * a.adjoint(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index t = 0; t < es.eigenvalues().size(); ++t) {
    double mu = es.eigenvalues()(t);
    if (mu > 0.0) s -= mu * std::log2(mu);
  }
  return s;
}

struct Problem {
  int dim_a = 0;
  int dim_b = 0;
  Matrix scaled_vectors;  // D x r, column k = sqrt(lambda_k) v_k
  double element_entropy_floor = -std::numeric_limits<double>::infinity();
};

struct Evaluation {
  double objective = 0.0;
  Matrix gradient;  // m x r; dF = 2 Re <dU, gradient>
};

Evaluation evaluate(const Problem& prob, const Matrix& u, bool want_gradient) {
  const auto m = u.rows();
  const Eigen::Index dim = prob.scaled_vectors.rows();
  Matrix phi = prob.scaled_vectors * u.transpose();  // column j = phi_j

  Evaluation ev;
  Matrix w;
  if (want_gradient) w = Matrix::Zero(dim, m);

  for (Eigen::Index j = 0; j < m; ++j) {
    const double p = phi.col(j).squaredNorm();
    if (p < kWeightFloor) continue;

    Matrix aj = unflatten(phi.col(j), prob.dim_a, prob.dim_b);
    Matrix sigma = aj * aj.adjoint();  // trace p
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        sigma, want_gradient ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);

    double contribution = 0.0;  // p_j * S(rho_j)
    for (Eigen::Index t = 0; t < es.eigenvalues().size(); ++t) {
      double mu = es.eigenvalues()(t);
      if (mu > 0.0) contribution -= mu * std::log2(mu / p);
    }
    if (contribution / p < prob.element_entropy_floor)
      throw std::logic_error(
          "eof optimizer: ensemble element entropy fell below the analytic lower bound; "
          "the input state is not antisymmetric to working precision");
    ev.objective += contribution;

    if (want_gradient) {
      // d(p_j S_j)/dphi* = -(log2(sigma/p) ⊗ I_B) phi_j, restricted to the
      // support of sigma; the sqrt(mu) factor keeps skipped directions harmless.
      Matrix mlog = Matrix::Zero(prob.dim_a, prob.dim_a);
      for (Eigen::Index t = 0; t < es.eigenvalues().size(); ++t) {
        double mu = es.eigenvalues()(t);
        if (mu <= 1e-30 * p) continue;
        mlog.noalias() +=
            std::log2(mu / p) * es.eigenvectors().col(t) * es.eigenvectors().col(t).adjoint();
      }
      w.col(j) = flatten(Matrix(-mlog * aj));
    }
  }
  if (want_gradient) ev.gradient = (prob.scaled_vectors.adjoint() * w).transpose();
  return ev;
}

Matrix tangent_project(const Matrix& u, const Matrix& g) {
  Matrix ug = u.adjoint() * g;
  return g - u * (0.5 * (ug + ug.adjoint()));
}

Matrix polar_retract(const Matrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.adjoint() * x);
  if (es.eigenvalues().minCoeff() < 1e-12) {
    Eigen::HouseholderQR<Matrix> qr(x);
    return qr.householderQ() * Matrix::Identity(x.rows(), x.cols());
  }
  return x * es.eigenvectors() *
         es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

Matrix random_isometry(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(r, c) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(rows, cols);
}

void validate_density(const Matrix& rho) { DensityMatrix probe(rho); }

}  // namespace

MixedState make_mixed_state(int dim_a, int dim_b, Matrix rho,
                            std::optional<int> antisym_copies) {
  if (dim_a < 2 || dim_b < 2) throw std::invalid_argument("MixedState: local dims must be >= 2");
  if (rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b || rho.rows() != rho.cols())
    throw std::invalid_argument("MixedState: matrix must be (dim_a*dim_b) square");
  validate_density(rho);
  if (antisym_copies) {
    int n = *antisym_copies;
    if (dim_a != dim_b || dim_a != static_cast<int>(pow3(n)))
      throw std::invalid_argument("MixedState: antisymmetric tag requires 3^n x 3^n locals");
    double residual = antisym_support_residual(rho, n);
    if (residual > kSupportTol)
      throw std::invalid_argument("MixedState: support is not antisymmetric within tolerance");
  }
  return MixedState{dim_a, dim_b, std::move(rho), antisym_copies};
}

MixedState mixed_from_pure(const Vector& psi, int dim_a, int dim_b,
                           std::optional<int> antisym_copies) {
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("mixed_from_pure: state must be unit norm");
  Vector u = psi / psi.norm();
  return make_mixed_state(dim_a, dim_b, u * u.adjoint(), antisym_copies);
}

MixedState mixed_from_ensemble(const std::vector<double>& weights,
                               const std::vector<Vector>& states, int dim_a, int dim_b,
                               std::optional<int> antisym_copies) {
  if (weights.empty() || weights.size() != states.size())
    throw std::invalid_argument("mixed_from_ensemble: weights/states mismatch");
  double total = 0.0;
  for (double w : weights) {
    if (w <= 0.0) throw std::invalid_argument("mixed_from_ensemble: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::invalid_argument("mixed_from_ensemble: weights must sum to one");
  const auto dim = static_cast<Eigen::Index>(dim_a) * dim_b;
  Matrix rho = Matrix::Zero(dim, dim);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (states[j].size() != dim)
      throw std::invalid_argument("mixed_from_ensemble: state dimension mismatch");
    Vector u = states[j] / states[j].norm();
    rho.noalias() += weights[j] * (u * u.adjoint());
  }
  return make_mixed_state(dim_a, dim_b, std::move(rho), antisym_copies);
}

MixedState tensor_product(const MixedState& x, const MixedState& y) {
  Matrix rho = tensor_product_operator(x.rho, x.dim_a, x.dim_b, y.rho, y.dim_a, y.dim_b);
  std::optional<int> tag;
  if (x.antisym_copies && y.antisym_copies) tag = *x.antisym_copies + *y.antisym_copies;
  return make_mixed_state(x.dim_a * y.dim_a, x.dim_b * y.dim_b, std::move(rho), tag);
}

double reconstruction_residual(const DecompositionEnsemble& e, const Matrix& rho) {
  Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
  for (std::size_t j = 0; j < e.size(); ++j)
    acc.noalias() += e.weights[j] * (e.states[j] * e.states[j].adjoint());
  return (acc - rho).cwiseAbs().maxCoeff();
}

double ensemble_average_entropy(const DecompositionEnsemble& e, int dim_a, int dim_b) {
  if (e.size() == 0) throw std::invalid_argument("ensemble_average_entropy: empty ensemble");
  double total_weight = 0.0;
  for (double w : e.weights) {
    if (w <= 0.0) throw std::invalid_argument("ensemble_average_entropy: weights must be positive");
    total_weight += w;
  }
  if (std::abs(total_weight - 1.0) > 1e-10)
    throw std::invalid_argument("ensemble_average_entropy: weights must sum to one");
  double avg = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const Vector& psi = e.states[j];
    if (psi.size() != static_cast<Eigen::Index>(dim_a) * dim_b)
      throw std::invalid_argument("ensemble_average_entropy: state dimension mismatch");
    if (std::abs(psi.squaredNorm() - 1.0) > 1e-10)
      throw std::invalid_argument("ensemble_average_entropy: states must be unit norm");
    avg += e.weights[j] * element_entropy(psi, dim_a, dim_b);
  }
  return avg;
}

Eigensystem rank_eigensystem(const Matrix& rho, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
  if (es.info() != Eigen::Success) throw std::runtime_error("rank_eigensystem: eigensolver failed");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i)
    if (es.eigenvalues()(i) > cutoff) keep.push_back(i);
  Eigensystem out;
  out.values = RealVector(static_cast<Eigen::Index>(keep.size()));
  out.vectors = Matrix(rho.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    out.values(static_cast<Eigen::Index>(k)) = es.eigenvalues()(keep[k]);
    out.vectors.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  }
  return out;
}

DecompositionEnsemble decomposition_from_isometry(const Eigensystem& eig, const Matrix& u) {
  const auto r = eig.rank();
  if (u.cols() != r) throw std::invalid_argument("decomposition_from_isometry: U must have rank(rho) columns");
  if (u.rows() < r) throw std::invalid_argument("decomposition_from_isometry: U must have at least rank(rho) rows");
  double dev = (u.adjoint() * u - Matrix::Identity(r, r)).cwiseAbs().maxCoeff();
  if (dev > kIsometryTol)
    throw std::invalid_argument("decomposition_from_isometry: U is not an isometry");

  Matrix scaled = eig.vectors * eig.values.cwiseSqrt().asDiagonal();
  Matrix phi = scaled * u.transpose();
  DecompositionEnsemble e;
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    double p = phi.col(j).squaredNorm();
    if (p < kWeightFloor) continue;
    e.weights.push_back(p);
    e.states.push_back(phi.col(j) / std::sqrt(p));
  }
  return e;
}

Matrix isometry_from_ensemble(const Eigensystem& eig, const DecompositionEnsemble& e) {
  const auto r = eig.rank();
  const auto m = static_cast<Eigen::Index>(e.size());
  if (m < r) throw std::invalid_argument("isometry_from_ensemble: ensemble smaller than rank");
  Matrix u(m, r);
  for (Eigen::Index j = 0; j < m; ++j) {
    Vector phi = std::sqrt(e.weights[static_cast<std::size_t>(j)]) * e.states[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < r; ++k)
      u(j, k) = eig.vectors.col(k).dot(phi) / std::sqrt(eig.values(k));
  }
  double dev = (u.adjoint() * u - Matrix::Identity(r, r)).cwiseAbs().maxCoeff();
  if (dev > 1e-8)
    throw std::invalid_argument("isometry_from_ensemble: ensemble does not reconstruct the state");
  return polar_retract(u);
}

EofResult eof_upper_bound(const MixedState& state, const OptimizerConfig& cfg,
                          const DecompositionEnsemble* warm_start) {
  if (cfg.restarts < 1) throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
  if (cfg.max_iterations < 0) throw std::invalid_argument("OptimizerConfig: negative iteration cap");

  Eigensystem eig = rank_eigensystem(state.rho, kRankCutoff);
  const auto r = eig.rank();
  const auto dim = state.rho.rows();

  Eigen::Index m = cfg.ensemble_size == 0 ? r + 2 : cfg.ensemble_size;
  m = std::min<Eigen::Index>(m, dim * dim);
  if (m < r) throw std::invalid_argument("OptimizerConfig: ensemble_size below rank(rho)");

  Problem prob;
  prob.dim_a = state.dim_a;
  prob.dim_b = state.dim_b;
  prob.scaled_vectors = eig.vectors * eig.values.cwiseSqrt().asDiagonal();
  if (state.antisym_copies)
    prob.element_entropy_floor = static_cast<double>(*state.antisym_copies) - 1e-6;

  Matrix warm_u;
  if (warm_start != nullptr) {
    if (reconstruction_residual(*warm_start, state.rho) > 1e-9)
      throw std::invalid_argument("eof_upper_bound: warm start does not reconstruct the state");
    warm_u = isometry_from_ensemble(eig, *warm_start);
    m = std::max(m, warm_u.rows());
  }

  EofResult result;
  result.input_digest = digest(state.rho);
  result.value = std::numeric_limits<double>::infinity();
  Matrix best_u;
  int best_restart = -1;
  bool best_converged = false;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    auto consider = [&](double value, const Matrix& u) {
      if (value < result.value) {
        result.value = value;
        best_u = u;
        best_restart = restart;
      }
    };
    Matrix u;
    if (restart == 0 && warm_start != nullptr) {
      u = Matrix::Zero(m, r);
      u.topRows(warm_u.rows()) = warm_u;
      if (u.rows() > warm_u.rows()) u = polar_retract(u);
    } else if (restart == 0) {
      u = Matrix::Identity(m, r);
    } else {
      u = random_isometry(m, r, cfg.seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(restart)));
    }

    double f = evaluate(prob, u, false).objective;
    consider(f, u);
    result.trace.push_back({restart, 0, f, 0.0});

    double eta = 0.5;
    int stall = 0;
    bool converged = false;
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
      Evaluation ev = evaluate(prob, u, true);
      Matrix grad = tangent_project(u, ev.gradient);
      double gnorm2 = grad.squaredNorm();
      if (std::sqrt(gnorm2) < kGradNormTol) {
        converged = true;
        break;
      }

      eta = std::min(2.0 * eta, 4.0);
      bool accepted = false;
      Matrix candidate;
      double fc = f;
      for (int bt = 0; bt < 60; ++bt) {
        candidate = polar_retract(u - eta * grad);
        fc = evaluate(prob, candidate, false).objective;
        consider(fc, candidate);
        if (fc <= f - 1e-4 * eta * gnorm2) {
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) {
        converged = true;  // no descent direction left at line-search resolution
        break;
      }

      double step_norm = (candidate - u).norm();
      double drop = f - fc;
      u = candidate;
      f = fc;
      result.trace.push_back({restart, iter, f, step_norm});

      if (step_norm <= cfg.step_tolerance) {
        converged = true;
        break;
      }
      if (drop <= cfg.objective_tolerance * std::max(1.0, std::abs(f))) {
        if (++stall >= 3) {
          converged = true;
          break;
        }
      } else {
        stall = 0;
      }
    }
    if (best_restart == restart) best_converged = converged;
  }

  result.best = decomposition_from_isometry(eig, best_u);
  result.converged = best_converged;
  return result;
}

DecompositionEnsemble product_ensemble(const DecompositionEnsemble& e1, int a1, int b1,
                                       const DecompositionEnsemble& e2, int a2, int b2) {
  DecompositionEnsemble out;
  out.weights.reserve(e1.size() * e2.size());
  out.states.reserve(e1.size() * e2.size());
  for (std::size_t j1 = 0; j1 < e1.size(); ++j1)
    for (std::size_t j2 = 0; j2 < e2.size(); ++j2) {
      out.weights.push_back(e1.weights[j1] * e2.weights[j2]);
      out.states.push_back(tensor_product_state(e1.states[j1], a1, b1, e2.states[j2], a2, b2));
    }
  return out;
}

SandwichReport eof_sandwich(const MixedState& state, const OptimizerConfig& cfg,
                            const DecompositionEnsemble* warm_start) {
  if (!state.antisym_copies)
    throw std::invalid_argument("eof_sandwich: state must be tagged antisymmetric");
  const int n = *state.antisym_copies;
  if (antisym_support_residual(state.rho, n) > kSupportTol)
    throw std::invalid_argument("eof_sandwich: support is not antisymmetric within tolerance");

  SandwichReport report;
  report.lower = static_cast<double>(n);
  Eigensystem eig = rank_eigensystem(state.rho, kRankCutoff);
  if (eig.rank() == 1)  // pure state: E_f is the entropy of entanglement itself
    report.lower = element_entropy(eig.vectors.col(0), state.dim_a, state.dim_b);

  report.opt = eof_upper_bound(state, cfg, warm_start);
  report.upper = report.opt.value;
  report.gap = report.upper - report.lower;
  report.converged = report.opt.converged;
  report.input_digest = report.opt.input_digest;
  return report;
}

std::vector<EcPoint> ec_estimate(const MixedState& rho, int n_max, const OptimizerConfig& cfg) {
  if (n_max < 1 || n_max > 3)
    throw std::invalid_argument("ec_estimate: n_max guarded to [1, 3] (bipartite dim 3^n x 3^n)");
  if (!rho.antisym_copies || *rho.antisym_copies != 1)
    throw std::invalid_argument("ec_estimate: input must be a one-copy antisymmetric state");

  std::vector<EcPoint> points;
  DecompositionEnsemble base_best;
  DecompositionEnsemble previous_best;
  MixedState level = rho;
  for (int n = 1; n <= n_max; ++n) {
    OptimizerConfig level_cfg = cfg;
    level_cfg.seed = cfg.seed + static_cast<std::uint64_t>(n);

    SandwichReport report;
    if (n == 1) {
      report = eof_sandwich(level, level_cfg);
      base_best = report.opt.best;
      previous_best = report.opt.best;
    } else {
      level = tensor_product(level, rho);
      const int prev_dim = static_cast<int>(pow3(n - 1));
      DecompositionEnsemble warm =
          product_ensemble(previous_best, prev_dim, prev_dim, base_best, 3, 3);
      report = eof_sandwich(level, level_cfg, &warm);
      previous_best = report.opt.best;
    }

    EcPoint point;
    point.copies = n;
    point.upper_ratio = report.upper / n;
    point.lower_ratio = report.lower / n;
    point.report = std::move(report);
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace antisym
