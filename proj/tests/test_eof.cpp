#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "antisym/bounds.hpp"
#include "antisym/eof.hpp"
#include "test_support.hpp"

using namespace antisym;
using antisym::testing::random_antisym_mixed;

namespace {

Matrix random_isometry_for_test(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) g(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(rows, cols);
}

MixedState maximally_mixed_antisym() {
  std::vector<double> w{1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::vector<Vector> states;
  for (std::size_t i = 0; i < 3; ++i) states.push_back(state_vector(AmplitudeTensor::basis(1, i)));
  return mixed_from_ensemble(w, states, 3, 3, 1);
}

}  // namespace

TEST_CASE("mixed state construction and tags") {
  MixedState mm = maximally_mixed_antisym();
  CHECK(mm.antisym_copies == 1);
  CHECK(antisym_support_residual(mm.rho, 1) < 1e-12);

  // tagging a non-antisymmetric state must fail
  Matrix third = Matrix::Identity(9, 9) / 9.0;
  CHECK_THROWS_AS(make_mixed_state(3, 3, third, 1), std::invalid_argument);
  CHECK_NOTHROW(make_mixed_state(3, 3, third));

  MixedState prod = tensor_product(mm, mm);
  CHECK(prod.antisym_copies == 2);
  CHECK(prod.dim_a == 9);
  CHECK(antisym_support_residual(prod.rho, 2) < 1e-12);
}

TEST_CASE("ensemble average entropy") {
  SUBCASE("single-element decomposition of a pure state") {
    Vector psi = state_vector(random_amplitude_tensor(2, 5));
    DecompositionEnsemble e{{1.0}, {psi}};
    CHECK(ensemble_average_entropy(e, 9, 9) ==
          doctest::Approx(entropy_of_entanglement(random_amplitude_tensor(2, 5))).epsilon(1e-12));
  }
  SUBCASE("separable mixture scores zero") {
    Vector v00 = Vector::Zero(4), v11 = Vector::Zero(4);
    v00(0) = 1.0;
    v11(3) = 1.0;
    DecompositionEnsemble e{{0.5, 0.5}, {v00, v11}};
    CHECK(ensemble_average_entropy(e, 2, 2) == doctest::Approx(0.0));
  }
  SUBCASE("every decomposition of a one-copy antisymmetric state scores one") {
    MixedState mm = random_antisym_mixed(3, 321);
    Eigensystem eig = rank_eigensystem(mm.rho);
    for (std::uint64_t s = 0; s < 6; ++s) {
      auto e = decomposition_from_isometry(eig, random_isometry_for_test(5, eig.rank(), 40 + s));
      double value = ensemble_average_entropy(e, 3, 3);
      CHECK(value >= 1.0 - 1e-6);
      CHECK(value == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(reconstruction_residual(e, mm.rho) < 1e-9);
    }
  }
  SUBCASE("validation") {
    Vector psi = state_vector(random_amplitude_tensor(1, 5));
    CHECK_THROWS_AS(ensemble_average_entropy({{0.6, 0.6}, {psi, psi}}, 3, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(ensemble_average_entropy({{1.0}, {Vector(2.0 * psi)}}, 3, 3),
                    std::invalid_argument);
  }
}

TEST_CASE("decompositions from isometries") {
  MixedState mm = random_antisym_mixed(3, 77);
  Eigensystem eig = rank_eigensystem(mm.rho);

  SUBCASE("identity isometry reproduces the eigen-ensemble") {
    auto e = decomposition_from_isometry(eig, Matrix::Identity(eig.rank(), eig.rank()));
    REQUIRE(e.size() == static_cast<std::size_t>(eig.rank()));
    for (int k = 0; k < eig.rank(); ++k) {
      CHECK(e.weights[static_cast<std::size_t>(k)] == doctest::Approx(eig.values(k)).epsilon(1e-12));
      CHECK(std::abs(std::abs(eig.vectors.col(k).dot(e.states[static_cast<std::size_t>(k)])) - 1.0) <
            1e-12);
    }
  }
  SUBCASE("random isometries reconstruct the state") {
    for (std::uint64_t s = 0; s < 8; ++s) {
      auto u = random_isometry_for_test(6, eig.rank(), 500 + s);
      auto e = decomposition_from_isometry(eig, u);
      CHECK(reconstruction_residual(e, mm.rho) < 1e-9);
    }
  }
  SUBCASE("rank-one states only ever produce the pure state") {
    Vector psi = state_vector(random_amplitude_tensor(1, 13));
    MixedState pure = mixed_from_pure(psi, 3, 3, 1);
    Eigensystem peig = rank_eigensystem(pure.rho);
    REQUIRE(peig.rank() == 1);
    auto e = decomposition_from_isometry(peig, random_isometry_for_test(4, 1, 9));
    for (const auto& state : e.states)
      CHECK(std::abs(std::abs(psi.dot(state)) - 1.0) < 1e-10);
  }
  SUBCASE("non-isometric input is rejected") {
    Matrix bad = Matrix::Identity(eig.rank(), eig.rank());
    bad(0, 0) = 1.5;
    CHECK_THROWS_AS(decomposition_from_isometry(eig, bad), std::invalid_argument);
  }
  SUBCASE("isometry round trip") {
    auto u = random_isometry_for_test(5, eig.rank(), 222);
    auto e = decomposition_from_isometry(eig, u);
    Matrix u2 = isometry_from_ensemble(eig, e);
    auto e2 = decomposition_from_isometry(eig, u2);
    REQUIRE(e.size() == e2.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
      CHECK(e.weights[j] == doctest::Approx(e2.weights[j]).epsilon(1e-10));
      CHECK(std::abs(std::abs(e.states[j].dot(e2.states[j])) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("eof upper bound basics") {
  SUBCASE("pure state: the exact entropy at iteration zero") {
    auto a = random_amplitude_tensor(2, 15);
    MixedState pure = mixed_from_pure(state_vector(a), 9, 9, 2);
    OptimizerConfig cfg;
    cfg.restarts = 1;
    EofResult res = eof_upper_bound(pure, cfg);
    CHECK(res.value == doctest::Approx(entropy_of_entanglement(a)).epsilon(1e-12));
    REQUIRE(!res.trace.empty());
    CHECK(res.trace[0].iteration == 0);
    CHECK(res.trace[0].objective == doctest::Approx(res.value).epsilon(1e-12));
  }
  SUBCASE("one-copy mixed states evaluate to one ebit") {
    for (std::uint64_t s = 0; s < 4; ++s) {
      MixedState mm = random_antisym_mixed(2 + static_cast<int>(s % 2), 1000 + s);
      OptimizerConfig cfg;
      cfg.restarts = 8;
      cfg.seed = s;
      EofResult res = eof_upper_bound(mm, cfg);
      CHECK(res.value >= 1.0 - 1e-9);
      CHECK(res.value <= 1.0 + 1e-3);
    }
  }
  SUBCASE("deterministic value and trace") {
    MixedState mm = random_antisym_mixed(3, 2024);
    OptimizerConfig cfg;
    cfg.restarts = 3;
    cfg.max_iterations = 40;
    EofResult r1 = eof_upper_bound(mm, cfg);
    EofResult r2 = eof_upper_bound(mm, cfg);
    CHECK(r1.value == r2.value);
    REQUIRE(r1.trace.size() == r2.trace.size());
    for (std::size_t i = 0; i < r1.trace.size(); ++i) {
      CHECK(r1.trace[i].objective == r2.trace[i].objective);
      CHECK(r1.trace[i].step_norm == r2.trace[i].step_norm);
    }
  }
  SUBCASE("accepted objective is monotone within each restart") {
    MixedState prod = tensor_product(random_antisym_mixed(2, 1), random_antisym_mixed(2, 2));
    OptimizerConfig cfg;
    cfg.restarts = 3;
    cfg.max_iterations = 60;
    EofResult res = eof_upper_bound(prod, cfg);
    for (std::size_t i = 1; i < res.trace.size(); ++i)
      if (res.trace[i].restart == res.trace[i - 1].restart)
        CHECK(res.trace[i].objective <= res.trace[i - 1].objective + 1e-12);
  }
  SUBCASE("best value is non-increasing in restart count") {
    MixedState prod = tensor_product(random_antisym_mixed(2, 3), random_antisym_mixed(2, 4));
    double previous = 1e300;
    for (int restarts = 1; restarts <= 4; ++restarts) {
      OptimizerConfig cfg;
      cfg.restarts = restarts;
      cfg.max_iterations = 25;
      double v = eof_upper_bound(prod, cfg).value;
      CHECK(v <= previous + 1e-15);
      previous = v;
    }
  }
  SUBCASE("ensemble size below rank is rejected") {
    MixedState mm = random_antisym_mixed(3, 5);
    OptimizerConfig cfg;
    cfg.ensemble_size = 2;
    CHECK_THROWS_AS(eof_upper_bound(mm, cfg), std::invalid_argument);
  }
}

TEST_CASE("grid oracle brackets the optimizer on a rank-2 state with m = 2") {
  MixedState rho = testing::random_two_qubit_rank2(404);
  Eigensystem eig = rank_eigensystem(rho.rho);
  REQUIRE(eig.rank() == 2);

  // Every 2x2 unitary is a row-phase gauge times this two-parameter family.
  double grid_min = 1e300;
  const int theta_steps = 120, phase_steps = 180;
  for (int it = 0; it <= theta_steps; ++it) {
    double theta = (std::numbers::pi / 2) * it / theta_steps;
    double c = std::cos(theta), s = std::sin(theta);
    for (int ip = 0; ip < phase_steps; ++ip) {
      double delta = 2 * std::numbers::pi * ip / phase_steps;
      Complex z = std::polar(1.0, delta);
      Matrix u(2, 2);
      u << c, -s * z, s, c * z;
      auto e = decomposition_from_isometry(eig, u);
      grid_min = std::min(grid_min, ensemble_average_entropy(e, 2, 2));
    }
  }

  OptimizerConfig cfg;
  cfg.ensemble_size = 2;
  cfg.restarts = 8;
  cfg.seed = 5;
  EofResult res = eof_upper_bound(rho, cfg);
  CHECK(res.value <= grid_min + 1e-9);
  CHECK(std::abs(res.value - grid_min) < 1e-4);
}

TEST_CASE("two-qubit optimizer matches the closed-form entanglement of formation") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    MixedState rho = testing::random_two_qubit_rank2(7000 + s);
    double closed_form = testing::wootters_eof(rho.rho);
    OptimizerConfig cfg;
    cfg.ensemble_size = 4;
    cfg.restarts = 12;
    cfg.max_iterations = 600;
    cfg.seed = s;
    EofResult res = eof_upper_bound(rho, cfg);
    CHECK(res.value >= closed_form - 1e-9);
    CHECK(res.value <= closed_form + 5e-3);
  }
}

TEST_CASE("product ensembles") {
  MixedState r1 = random_antisym_mixed(2, 31);
  MixedState r2 = random_antisym_mixed(3, 32);
  Eigensystem e1 = rank_eigensystem(r1.rho), e2 = rank_eigensystem(r2.rho);
  auto ens1 = decomposition_from_isometry(e1, random_isometry_for_test(4, e1.rank(), 1));
  auto ens2 = decomposition_from_isometry(e2, random_isometry_for_test(5, e2.rank(), 2));

  auto prod = product_ensemble(ens1, 3, 3, ens2, 3, 3);
  CHECK(prod.size() == ens1.size() * ens2.size());

  double sum = ensemble_average_entropy(ens1, 3, 3) + ensemble_average_entropy(ens2, 3, 3);
  CHECK(ensemble_average_entropy(prod, 9, 9) == doctest::Approx(sum).epsilon(1e-9));

  MixedState rp = tensor_product(r1, r2);
  CHECK(reconstruction_residual(prod, rp.rho) < 1e-9);

  SUBCASE("warm start pins the initial objective to the factor sum") {
    OptimizerConfig cfg;
    cfg.restarts = 1;
    cfg.max_iterations = 0;
    EofResult res = eof_upper_bound(rp, cfg, &prod);
    REQUIRE(!res.trace.empty());
    CHECK(res.trace[0].objective == doctest::Approx(sum).epsilon(1e-9));
    CHECK(res.value <= sum + 1e-9);
  }
}

TEST_CASE("eof sandwich") {
  SUBCASE("maximally mixed on the antisymmetric subspace") {
    OptimizerConfig cfg;
    cfg.restarts = 8;
    SandwichReport rep = eof_sandwich(maximally_mixed_antisym(), cfg);
    CHECK(rep.lower == 1.0);
    CHECK(rep.upper >= 1.0 - 1e-9);
    CHECK(rep.upper <= 1.0 + 1e-3);
    CHECK(rep.gap >= -1e-9);
  }
  SUBCASE("two-copy product reaches two ebits from a cold start") {
    MixedState prod = tensor_product(random_antisym_mixed(2, 55), random_antisym_mixed(3, 56));
    OptimizerConfig cfg;
    cfg.restarts = 8;
    cfg.seed = 3;
    SandwichReport rep = eof_sandwich(prod, cfg);
    CHECK(rep.lower == 2.0);
    CHECK(rep.upper <= 2.0 + 5e-3);
    CHECK(rep.gap >= -1e-9);
  }
  SUBCASE("pure states close the gap immediately") {
    auto a = random_amplitude_tensor(2, 18);
    MixedState pure = mixed_from_pure(state_vector(a), 9, 9, 2);
    OptimizerConfig cfg;
    cfg.restarts = 1;
    SandwichReport rep = eof_sandwich(pure, cfg);
    CHECK(std::abs(rep.gap) < 1e-9);
    CHECK(rep.lower == doctest::Approx(entropy_of_entanglement(a)).epsilon(1e-12));
  }
  SUBCASE("untagged states are rejected") {
    MixedState untagged = make_mixed_state(3, 3, Matrix::Identity(9, 9) / 9.0);
    CHECK_THROWS_AS(eof_sandwich(untagged, OptimizerConfig{}), std::invalid_argument);
  }
  SUBCASE("every best-ensemble element stays in the antisymmetric subspace") {
    MixedState prod = tensor_product(random_antisym_mixed(2, 57), random_antisym_mixed(2, 58));
    OptimizerConfig cfg;
    cfg.restarts = 4;
    SandwichReport rep = eof_sandwich(prod, cfg);
    Matrix p = antisym_projector(2);
    for (const auto& psi : rep.opt.best.states) {
      double residual = 1.0 - (psi.adjoint() * p * psi)(0, 0).real();
      CHECK(residual < 1e-8);
    }
  }
}

TEST_CASE("entanglement-cost ratios") {
  MixedState rho = random_antisym_mixed(3, 606);
  OptimizerConfig cfg;
  cfg.restarts = 6;
  cfg.seed = 2;
  auto points = ec_estimate(rho, 2, cfg);
  REQUIRE(points.size() == 2);
  for (const auto& p : points) {
    CHECK(p.lower_ratio == 1.0);
    CHECK(p.upper_ratio >= 1.0 - 1e-9);
    CHECK(p.upper_ratio <= 1.0 + 2.5e-3);
  }
  CHECK(points[0].copies == 1);
  CHECK(points[1].copies == 2);

  CHECK_THROWS_AS(ec_estimate(rho, 4, cfg), std::invalid_argument);
  MixedState untagged = make_mixed_state(3, 3, Matrix::Identity(9, 9) / 9.0);
  CHECK_THROWS_AS(ec_estimate(untagged, 2, cfg), std::invalid_argument);
}
