#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "antisym/core.hpp"
#include "test_support.hpp"

using namespace antisym;

namespace {

// Sign of a 3-permutation by inversion count; 0 on repeats.
int permutation_sign(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  int inversions = (i > j) + (i > k) + (j > k);
  return inversions % 2 == 0 ? 1 : -1;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("levi_civita matches the permutation sign on all 27 triples") {
  CHECK(levi_civita(0, 1, 2) == 1);
  CHECK(levi_civita(0, 2, 1) == -1);
  CHECK(levi_civita(0, 0, 1) == 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(levi_civita(i, j, k) == permutation_sign(i, j, k));
  CHECK_THROWS_AS(levi_civita(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(levi_civita(0, -1, 1), std::invalid_argument);
}

TEST_CASE("multi-index codec") {
  CHECK(encode_multi_index(std::vector<int>{0, 0}) == 0);
  CHECK(encode_multi_index(std::vector<int>{1, 2}) == 5);
  CHECK(encode_multi_index(std::vector<int>{2, 2}) == 8);
  CHECK(decode_multi_index(5, 2) == std::vector<int>{1, 2});

  for (int n = 1; n <= 4; ++n)
    for (std::size_t flat = 0; flat < pow3(n); ++flat)
      CHECK(encode_multi_index(decode_multi_index(flat, n)) == flat);

  CHECK_THROWS_AS(encode_multi_index(std::vector<int>{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(decode_multi_index(9, 2), std::invalid_argument);
}

TEST_CASE("coefficient matrix of basis amplitudes") {
  SUBCASE("a = (1,0,0)") {
    auto alpha = coefficient_matrix(AmplitudeTensor::basis(1, 0));
    CHECK(alpha(1, 2).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(alpha(2, 1).real() == doctest::Approx(-kInvSqrt2).epsilon(1e-14));
    double rest = 0.0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (!((r == 1 && c == 2) || (r == 2 && c == 1))) rest += std::abs(alpha(r, c));
    CHECK(rest == doctest::Approx(0.0));
  }
  SUBCASE("a = (0,0,1)") {
    auto alpha = coefficient_matrix(AmplitudeTensor::basis(1, 2));
    CHECK(alpha(0, 1).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(alpha(1, 0).real() == doctest::Approx(-kInvSqrt2).epsilon(1e-14));
  }
  SUBCASE("product amplitude factorizes into a Kronecker product") {
    auto a1 = AmplitudeTensor::basis(1, 0);
    auto single = coefficient_matrix(a1).matrix();
    auto pair = coefficient_matrix(product_amplitude(a1, a1)).matrix();
    Matrix kron(9, 9);
    for (int r = 0; r < 9; ++r)
      for (int c = 0; c < 9; ++c) kron(r, c) = single(r / 3, c / 3) * single(r % 3, c % 3);
    CHECK((pair - kron).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("epsilon contraction agrees with the naive triple-loop reference") {
  for (int n = 1; n <= 3; ++n) {
    auto a = random_amplitude_tensor(n, 1000 + static_cast<std::uint64_t>(n));
    Matrix fast = epsilon_contract(a.entries(), n);
    Matrix slow = testing::naive_epsilon_contract(a.entries(), n);
    CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("epsilon contraction is linear and an isometry") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n = 1; n <= 3; ++n) {
    const auto dim = static_cast<Eigen::Index>(pow3(n));
    Vector u(dim), v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      u(i) = Complex(gauss(rng), gauss(rng));
      v(i) = Complex(gauss(rng), gauss(rng));
    }
    Complex beta(0.3, -1.1), gamma(-0.8, 0.2);
    Matrix combined = epsilon_contract(beta * u + gamma * v, n);
    Matrix split = beta * epsilon_contract(u, n) + gamma * epsilon_contract(v, n);
    CHECK((combined - split).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(epsilon_contract(u, n).norm() == doctest::Approx(u.norm()).epsilon(1e-12));
  }
}

TEST_CASE("coefficient matrix invariants over random amplitudes") {
  for (int n = 1; n <= 3; ++n) {
    auto alpha = coefficient_matrix(random_amplitude_tensor(n, 40 + static_cast<std::uint64_t>(n)));
    CHECK(alpha.matrix().squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(alpha.max_antisymmetry_violation() < 1e-13);
  }
}

TEST_CASE("amplitude tensor validation") {
  Vector bad = Vector::Ones(3);
  CHECK_THROWS_AS(AmplitudeTensor(1, bad), std::invalid_argument);
  CHECK_THROWS_AS(AmplitudeTensor(2, Vector::Unit(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(AmplitudeTensor(0, Vector::Unit(1, 0)), std::invalid_argument);
}

TEST_CASE("product amplitudes") {
  auto e0 = AmplitudeTensor::basis(1, 0);
  auto e1 = AmplitudeTensor::basis(1, 1);
  auto p00 = product_amplitude(e0, e0);
  CHECK(p00.copies() == 2);
  CHECK(p00[0] == Complex(1.0, 0.0));
  auto p01 = product_amplitude(e0, e1);
  CHECK(p01[1] == Complex(1.0, 0.0));

  for (std::uint64_t s = 0; s < 5; ++s) {
    auto a = random_amplitude_tensor(1, 100 + s);
    auto b = random_amplitude_tensor(2, 200 + s);
    auto prod = product_amplitude(a, b);
    CHECK(prod.entries().norm() == doctest::Approx(1.0).epsilon(1e-12));

    // slot-interleaved product compatibility at the matrix level
    Matrix ma = coefficient_matrix(a).matrix();
    Matrix mb = coefficient_matrix(b).matrix();
    Matrix mp = coefficient_matrix(prod).matrix();
    const int db = static_cast<int>(mb.rows());
    for (int r = 0; r < mp.rows(); ++r)
      for (int c = 0; c < mp.cols(); ++c) {
        Complex expected = ma(r / db, c / db) * mb(r % db, c % db);
        CHECK(std::abs(mp(r, c) - expected) < 1e-14);
      }
  }
}

TEST_CASE("random amplitude tensors are deterministic, unit norm, and sphere-uniform") {
  auto a = random_amplitude_tensor(2, 77);
  auto b = random_amplitude_tensor(2, 77);
  CHECK((a.entries() - b.entries()).norm() == 0.0);
  CHECK(std::abs(a.entries().squaredNorm() - 1.0) < 1e-12);

  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    auto t = random_amplitude_tensor(1, sample_seed(5000, static_cast<std::uint64_t>(i)));
    for (int c = 0; c < 3; ++c) mean(c) += std::norm(t[static_cast<std::size_t>(c)]);
  }
  mean /= samples;
  for (int c = 0; c < 3; ++c) CHECK(std::abs(mean(c) - 1.0 / 3.0) < 0.02);
}

TEST_CASE("state vector layout and membership") {
  SUBCASE("a = (1,0,0) has support on |1,2> and |2,1>") {
    Vector psi = state_vector(AmplitudeTensor::basis(1, 0));
    CHECK(psi(5).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(psi(7).real() == doctest::Approx(-kInvSqrt2).epsilon(1e-14));
  }
  SUBCASE("a = (0,1,0) has support exactly on |2,0> and |0,2>") {
    Vector psi = state_vector(AmplitudeTensor::basis(1, 1));
    for (Eigen::Index i = 0; i < 9; ++i) {
      if (i == 6 || i == 2)
        CHECK(std::abs(psi(i)) == doctest::Approx(kInvSqrt2).epsilon(1e-14));
      else
        CHECK(std::abs(psi(i)) == doctest::Approx(0.0));
    }
  }
  SUBCASE("unit norm and antisymmetric membership for random states") {
    Matrix p1 = antisym_projector(1);
    for (std::uint64_t s = 0; s < 10; ++s) {
      Vector psi = state_vector(random_amplitude_tensor(1, 300 + s));
      CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK((psi - p1 * psi).norm() < 1e-12);
    }
  }
  SUBCASE("per-copy swap negates the state at n = 2") {
    Vector psi = state_vector(random_amplitude_tensor(2, 99));
    for (int slot = 0; slot < 2; ++slot) {
      for (Eigen::Index flat = 0; flat < psi.size(); ++flat) {
        int digits[4] = {static_cast<int>(flat / 27) % 3, static_cast<int>(flat / 9) % 3,
                         static_cast<int>(flat / 3) % 3, static_cast<int>(flat) % 3};
        std::swap(digits[slot], digits[2 + slot]);  // swap (A_m, B_m)
        Eigen::Index swapped = ((digits[0] * 3 + digits[1]) * 3 + digits[2]) * 3 + digits[3];
        CHECK(std::abs(psi(flat) + psi(swapped)) < 1e-13);
      }
    }
  }
  SUBCASE("projector residual of the full-state density is zero") {
    for (int n = 1; n <= 2; ++n) {
      Vector psi = state_vector(random_amplitude_tensor(n, 71 + static_cast<std::uint64_t>(n)));
      Matrix rho = psi * psi.adjoint();
      CHECK(std::abs(antisym_support_residual(rho, n)) < 1e-12);
    }
  }
}

TEST_CASE("interleaved tensor products match direct construction") {
  auto a = random_amplitude_tensor(1, 11);
  auto b = random_amplitude_tensor(1, 12);
  Vector direct = state_vector(product_amplitude(a, b));
  Vector interleaved = tensor_product_state(state_vector(a), 3, 3, state_vector(b), 3, 3);
  CHECK((direct - interleaved).norm() < 1e-13);

  Matrix ra = state_vector(a) * state_vector(a).adjoint();
  Matrix rb = state_vector(b) * state_vector(b).adjoint();
  Matrix rp = tensor_product_operator(ra, 3, 3, rb, 3, 3);
  // pure-state product density equals the density of the product state
  CHECK((rp - interleaved * interleaved.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
}
