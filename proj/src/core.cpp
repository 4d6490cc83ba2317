#include "antisym/core.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace antisym {

namespace {

constexpr double kNormTol = 1e-12;

void check_copies(int n) {
  if (n < 1) throw std::invalid_argument("copy count must be >= 1");
  if (n > 12) throw std::invalid_argument("copy count too large for dense storage");
}

}  // namespace

std::size_t pow3(int n) {
  check_copies(n >= 1 ? n : 1);
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

int levi_civita(int i, int j, int k) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 2)
    throw std::invalid_argument("levi_civita: indices must lie in {0,1,2}");
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (0,1,2) satisfy j == (i+1) mod 3.
  return j == (i + 1) % 3 ? 1 : -1;
}

std::size_t encode_multi_index(std::span<const int> digits) {
  if (digits.empty()) throw std::invalid_argument("encode_multi_index: empty digit list");
  std::size_t flat = 0;
  for (int d : digits) {
    if (d < 0 || d > 2) throw std::invalid_argument("encode_multi_index: digit out of range");
    flat = 3 * flat + static_cast<std::size_t>(d);
  }
  return flat;
}

std::vector<int> decode_multi_index(std::size_t flat, int n) {
  check_copies(n);
  if (flat >= pow3(n)) throw std::invalid_argument("decode_multi_index: flat index out of range");
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int m = n - 1; m >= 0; --m) {
    digits[static_cast<std::size_t>(m)] = static_cast<int>(flat % 3);
    flat /= 3;
  }
  return digits;
}

AmplitudeTensor::AmplitudeTensor(int n, Vector entries) : n_(n), entries_(std::move(entries)) {
  check_copies(n_);
  if (static_cast<std::size_t>(entries_.size()) != pow3(n_))
    throw std::invalid_argument("AmplitudeTensor: expected 3^n entries");
  double sumsq = entries_.squaredNorm();
  if (std::abs(sumsq - 1.0) > kNormTol)
    throw std::invalid_argument("AmplitudeTensor: entries must have unit norm");
}

AmplitudeTensor AmplitudeTensor::basis(int n, std::size_t flat) {
  if (flat >= pow3(n)) throw std::invalid_argument("AmplitudeTensor::basis: index out of range");
  Vector e = Vector::Zero(static_cast<Eigen::Index>(pow3(n)));
  e(static_cast<Eigen::Index>(flat)) = 1.0;
  return AmplitudeTensor(n, std::move(e));
}

CoefficientMatrix::CoefficientMatrix(int n, Matrix entries) : n_(n), entries_(std::move(entries)) {
  check_copies(n_);
  auto d = static_cast<Eigen::Index>(pow3(n_));
  if (entries_.rows() != d || entries_.cols() != d)
    throw std::invalid_argument("CoefficientMatrix: expected 3^n x 3^n entries");
  double frob2 = entries_.squaredNorm();
  if (std::abs(frob2 - 1.0) > kNormTol)
    throw std::invalid_argument("CoefficientMatrix: expected unit Frobenius norm");
}

double CoefficientMatrix::max_antisymmetry_violation() const {
  const auto dim = entries_.rows();
  double worst = 0.0;
  std::size_t stride = static_cast<std::size_t>(dim) / 3;  // 3^{n-1}
  for (int m = 0; m < n_; ++m, stride /= 3) {
    for (Eigen::Index row = 0; row < dim; ++row) {
      int j = static_cast<int>((static_cast<std::size_t>(row) / stride) % 3);
      for (Eigen::Index col = 0; col < dim; ++col) {
        int k = static_cast<int>((static_cast<std::size_t>(col) / stride) % 3);
        auto srow = row + static_cast<Eigen::Index>((k - j) * static_cast<long>(stride));
        auto scol = col + static_cast<Eigen::Index>((j - k) * static_cast<long>(stride));
        worst = std::max(worst, std::abs(entries_(row, col) + entries_(srow, scol)));
      }
    }
  }
  return worst;
}

Matrix epsilon_contract(const Vector& entries, int n) {
  check_copies(n);
  const std::size_t dim = pow3(n);
  if (static_cast<std::size_t>(entries.size()) != dim)
    throw std::invalid_argument("epsilon_contract: expected 3^n entries");

  const double scale = std::pow(0.5, 0.5 * n);  // (1/sqrt2)^n
  Matrix alpha = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));

  // For fixed i the symbol eps(i, j, k) has exactly two nonzero entries:
  // +1 at (j,k) = (i+1, i+2) mod 3 and -1 at the swap. Enumerating the
  // choice per slot visits every nonzero term of the contraction.
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < dim; ++flat) {
    const Complex a = entries(static_cast<Eigen::Index>(flat));
    if (a == Complex(0.0, 0.0)) continue;
    {
      std::size_t rest = flat;
      for (int m = n - 1; m >= 0; --m) {
        digits[static_cast<std::size_t>(m)] = static_cast<int>(rest % 3);
        rest /= 3;
      }
    }
    const auto combos = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < combos; ++mask) {
      std::size_t row = 0, col = 0;
      for (int m = 0; m < n; ++m) {
        int i = digits[static_cast<std::size_t>(m)];
        int jplus = (i + 1) % 3, kplus = (i + 2) % 3;
        bool swap = (mask >> m) & 1u;
        row = 3 * row + static_cast<std::size_t>(swap ? kplus : jplus);
        col = 3 * col + static_cast<std::size_t>(swap ? jplus : kplus);
      }
      double sign = (std::popcount(mask) % 2 == 0) ? 1.0 : -1.0;
      alpha(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += sign * scale * a;
    }
  }
  return alpha;
}

CoefficientMatrix coefficient_matrix(const AmplitudeTensor& a) {
  return CoefficientMatrix(a.copies(), epsilon_contract(a.entries(), a.copies()));
}

AmplitudeTensor product_amplitude(const AmplitudeTensor& a, const AmplitudeTensor& b) {
  const auto na = a.size(), nb = b.size();
  Vector out(static_cast<Eigen::Index>(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      out(static_cast<Eigen::Index>(i * nb + j)) = a[i] * b[j];
  return AmplitudeTensor(a.copies() + b.copies(), std::move(out));
}

AmplitudeTensor random_amplitude_tensor(int n, std::uint64_t seed) {
  check_copies(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector entries(static_cast<Eigen::Index>(pow3(n)));
  for (Eigen::Index i = 0; i < entries.size(); ++i) {
    double re = gauss(rng);
    double im = gauss(rng);
    entries(i) = Complex(re, im);
  }
  entries /= entries.norm();
  return AmplitudeTensor(n, std::move(entries));
}

Vector state_vector(const AmplitudeTensor& a) {
  Matrix alpha = epsilon_contract(a.entries(), a.copies());
  const auto dim = alpha.rows();
  Vector psi(dim * dim);
  for (Eigen::Index row = 0; row < dim; ++row)
    for (Eigen::Index col = 0; col < dim; ++col)
      psi(row * dim + col) = alpha(row, col);
  return psi;
}

Vector tensor_product_state(const Vector& u, int a1, int b1,
                            const Vector& v, int a2, int b2) {
  if (u.size() != static_cast<Eigen::Index>(a1) * b1 ||
      v.size() != static_cast<Eigen::Index>(a2) * b2)
    throw std::invalid_argument("tensor_product_state: dimension mismatch");
  Vector out(static_cast<Eigen::Index>(a1) * a2 * b1 * b2);
  const int bb = b1 * b2;
  for (int j1 = 0; j1 < a1; ++j1)
    for (int k1 = 0; k1 < b1; ++k1)
      for (int j2 = 0; j2 < a2; ++j2)
        for (int k2 = 0; k2 < b2; ++k2)
          out((j1 * a2 + j2) * bb + (k1 * b2 + k2)) = u(j1 * b1 + k1) * v(j2 * b2 + k2);
  return out;
}

Matrix tensor_product_operator(const Matrix& x, int a1, int b1,
                               const Matrix& y, int a2, int b2) {
  const auto d1 = static_cast<Eigen::Index>(a1) * b1;
  const auto d2 = static_cast<Eigen::Index>(a2) * b2;
  if (x.rows() != d1 || x.cols() != d1 || y.rows() != d2 || y.cols() != d2)
    throw std::invalid_argument("tensor_product_operator: dimension mismatch");
  const int bb = b1 * b2;
  auto inter = [&](int j1, int k1, int j2, int k2) -> Eigen::Index {
    return static_cast<Eigen::Index>(j1 * a2 + j2) * bb + (k1 * b2 + k2);
  };
  Matrix out(d1 * d2, d1 * d2);
  for (int rj1 = 0; rj1 < a1; ++rj1)
    for (int rk1 = 0; rk1 < b1; ++rk1)
      for (int rj2 = 0; rj2 < a2; ++rj2)
        for (int rk2 = 0; rk2 < b2; ++rk2) {
          const auto row = inter(rj1, rk1, rj2, rk2);
          for (int cj1 = 0; cj1 < a1; ++cj1)
            for (int ck1 = 0; ck1 < b1; ++ck1) {
              const Complex xe = x(rj1 * b1 + rk1, cj1 * b1 + ck1);
              for (int cj2 = 0; cj2 < a2; ++cj2)
                for (int ck2 = 0; ck2 < b2; ++ck2)
                  out(row, inter(cj1, ck1, cj2, ck2)) = xe * y(rj2 * b2 + rk2, cj2 * b2 + ck2);
            }
        }
  return out;
}

Matrix antisym_projector(int n) {
  check_copies(n);
  // Projector for one copy, from the three spanning unit vectors of the
  // antisymmetric subspace of C^3 ⊗ C^3.
  Matrix p1 = Matrix::Zero(9, 9);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    Vector u = Vector::Zero(9);
    u(3 * j + k) = inv_sqrt2;
    u(3 * k + j) = -inv_sqrt2;
    p1 += u * u.adjoint();
  }
  Matrix p = p1;
  int da = 3, db = 3;
  for (int copy = 1; copy < n; ++copy) {
    p = tensor_product_operator(p, da, db, p1, 3, 3);
    da *= 3;
    db *= 3;
  }
  return p;
}

double antisym_support_residual(const Matrix& rho, int n) {
  Matrix p = antisym_projector(n);
  if (p.rows() != rho.rows() || rho.rows() != rho.cols())
    throw std::invalid_argument("antisym_support_residual: dimension mismatch");
  return (rho.trace() - (p * rho).trace()).real();
}

}  // namespace antisym
