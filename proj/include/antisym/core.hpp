#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "antisym/util.hpp"

namespace antisym {

/// 3^n for small n.
std::size_t pow3(int n);

/// Levi-Civita symbol on {0,1,2}: +1 on (0,1,2) and cyclic shifts, -1 on odd
/// permutations, 0 when any two indices coincide. Throws std::invalid_argument
/// for indices outside {0,1,2}.
int levi_civita(int i, int j, int k);

/// Lexicographic base-3 multi-index <-> flat index, first digit most
/// significant. Digits must lie in {0,1,2}; flat must lie in [0, 3^n).
std::size_t encode_multi_index(std::span<const int> digits);
std::vector<int> decode_multi_index(std::size_t flat, int n);

/// Unit-norm complex tensor a_{i_1..i_n} with 3^n entries in lexicographic
/// order; parameterizes a pure state of the n-copy antisymmetric space.
class AmplitudeTensor {
 public:
  AmplitudeTensor(int n, Vector entries);

  int copies() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(entries_.size()); }
  const Vector& entries() const { return entries_; }
  Complex operator[](std::size_t flat) const { return entries_(static_cast<Eigen::Index>(flat)); }

  /// Basis tensor e_flat (single unit entry).
  static AmplitudeTensor basis(int n, std::size_t flat);

 private:
  int n_;
  Vector entries_;
};

/// The 3^n x 3^n matrix of bipartite amplitudes, rows = Alice multi-index,
/// columns = Bob multi-index, both lexicographic. Unit Frobenius norm and
/// antisymmetric under swapping the row/column digits of any single copy.
class CoefficientMatrix {
 public:
  CoefficientMatrix(int n, Matrix entries);

  int copies() const { return n_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  /// Largest |alpha_{J;K} + alpha_{J';K'}| over all single-slot swaps
  /// j_m <-> k_m. Zero (to rounding) for any matrix built from the
  /// epsilon contraction.
  double max_antisymmetry_violation() const;

 private:
  int n_;
  Matrix entries_;
};

/// Raw epsilon contraction: out_{J;K} = (1/sqrt2)^n sum_I a_I prod_m
/// eps(i_m, j_m, k_m). No norm requirement on the input; linear in it.
Matrix epsilon_contract(const Vector& entries, int n);

/// Coefficient matrix of a unit amplitude tensor. An isometry: the result has
/// unit Frobenius norm.
CoefficientMatrix coefficient_matrix(const AmplitudeTensor& a);

/// Tensor product of amplitude tensors, n = n_a + n_b, slot order a then b.
AmplitudeTensor product_amplitude(const AmplitudeTensor& a, const AmplitudeTensor& b);

/// Haar-uniform point on the unit sphere of C^{3^n}: i.i.d. standard complex
/// Gaussian entries, normalized. Deterministic for a given seed.
AmplitudeTensor random_amplitude_tensor(int n, std::uint64_t seed);

/// The full bipartite vector, length 9^n, Alice block-major: entry at
/// J*3^n + K equals alpha_{J;K}.
Vector state_vector(const AmplitudeTensor& a);

/// Tensor product of bipartite vectors/operators with slot interleaving:
/// Alice factors concatenate and Bob factors concatenate, so the result is a
/// valid bipartite object on (a1*a2) x (b1*b2).
Vector tensor_product_state(const Vector& u, int a1, int b1,
                            const Vector& v, int a2, int b2);
Matrix tensor_product_operator(const Matrix& x, int a1, int b1,
                               const Matrix& y, int a2, int b2);

/// Orthogonal projector onto the n-copy antisymmetric subspace of
/// (C^3 ⊗ C^3)^{⊗n}, in the interleaved (Alice-block, Bob-block) ordering.
Matrix antisym_projector(int n);

/// Tr[(I - P) rho] for the projector above; ~0 iff supp(rho) lies in the
/// n-copy antisymmetric subspace.
double antisym_support_residual(const Matrix& rho, int n);

}  // namespace antisym
