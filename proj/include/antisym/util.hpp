#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include <Eigen/Dense>

namespace antisym {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// FNV-1a over the raw bytes of a double sequence, as a 16-char hex string.
std::string fnv1a_hex(std::span<const double> data);

std::string digest(const Vector& v);
std::string digest(const Matrix& m);
std::string digest(const RealVector& v);

/// Runs fn(i) for i in [0, count) on a small worker pool. Each index owns its
/// output slot, so results are independent of scheduling.
void parallel_for_indexed(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Seed for sample i of a campaign keyed by base seed.
inline std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index) {
  return base ^ index;
}

}  // namespace antisym
