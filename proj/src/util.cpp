#include "antisym/util.hpp"

#include <cstring>
#include <thread>
#include <vector>

namespace antisym {

std::string fnv1a_hex(std::span<const double> data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (double value : data) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(value));
    std::memcpy(&bits, &value, sizeof(bits));
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (bits >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

std::vector<double> flatten(const Complex* data, std::size_t count) {
  std::vector<double> out;
  out.reserve(2 * count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(data[i].real());
    out.push_back(data[i].imag());
  }
  return out;
}

}  // namespace

std::string digest(const Vector& v) {
  auto flat = flatten(v.data(), static_cast<std::size_t>(v.size()));
  return fnv1a_hex(flat);
}

std::string digest(const Matrix& m) {
  auto flat = flatten(m.data(), static_cast<std::size_t>(m.size()));
  return fnv1a_hex(flat);
}

std::string digest(const RealVector& v) {
  return fnv1a_hex(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

void parallel_for_indexed(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  workers = std::min<std::size_t>(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, w, workers, count] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace antisym
