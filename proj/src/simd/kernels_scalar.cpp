#include "hopspan/simd/kernels.hpp"

namespace hopspan::simd {
namespace {

std::size_t count_within_scalar(double cx, double cy, const double* xs, const double* ys,
                                std::size_t n, double r2) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double dx = xs[j] - cx;
    const double dy = ys[j] - cy;
    count += (dx * dx + dy * dy <= r2) ? 1 : 0;
  }
  return count;
}

std::size_t collect_within_scalar(double cx, double cy, const double* xs, const double* ys,
                                  std::size_t n, double r2, std::uint32_t* out) {
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double dx = xs[j] - cx;
    const double dy = ys[j] - cy;
    if (dx * dx + dy * dy <= r2) out[k++] = static_cast<std::uint32_t>(j);
  }
  return k;
}

bool any_strictly_within_scalar(double cx, double cy, const double* xs, const double* ys,
                                std::size_t n, double r2) {
  for (std::size_t j = 0; j < n; ++j) {
    const double dx = xs[j] - cx;
    const double dy = ys[j] - cy;
    if (dx * dx + dy * dy < r2) return true;
  }
  return false;
}

bool bits_intersect_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

void bits_or_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar",          count_within_scalar,   collect_within_scalar,
                         any_strictly_within_scalar, bits_intersect_scalar, bits_or_scalar};
  return k;
}

}  // namespace hopspan::simd
