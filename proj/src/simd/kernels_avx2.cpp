// Built with -mavx2 (but not -mfma) so products and sums round exactly like
// the scalar reference.
#include <immintrin.h>

#include <bit>

#include "hopspan/simd/kernels.hpp"

namespace hopspan::simd {
namespace {

inline __m256d sq_dist4(__m256d cx, __m256d cy, const double* xs, const double* ys) {
  const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs), cx);
  const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys), cy);
  return _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
}

std::size_t count_within_avx2(double cx, double cy, const double* xs, const double* ys,
                              std::size_t n, double r2) {
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  const __m256d vr2 = _mm256_set1_pd(r2);
  std::size_t count = 0;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d d2 = sq_dist4(vcx, vcy, xs + j, ys + j);
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LE_OQ));
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  return count + scalar_kernels().count_within(cx, cy, xs + j, ys + j, n - j, r2);
}

std::size_t collect_within_avx2(double cx, double cy, const double* xs, const double* ys,
                                std::size_t n, double r2, std::uint32_t* out) {
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  const __m256d vr2 = _mm256_set1_pd(r2);
  std::size_t k = 0;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d d2 = sq_dist4(vcx, vcy, xs + j, ys + j);
    unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LE_OQ)));
    while (mask) {
      out[k++] = static_cast<std::uint32_t>(j + std::countr_zero(mask));
      mask &= mask - 1;
    }
  }
  const std::size_t tail =
      scalar_kernels().collect_within(cx, cy, xs + j, ys + j, n - j, r2, out + k);
  for (std::size_t t = 0; t < tail; ++t) out[k + t] += static_cast<std::uint32_t>(j);
  return k + tail;
}

bool any_strictly_within_avx2(double cx, double cy, const double* xs, const double* ys,
                              std::size_t n, double r2) {
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  const __m256d vr2 = _mm256_set1_pd(r2);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d d2 = sq_dist4(vcx, vcy, xs + j, ys + j);
    if (_mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LT_OQ))) return true;
  }
  return scalar_kernels().any_strictly_within(cx, cy, xs + j, ys + j, n - j, r2);
}

bool bits_intersect_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  return scalar_kernels().bits_intersect(a + w, b + w, words - w);
}

void bits_or_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + w);
    const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), vs));
  }
  scalar_kernels().bits_or(dst + w, src + w, words - w);
}

}  // namespace

const Kernels& avx2_kernel_table() {
  static const Kernels k{"avx2",           count_within_avx2,   collect_within_avx2,
                         any_strictly_within_avx2, bits_intersect_avx2, bits_or_avx2};
  return k;
}

}  // namespace hopspan::simd
