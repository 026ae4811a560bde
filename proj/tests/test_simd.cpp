#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "hopspan/gen.hpp"
#include "hopspan/simd/kernels.hpp"

using namespace hopspan;

TEST_CASE("vector kernels match the scalar reference") {
  const simd::Kernels& ref = simd::scalar_kernels();
  const simd::Kernels* vec = simd::avx2_kernels();
  if (!vec) {
    MESSAGE("AVX2 kernels unavailable; only the scalar path is exercised");
    vec = &ref;
  }
  Rng rng(5);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 31u, 64u, 257u}) {
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = rng.uniform(-2, 2);
      ys[i] = rng.uniform(-2, 2);
    }
    // Points exactly on the unit circle exercise the inclusive boundary.
    if (n >= 4) {
      xs[1] = 1.0, ys[1] = 0.0;
      xs[3] = 0.6, ys[3] = 0.8;
    }
    for (double r2 : {1.0 + 1e-12, 1.0 - 1e-12, 0.25}) {
      CHECK(ref.count_within(0, 0, xs.data(), ys.data(), n, r2) == vec->count_within(0, 0, xs.data(), ys.data(), n, r2));
      std::vector<std::uint32_t> a(n), b(n);
      const auto ka = ref.collect_within(0.1, -0.2, xs.data(), ys.data(), n, r2, a.data());
      const auto kb = vec->collect_within(0.1, -0.2, xs.data(), ys.data(), n, r2, b.data());
      REQUIRE(ka == kb);
      CHECK(std::equal(a.begin(), a.begin() + ka, b.begin()));
      CHECK(ref.any_strictly_within(0.3, 0.3, xs.data(), ys.data(), n, r2) ==
            vec->any_strictly_within(0.3, 0.3, xs.data(), ys.data(), n, r2));
    }
  }
  for (std::size_t words : {0u, 1u, 3u, 4u, 9u}) {
    std::vector<std::uint64_t> a(words), b(words);
    for (std::size_t i = 0; i < words; ++i) {
      a[i] = rng.next() & rng.next() & rng.next();
      b[i] = rng.next() & rng.next() & rng.next();
    }
    CHECK(ref.bits_intersect(a.data(), b.data(), words) == vec->bits_intersect(a.data(), b.data(), words));
    std::vector<std::uint64_t> b2(words, 0);
    CHECK(ref.bits_intersect(a.data(), b2.data(), words) == vec->bits_intersect(a.data(), b2.data(), words));
    auto r1 = a, r2 = a;
    ref.bits_or(r1.data(), b.data(), words);
    vec->bits_or(r2.data(), b.data(), words);
    CHECK(r1 == r2);
  }
}

TEST_CASE("active table") {
  const char* forced = std::getenv("HOPSPAN_SIMD");
  if (forced && std::string(forced) == "scalar") {
    CHECK(&simd::active() == &simd::scalar_kernels());
  } else if (simd::avx2_kernels()) {
    CHECK(&simd::active() == simd::avx2_kernels());
  }
  MESSAGE("active kernels: " << simd::active().name);
}
