#include <cstdlib>
#include <string_view>

#include "hopspan/simd/kernels.hpp"

namespace hopspan::simd {

#if defined(HOPSPAN_WITH_AVX2)
const Kernels& avx2_kernel_table();
#endif

const Kernels* avx2_kernels() {
#if defined(HOPSPAN_WITH_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &avx2_kernel_table();
#endif
  return nullptr;
}

const Kernels& active() {
  static const Kernels& chosen = [] () -> const Kernels& {
    const char* env = std::getenv("HOPSPAN_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace hopspan::simd
