#include "maxplus/kernels.hpp"

// AVX2 kernels, 4 doubles per lane. Compiled with -mavx2; selected at
// runtime only when cpuid reports AVX2 support.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <algorithm>

namespace maxplus::kernels {
namespace {

void matmul_avx2(double* dst, const double* a, const double* b,
                 std::size_t m, std::size_t k, std::size_t n) noexcept {
  std::fill(dst, dst + m * n, kNegInf);
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = a + i * k;
    double* drow = dst + i * n;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double aik = arow[kk];
      if (aik == kNegInf) continue;
      const double* brow = b + kk * n;
      const __m256d av = _mm256_set1_pd(aik);
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        const __m256d bv = _mm256_loadu_pd(brow + j);
        __m256d dv = _mm256_loadu_pd(drow + j);
        dv = _mm256_max_pd(dv, _mm256_add_pd(av, bv));
        _mm256_storeu_pd(drow + j, dv);
      }
      for (; j < n; ++j) drow[j] = std::max(drow[j], aik + brow[j]);
    }
  }
}

void pointwise_max_avx2(double* dst, const double* a, const double* b,
                        std::size_t len) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d av = _mm256_loadu_pd(a + i);
    const __m256d bv = _mm256_loadu_pd(b + i);
    _mm256_storeu_pd(dst + i, _mm256_max_pd(av, bv));
  }
  for (; i < len; ++i) dst[i] = std::max(a[i], b[i]);
}

void shift_avx2(double* dst, const double* a, double offset,
                std::size_t len) noexcept {
  const __m256d ov = _mm256_set1_pd(offset);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i), ov));
  for (; i < len; ++i) dst[i] = a[i] + offset;
}

}  // namespace

namespace detail {
const Vtable avx2_vtable = {matmul_avx2, pointwise_max_avx2, shift_avx2};
}  // namespace detail

}  // namespace maxplus::kernels

#endif  // x86
