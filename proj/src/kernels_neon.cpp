#include "maxplus/kernels.hpp"

// NEON kernels, 2 doubles per lane. float64x2_t needs aarch64; NEON is
// baseline there, so no runtime probe beyond the architecture itself.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>

namespace maxplus::kernels {
namespace {

void matmul_neon(double* dst, const double* a, const double* b,
                 std::size_t m, std::size_t k, std::size_t n) noexcept {
  std::fill(dst, dst + m * n, kNegInf);
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = a + i * k;
    double* drow = dst + i * n;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double aik = arow[kk];
      if (aik == kNegInf) continue;
      const double* brow = b + kk * n;
      const float64x2_t av = vdupq_n_f64(aik);
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const float64x2_t bv = vld1q_f64(brow + j);
        float64x2_t dv = vld1q_f64(drow + j);
        dv = vmaxq_f64(dv, vaddq_f64(av, bv));
        vst1q_f64(drow + j, dv);
      }
      for (; j < n; ++j) drow[j] = std::max(drow[j], aik + brow[j]);
    }
  }
}

void pointwise_max_neon(double* dst, const double* a, const double* b,
                        std::size_t len) noexcept {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2)
    vst1q_f64(dst + i, vmaxq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < len; ++i) dst[i] = std::max(a[i], b[i]);
}

void shift_neon(double* dst, const double* a, double offset,
                std::size_t len) noexcept {
  const float64x2_t ov = vdupq_n_f64(offset);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2)
    vst1q_f64(dst + i, vaddq_f64(vld1q_f64(a + i), ov));
  for (; i < len; ++i) dst[i] = a[i] + offset;
}

}  // namespace

namespace detail {
const Vtable neon_vtable = {matmul_neon, pointwise_max_neon, shift_neon};
}  // namespace detail

}  // namespace maxplus::kernels

#endif  // aarch64
