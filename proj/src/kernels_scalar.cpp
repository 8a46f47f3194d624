#include <algorithm>

#include "maxplus/kernels.hpp"

// Reference kernels. Plain loops over the packed encoding; the SIMD
// variants must match these value-for-value on every input.

namespace maxplus::kernels {
namespace {

void matmul_scalar(double* dst, const double* a, const double* b,
                   std::size_t m, std::size_t k, std::size_t n) noexcept {
  std::fill(dst, dst + m * n, kNegInf);
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = a + i * k;
    double* drow = dst + i * n;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double aik = arow[kk];
      if (aik == kNegInf) continue;
      const double* brow = b + kk * n;
      for (std::size_t j = 0; j < n; ++j)
        drow[j] = std::max(drow[j], aik + brow[j]);
    }
  }
}

void pointwise_max_scalar(double* dst, const double* a, const double* b,
                          std::size_t len) noexcept {
  for (std::size_t i = 0; i < len; ++i) dst[i] = std::max(a[i], b[i]);
}

void shift_scalar(double* dst, const double* a, double offset,
                  std::size_t len) noexcept {
  for (std::size_t i = 0; i < len; ++i) dst[i] = a[i] + offset;
}

}  // namespace

namespace detail {
const Vtable scalar_vtable = {matmul_scalar, pointwise_max_scalar, shift_scalar};
}  // namespace detail

}  // namespace maxplus::kernels
