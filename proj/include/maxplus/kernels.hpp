#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace maxplus::kernels {

/// Packed kernel encoding: entries are IEEE doubles, the semiring zero is
/// IEEE -inf and every other lane is finite. Under this invariant max/add
/// arithmetic is total (no NaN can appear: +inf never enters).
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

enum class Backend { scalar, avx2, neon };

const char* name(Backend) noexcept;

/// Backends usable on this machine (always contains scalar).
std::vector<Backend> available_backends();

/// Backend currently driving the kernel entry points.
Backend active_backend() noexcept;

/// Force a backend; returns false (and leaves the selection unchanged)
/// when the backend is unavailable. Test hook; not thread-safe against
/// concurrent kernel calls.
bool set_backend(Backend) noexcept;

/// Back to the auto-detected best backend (honoring MAXPLUS_BACKEND).
void reset_backend() noexcept;

/// dst[i,j] = max_k (a[i,k] + b[k,j]) over the packed encoding.
/// dst must not alias a or b. a is m x k, b is k x n, dst is m x n.
void matmul(double* dst, const double* a, const double* b,
            std::size_t m, std::size_t k, std::size_t n) noexcept;

/// dst[i] = max(a[i], b[i]).
void pointwise_max(double* dst, const double* a, const double* b,
                   std::size_t len) noexcept;

/// dst[i] = a[i] + offset with -inf sticking; offset must be finite.
void shift(double* dst, const double* a, double offset, std::size_t len) noexcept;

namespace detail {

struct Vtable {
  void (*matmul)(double*, const double*, const double*, std::size_t, std::size_t,
                 std::size_t) noexcept;
  void (*pointwise_max)(double*, const double*, const double*, std::size_t) noexcept;
  void (*shift)(double*, const double*, double, std::size_t) noexcept;
};

extern const Vtable scalar_vtable;
#if defined(__x86_64__) || defined(__i386__)
extern const Vtable avx2_vtable;
#endif
#if defined(__aarch64__)
extern const Vtable neon_vtable;
#endif

}  // namespace detail

}  // namespace maxplus::kernels
