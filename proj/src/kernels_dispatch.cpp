#include <cstdlib>
#include <cstring>

#include "maxplus/kernels.hpp"

namespace maxplus::kernels {
namespace {

using detail::Vtable;

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Vtable* vtable_for(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_vtable;
    case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return &detail::avx2_vtable;
#else
      return nullptr;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return &detail::neon_vtable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Backend detect_best() noexcept {
  if (const char* env = std::getenv("MAXPLUS_BACKEND")) {
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
      if (std::strcmp(env, name(b)) == 0 && backend_available(b)) return b;
  }
  if (backend_available(Backend::avx2)) return Backend::avx2;
  if (backend_available(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

struct State {
  Backend backend;
  const Vtable* vt;
};

State& state() noexcept {
  static State s = [] {
    const Backend b = detect_best();
    return State{b, vtable_for(b)};
  }();
  return s;
}

}  // namespace

const char* name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "?";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
    if (backend_available(b)) out.push_back(b);
  return out;
}

Backend active_backend() noexcept { return state().backend; }

bool set_backend(Backend b) noexcept {
  if (!backend_available(b)) return false;
  state() = State{b, vtable_for(b)};
  return true;
}

void reset_backend() noexcept {
  const Backend b = detect_best();
  state() = State{b, vtable_for(b)};
}

void matmul(double* dst, const double* a, const double* b,
            std::size_t m, std::size_t k, std::size_t n) noexcept {
  state().vt->matmul(dst, a, b, m, k, n);
}

void pointwise_max(double* dst, const double* a, const double* b,
                   std::size_t len) noexcept {
  state().vt->pointwise_max(dst, a, b, len);
}

void shift(double* dst, const double* a, double offset, std::size_t len) noexcept {
  state().vt->shift(dst, a, offset, len);
}

}  // namespace maxplus::kernels
