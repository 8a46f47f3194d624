#pragma once

#include <cmath>
#include <limits>

#include "maxplus/errors.hpp"
#include "maxplus/rational.hpp"

namespace maxplus {

inline constexpr double kDefaultTolerance = 1e-9;

/// Scalar of the max-plus semifield over the reals. A value is either a
/// finite time lag or the semiring zero (the formal -inf, the neutral
/// element of oplus and the absorbing element of otimes). The zero is a
/// tagged state rather than the IEEE value; IEEE -inf appears only at
/// I/O and kernel boundaries.
class TropScalar {
 public:
  /// Default-constructs the semiring zero.
  constexpr TropScalar() noexcept = default;

  /// Finite scalar. Rejects NaN and infinities. Negative zero is
  /// canonicalized so inverses of the identity display as 0.
  explicit TropScalar(double v) : v_(v == 0.0 ? 0.0 : v), zero_(false) {
    if (!std::isfinite(v)) throw Error("TropScalar: value must be finite");
  }

  static constexpr TropScalar zero() noexcept { return TropScalar(); }
  static constexpr TropScalar one() noexcept { return TropScalar(0.0, Finite{}); }

  /// Boundary conversion: IEEE -inf encodes the zero.
  static TropScalar from_ieee(double v) {
    if (v == -std::numeric_limits<double>::infinity()) return zero();
    return TropScalar(v);
  }

  constexpr double to_ieee() const noexcept {
    return zero_ ? -std::numeric_limits<double>::infinity() : v_;
  }

  constexpr bool is_zero() const noexcept { return zero_; }
  constexpr bool is_finite() const noexcept { return !zero_; }

  /// Finite payload; -inf when the scalar is the zero.
  constexpr double value() const noexcept { return v_; }

  constexpr bool operator==(const TropScalar& o) const noexcept {
    if (zero_ != o.zero_) return false;
    return zero_ || v_ == o.v_;
  }

 private:
  struct Finite {};
  constexpr TropScalar(double v, Finite) noexcept : v_(v), zero_(false) {}

  double v_ = -std::numeric_limits<double>::infinity();
  bool zero_ = true;
};

/// a oplus b = max(a, b); the zero is the minimum element.
inline TropScalar oplus(TropScalar a, TropScalar b) noexcept {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return a.value() >= b.value() ? a : b;
}

/// a otimes b = a + b; the zero absorbs.
inline TropScalar otimes(TropScalar a, TropScalar b) {
  if (a.is_zero() || b.is_zero()) return TropScalar::zero();
  return TropScalar(a.value() + b.value());
}

/// Multiplicative inverse, -a. Throws InversionOfZero for the zero.
inline TropScalar inv(TropScalar a) {
  if (a.is_zero()) throw InversionOfZero();
  return TropScalar(-a.value());
}

/// Rational power: q * a in conventional arithmetic. zero^q = zero for
/// q > 0; throws ZeroToNonpositivePower otherwise.
inline TropScalar pow(TropScalar a, Rational q) {
  if (a.is_zero()) {
    if (!q.positive()) throw ZeroToNonpositivePower();
    return TropScalar::zero();
  }
  return TropScalar(a.value() * static_cast<double>(q.num()) /
                    static_cast<double>(q.den()));
}

/// Order induced by oplus: a <= b iff oplus(a, b) == b. Total on this
/// instance, with the zero below everything.
inline bool leq(TropScalar a, TropScalar b) noexcept {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return a.value() <= b.value();
}

inline bool approx_equal(TropScalar a, TropScalar b,
                         double eps = kDefaultTolerance) noexcept {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return std::fabs(a.value() - b.value()) <= eps;
}

}  // namespace maxplus
