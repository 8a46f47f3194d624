#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace maxplus {

// Exact rational exponent, kept as a reduced integer pair so that
// exponents such as 1/2 scale without rounding.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t a = num_ < 0 ? -num_ : num_;
    const std::int64_t g = std::gcd(a, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool positive() const noexcept { return num_ > 0; }

  constexpr Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }

  constexpr bool operator==(const Rational&) const noexcept = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace maxplus
