#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "maxplus/errors.hpp"
#include "maxplus/scalar.hpp"

namespace maxplus {

/// Dense max-plus vector. Entries default to the semiring zero.
class TropVector {
 public:
  explicit TropVector(std::size_t n) : e_(n) {
    if (n == 0) throw ValidationError("TropVector: length must be >= 1");
  }

  TropVector(std::initializer_list<TropScalar> xs) : e_(xs) {
    if (e_.empty()) throw ValidationError("TropVector: length must be >= 1");
  }

  static TropVector from_ieee(std::span<const double> xs) {
    TropVector v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v.e_[i] = TropScalar::from_ieee(xs[i]);
    return v;
  }

  static TropVector from_ieee(std::initializer_list<double> xs) {
    return from_ieee(std::span<const double>(xs.begin(), xs.size()));
  }

  static TropVector filled(std::size_t n, TropScalar s) {
    TropVector v(n);
    for (auto& e : v.e_) e = s;
    return v;
  }

  std::size_t size() const noexcept { return e_.size(); }
  TropScalar& operator[](std::size_t i) { return e_[i]; }
  const TropScalar& operator[](std::size_t i) const { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  /// No zero entries.
  bool is_regular() const noexcept {
    for (const auto& e : e_)
      if (e.is_zero()) return false;
    return true;
  }

  bool is_all_zero() const noexcept {
    for (const auto& e : e_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool operator==(const TropVector&) const = default;

 private:
  std::vector<TropScalar> e_;
};

/// Dense row-major max-plus matrix.
class TropMatrix {
 public:
  TropMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0) throw ValidationError("TropMatrix: shape must be >= 1x1");
  }

  static TropMatrix identity(std::size_t n) {
    TropMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = TropScalar::one();
    return m;
  }

  static TropMatrix from_ieee(std::initializer_list<std::initializer_list<double>> rows) {
    if (rows.size() == 0) throw ValidationError("TropMatrix: shape must be >= 1x1");
    const std::size_t n = rows.begin()->size();
    TropMatrix m(rows.size(), n);
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != n) throw ValidationError("TropMatrix: ragged rows");
      std::size_t j = 0;
      for (double v : r) m(i, j++) = TropScalar::from_ieee(v);
      ++i;
    }
    return m;
  }

  static TropMatrix from_columns(const std::vector<TropVector>& cols) {
    if (cols.empty()) throw ValidationError("TropMatrix: shape must be >= 1x1");
    const std::size_t n = cols.front().size();
    TropMatrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != n) throw DimensionMismatch("from_columns: ragged columns");
      for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  TropScalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const TropScalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  TropVector column(std::size_t j) const {
    TropVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  TropVector row(std::size_t i) const {
    TropVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  /// No all-zero rows.
  bool is_regular() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i) {
      bool finite = false;
      for (std::size_t j = 0; j < cols_ && !finite; ++j) finite = !(*this)(i, j).is_zero();
      if (!finite) return false;
    }
    return true;
  }

  bool operator==(const TropMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TropScalar> e_;
};

inline bool approx_equal(const TropVector& a, const TropVector& b,
                         double eps = kDefaultTolerance) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx_equal(a[i], b[i], eps)) return false;
  return true;
}

inline bool approx_equal(const TropMatrix& a, const TropMatrix& b,
                         double eps = kDefaultTolerance) noexcept {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!approx_equal(a(i, j), b(i, j), eps)) return false;
  return true;
}

/// Entry-wise order: a <= b in every coordinate.
inline bool leq(const TropVector& a, const TropVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("leq: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!leq(a[i], b[i])) return false;
  return true;
}

}  // namespace maxplus
