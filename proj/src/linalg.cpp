#include "maxplus/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "maxplus/kernels.hpp"

namespace maxplus {
namespace {

std::string shape_str(const TropMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const TropMatrix& a, const char* op) {
  if (!a.is_square()) throw NotSquare(std::string(op) + ": matrix is " + shape_str(a));
}

// Packing to and from the kernel encoding (zero <-> IEEE -inf).
std::vector<double> pack(const TropMatrix& a) {
  std::vector<double> buf(a.rows() * a.cols());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) buf[idx++] = a(i, j).to_ieee();
  return buf;
}

std::vector<double> pack(const TropVector& v) {
  std::vector<double> buf(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) buf[i] = v[i].to_ieee();
  return buf;
}

TropMatrix unpack(std::size_t rows, std::size_t cols, const std::vector<double>& buf) {
  TropMatrix m(rows, cols);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = TropScalar::from_ieee(buf[idx++]);
  return m;
}

TropVector unpack(std::size_t n, const std::vector<double>& buf) {
  TropVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = TropScalar::from_ieee(buf[i]);
  return v;
}

}  // namespace

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("mat_mul: " + shape_str(a) + " times " + shape_str(b));
  const auto pa = pack(a);
  const auto pb = pack(b);
  std::vector<double> out(a.rows() * b.cols());
  kernels::matmul(out.data(), pa.data(), pb.data(), a.rows(), a.cols(), b.cols());
  return unpack(a.rows(), b.cols(), out);
}

TropVector mat_vec(const TropMatrix& a, const TropVector& x) {
  if (a.cols() != x.size())
    throw DimensionMismatch("mat_vec: " + shape_str(a) + " times length " +
                            std::to_string(x.size()));
  const auto pa = pack(a);
  const auto px = pack(x);
  std::vector<double> out(a.rows());
  kernels::matmul(out.data(), pa.data(), px.data(), a.rows(), a.cols(), 1);
  return unpack(a.rows(), out);
}

TropVector vec_mat(const TropVector& x, const TropMatrix& a) {
  if (x.size() != a.rows())
    throw DimensionMismatch("vec_mat: length " + std::to_string(x.size()) + " times " +
                            shape_str(a));
  const auto px = pack(x);
  const auto pa = pack(a);
  std::vector<double> out(a.cols());
  kernels::matmul(out.data(), px.data(), pa.data(), 1, a.rows(), a.cols());
  return unpack(a.cols(), out);
}

TropScalar vec_dot(const TropVector& row, const TropVector& col) {
  if (row.size() != col.size()) throw DimensionMismatch("vec_dot: length mismatch");
  TropScalar acc = TropScalar::zero();
  for (std::size_t i = 0; i < row.size(); ++i) acc = oplus(acc, otimes(row[i], col[i]));
  return acc;
}

TropMatrix mat_oplus(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("mat_oplus: " + shape_str(a) + " vs " + shape_str(b));
  const auto pa = pack(a);
  const auto pb = pack(b);
  std::vector<double> out(pa.size());
  kernels::pointwise_max(out.data(), pa.data(), pb.data(), pa.size());
  return unpack(a.rows(), a.cols(), out);
}

TropMatrix mat_scale(TropScalar s, const TropMatrix& a) {
  if (s.is_zero()) return TropMatrix(a.rows(), a.cols());
  const auto pa = pack(a);
  std::vector<double> out(pa.size());
  kernels::shift(out.data(), pa.data(), s.value(), pa.size());
  return unpack(a.rows(), a.cols(), out);
}

TropVector vec_oplus(const TropVector& a, const TropVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_oplus: length mismatch");
  TropVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = oplus(a[i], b[i]);
  return out;
}

TropVector vec_scale(TropScalar s, const TropVector& a) {
  TropVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = otimes(s, a[i]);
  return out;
}

TropMatrix mat_pow(const TropMatrix& a, unsigned p) {
  require_square(a, "mat_pow");
  TropMatrix result = TropMatrix::identity(a.rows());
  TropMatrix base = a;
  while (p != 0) {
    if (p & 1u) result = mat_mul(result, base);
    p >>= 1u;
    if (p != 0) base = mat_mul(base, base);
  }
  return result;
}

TropVector conjugate(const TropVector& x) {
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = x[i].is_zero() ? TropScalar::zero() : inv(x[i]);
  return out;
}

TropScalar metric(const TropVector& a, const TropVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("metric: length mismatch");
  if (!a.is_regular() || !b.is_regular())
    throw IrregularInput("metric: arguments must be regular");
  return oplus(vec_dot(conjugate(b), a), vec_dot(conjugate(a), b));
}

TropScalar trace(const TropMatrix& a) {
  require_square(a, "trace");
  TropScalar t = TropScalar::zero();
  for (std::size_t i = 0; i < a.rows(); ++i) t = oplus(t, a(i, i));
  return t;
}

TropScalar big_trace(const TropMatrix& a) {
  require_square(a, "big_trace");
  TropScalar t = trace(a);
  TropMatrix p = a;
  for (std::size_t m = 2; m <= a.rows(); ++m) {
    p = mat_mul(p, a);
    t = oplus(t, trace(p));
  }
  return t;
}

TropMatrix star(const TropMatrix& a) {
  require_square(a, "star");
  const std::size_t n = a.rows();
  // (I oplus A)^(n-1) expands to exactly I oplus A oplus ... oplus A^(n-1);
  // the exponent must not overshoot n-1 or positive cycles leak in.
  return mat_pow(mat_oplus(TropMatrix::identity(n), a), static_cast<unsigned>(n - 1));
}

TropMatrix plus_powers(const TropMatrix& a) {
  require_square(a, "plus_powers");
  return mat_mul(a, star(a));
}

bool is_dependent(const TropVector& c, const TropMatrix& s, double eps) {
  if (c.size() != s.rows())
    throw DimensionMismatch("is_dependent: length " + std::to_string(c.size()) + " vs " +
                            shape_str(s));
  const TropVector coeff = conjugate(vec_mat(conjugate(c), s));
  return approx_equal(mat_vec(s, coeff), c, eps);
}

TropMatrix generator(const TropMatrix& a, double eps) {
  require_square(a, "generator");
  const std::size_t n = a.rows();
  const TropMatrix ax = plus_powers(a);

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < n; ++i)
    if (approx_equal(ax(i, i), TropScalar::one(), eps)) candidates.push_back(i);
  if (candidates.empty())
    throw NoUnitDiagonalColumn("generator: no unit diagonal entry in A^x");

  // Forward scan against already-kept columns only.
  std::vector<std::size_t> kept;
  for (std::size_t i : candidates) {
    const TropVector col = ax.column(i);
    if (kept.empty()) {
      kept.push_back(i);
      continue;
    }
    std::vector<TropVector> basis;
    basis.reserve(kept.size());
    for (std::size_t j : kept) basis.push_back(ax.column(j));
    if (!is_dependent(col, TropMatrix::from_columns(basis), eps)) kept.push_back(i);
  }

  // Backward sweep: drop any kept column spanned by the rest.
  for (std::size_t pos = kept.size(); pos-- > 0 && kept.size() > 1;) {
    std::vector<TropVector> others;
    others.reserve(kept.size() - 1);
    for (std::size_t q = 0; q < kept.size(); ++q)
      if (q != pos) others.push_back(ax.column(kept[q]));
    if (is_dependent(ax.column(kept[pos]), TropMatrix::from_columns(others), eps))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
  }

  // Canonical representative per proportionality class: pin the final
  // coordinate to the identity (generators are translation families).
  std::vector<TropVector> cols;
  cols.reserve(kept.size());
  for (std::size_t i : kept) {
    TropVector col = ax.column(i);
    if (!col[n - 1].is_zero()) col = vec_scale(inv(col[n - 1]), col);
    cols.push_back(col);
  }
  return TropMatrix::from_columns(cols);
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const TropMatrix& a) {
  require_square(a, "strongly_connected_components");
  const std::size_t n = a.rows();

  // Arc j -> i whenever a_ij is nonzero.
  std::vector<std::vector<std::size_t>> fwd(n), rev(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) {
        fwd[j].push_back(i);
        rev[i].push_back(j);
      }

  // Kosaraju with explicit stacks.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < fwd[v].size()) {
        const std::size_t w = fwd[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<std::size_t>> comps;
  std::vector<char> assigned(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (assigned[*it]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{*it};
    assigned[*it] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : rev[v])
        if (!assigned[w]) {
          assigned[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return comps;
}

bool is_irreducible(const TropMatrix& a) {
  return strongly_connected_components(a).size() == 1;
}

}  // namespace maxplus
