#include "maxplus/solvers.hpp"

#include <string>

namespace maxplus {
namespace {

void require_regular(const TropMatrix& a, const char* op) {
  if (!a.is_regular())
    throw IrregularInput(std::string(op) + ": matrix has an all-zero row");
}

void require_regular(const TropVector& v, const char* op, const char* which) {
  if (!v.is_regular())
    throw IrregularInput(std::string(op) + ": " + which + " has a zero entry");
}

void require_irreducible(const TropMatrix& a, const char* op) {
  const auto comps = strongly_connected_components(a);
  if (comps.size() == 1) return;
  std::string msg = std::string(op) + ": matrix is reducible; components:";
  for (const auto& c : comps) {
    msg += " {";
    for (std::size_t i = 0; i < c.size(); ++i)
      msg += (i ? "," : "") + std::to_string(c[i] + 1);
    msg += "}";
  }
  throw ReducibleMatrix(std::move(msg), comps);
}

struct FirstKindCore {
  TropVector under;        // (conj(d) A)^-
  TropVector under_image;  // A under
  TropScalar delta;
};

FirstKindCore first_kind_core(const TropMatrix& a, const TropVector& d, const char* op) {
  if (a.rows() != d.size())
    throw DimensionMismatch(std::string(op) + ": matrix rows vs due-date length");
  require_regular(a, op);
  require_regular(d, op, "right-hand side");
  TropVector under = conjugate(vec_mat(conjugate(d), a));
  TropVector image = mat_vec(a, under);
  TropScalar delta = vec_dot(conjugate(image), d);
  return {std::move(under), std::move(image), delta};
}

bool nonpositive(TropScalar t, double eps) {
  return t.is_zero() || t.value() <= eps;
}

bool is_unit(TropScalar t, double eps) { return approx_equal(t, TropScalar::one(), eps); }

}  // namespace

TropScalar residual(const TropMatrix& a, const TropVector& d) {
  return first_kind_core(a, d, "residual").delta;
}

FirstKindOutcome solve_first_kind(const TropMatrix& a, const TropVector& d, double eps) {
  auto core = first_kind_core(a, d, "solve_first_kind");
  const TropScalar half = pow(core.delta, Rational(1, 2));

  FirstKindOutcome out{
      core.delta,
      std::nullopt,
      vec_scale(half, core.under),
      core.under,
      vec_scale(core.delta, core.under),
      TropVector(d.size()),
      core.under_image,
      TropVector(d.size()),
  };
  out.quasi_image = mat_vec(a, out.quasi);
  out.over_image = mat_vec(a, out.over);
  if (is_unit(core.delta, eps)) out.exact_max_solution = out.under;
  return out;
}

TropVector solve_first_kind_inequality(const TropMatrix& a, const TropVector& d) {
  if (a.rows() != d.size())
    throw DimensionMismatch("solve_first_kind_inequality: matrix rows vs bound length");
  require_regular(d, "solve_first_kind_inequality", "bound");
  return conjugate(vec_mat(conjugate(d), a));
}

BellmanOutcome solve_bellman(const TropMatrix& a, const TropVector& b, double eps) {
  if (a.rows() != b.size())
    throw DimensionMismatch("solve_bellman: matrix size vs vector length");
  require_irreducible(a, "solve_bellman");
  const TropScalar t = big_trace(a);
  const bool homogeneous = b.is_all_zero();

  BellmanOutcome out{t, BellmanClass::no_solution, std::nullopt, std::nullopt};
  if (is_unit(t, eps)) {
    out.classification = BellmanClass::solution_family;
    out.particular = mat_vec(star(a), b);
    out.generators = generator(a, eps);
  } else if (homogeneous) {
    // Only x = the all-zero vector.
    out.classification = BellmanClass::only_trivial;
    out.particular = TropVector(b.size());
  } else if (nonpositive(t, eps)) {
    out.classification = BellmanClass::unique_solution;
    out.particular = mat_vec(star(a), b);
  }
  return out;
}

BellmanOutcome solve_bellman_inequality(const TropMatrix& a, const TropVector& b,
                                        double eps) {
  if (a.rows() != b.size())
    throw DimensionMismatch("solve_bellman_inequality: matrix size vs vector length");
  require_irreducible(a, "solve_bellman_inequality");
  const TropScalar t = big_trace(a);

  BellmanOutcome out{t, BellmanClass::no_solution, std::nullopt, std::nullopt};
  if (nonpositive(t, eps)) {
    out.classification = BellmanClass::solution_family;
    const TropMatrix closure = star(a);
    out.particular = mat_vec(closure, b);
    out.generators = closure;
  } else if (b.is_all_zero()) {
    out.classification = BellmanClass::only_trivial;
    out.particular = TropVector(b.size());
  }
  return out;
}

TropScalar eigenvalue(const TropMatrix& a) {
  require_irreducible(a, "eigenvalue");
  TropScalar lambda = trace(a);
  TropMatrix p = a;
  for (std::size_t m = 2; m <= a.rows(); ++m) {
    p = mat_mul(p, a);
    lambda = oplus(lambda, pow(trace(p), Rational(1, static_cast<std::int64_t>(m))));
  }
  return lambda;
}

SpectralOutcome eigenvectors(const TropMatrix& a, double eps) {
  const TropScalar lambda = eigenvalue(a);
  const TropMatrix scaled = mat_scale(inv(lambda), a);
  return {lambda, generator(scaled, eps)};
}

}  // namespace maxplus
