#pragma once

#include <optional>

#include "maxplus/linalg.hpp"

namespace maxplus {

/// Solution bundle for the first-kind system A x = d.
///
/// under (= (conj(d) A)^-) is the maximal vector with A x <= d; over is
/// its shift by delta, with A over >= d; quasi sits between them at
/// delta^(1/2) and minimizes the Chebyshev distance of A x to d.
struct FirstKindOutcome {
  TropScalar delta;
  std::optional<TropVector> exact_max_solution;  // present iff delta == 0
  TropVector quasi;        // x0 = delta^(1/2) (conj(d) A)^-
  TropVector under;        // x1 = (conj(d) A)^-
  TropVector over;         // x2 = delta (conj(d) A)^-
  TropVector quasi_image;  // y0 = A x0
  TropVector under_image;  // y1 = A x1
  TropVector over_image;   // y2 = A x2
};

enum class BellmanClass { unique_solution, solution_family, only_trivial, no_solution };

/// Outcome of A x oplus b = x (or <= x), classified by Tr(A).
struct BellmanOutcome {
  TropScalar big_trace;
  BellmanClass classification;
  std::optional<TropVector> particular;  // A* b (the least solution)
  std::optional<TropMatrix> generators;  // A+ for equations, A* for inequalities
};

struct SpectralOutcome {
  TropScalar lambda;
  TropMatrix eigen_generators;  // A_lambda^+; columns g satisfy A g = lambda g
};

/// Residual Delta = (A (conj(d) A)^-)^- d. Nonnegative; zero exactly when
/// A x = d is solvable. Requires regular A and d.
TropScalar residual(const TropMatrix& a, const TropVector& d);

/// Closed-form treatment of A x = d for regular A and d.
FirstKindOutcome solve_first_kind(const TropMatrix& a, const TropVector& d,
                                  double eps = kDefaultTolerance);

/// Maximal solution (conj(d) A)^- of A x <= d; the solution set is the
/// lower cone of the result. Requires regular d. Coordinates facing an
/// all-zero column of A are unconstrained and come back as zero.
TropVector solve_first_kind_inequality(const TropMatrix& a, const TropVector& d);

/// A x oplus b = x for irreducible A, by the Tr(A) trichotomy.
BellmanOutcome solve_bellman(const TropMatrix& a, const TropVector& b,
                             double eps = kDefaultTolerance);

/// A x oplus b <= x for irreducible A. When Tr(A) <= 0 the solutions are
/// A*(b oplus v); the family is reported as particular = A*b plus
/// generators = A*.
BellmanOutcome solve_bellman_inequality(const TropMatrix& a, const TropVector& b,
                                        double eps = kDefaultTolerance);

/// The unique eigenvalue of an irreducible matrix: the maximum cycle mean,
/// max over m of tr(A^m)/m.
TropScalar eigenvalue(const TropMatrix& a);

/// Eigenvalue plus the generating set of eigenvectors A_lambda^+.
SpectralOutcome eigenvectors(const TropMatrix& a, double eps = kDefaultTolerance);

}  // namespace maxplus
