#pragma once

#include <cstddef>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// {AB}_ij = max_k (a_ik + b_kj), zero-absorbing.
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);

/// A applied to a column vector.
TropVector mat_vec(const TropMatrix& a, const TropVector& x);

/// Row vector times matrix.
TropVector vec_mat(const TropVector& x, const TropMatrix& a);

/// Row times column.
TropScalar vec_dot(const TropVector& row, const TropVector& col);

TropMatrix mat_oplus(const TropMatrix& a, const TropMatrix& b);
TropMatrix mat_scale(TropScalar s, const TropMatrix& a);
TropVector vec_oplus(const TropVector& a, const TropVector& b);
TropVector vec_scale(TropScalar s, const TropVector& a);

/// Exact max-plus power, p >= 0 (p = 0 gives the identity).
TropMatrix mat_pow(const TropMatrix& a, unsigned p);

/// Conjugate row vector: entry-wise inverse, zeros kept as zeros.
TropVector conjugate(const TropVector& x);

/// rho(a, b) = conj(b) a oplus conj(a) b; the Chebyshev distance on
/// regular vectors. Throws IrregularInput when either has a zero entry.
TropScalar metric(const TropVector& a, const TropVector& b);

/// Max diagonal entry.
TropScalar trace(const TropMatrix& a);

/// Tr(A) = max over m = 1..n of tr(A^m); the maximum total cycle weight,
/// zero when the matrix is acyclic.
TropScalar big_trace(const TropMatrix& a);

/// Kleene star A* = I oplus A oplus ... oplus A^(n-1), computed as the
/// exact power (I oplus A)^(n-1) by repeated squaring.
TropMatrix star(const TropMatrix& a);

/// A^x = A oplus ... oplus A^n = A (A*).
TropMatrix plus_powers(const TropMatrix& a);

/// True iff c is a max-plus combination of the columns of s, decided by
/// the residuated best-approximation test: s ((conj(c) s))^- reaches c.
bool is_dependent(const TropVector& c, const TropMatrix& s,
                  double eps = kDefaultTolerance);

/// Generator matrix A+: the unit-diagonal columns of A^x, reduced by a
/// left-to-right dependence scan plus a backward sweep, each kept column
/// then rescaled so its final coordinate is the identity (fixes the
/// representative of every proportionality class; skipped when that
/// coordinate is zero). Throws NoUnitDiagonalColumn when no diagonal
/// entry of A^x equals the identity within eps.
TropMatrix generator(const TropMatrix& a, double eps = kDefaultTolerance);

/// Strongly connected components of the digraph with an arc j -> i
/// whenever a_ij is nonzero. Components are sorted by smallest vertex.
std::vector<std::vector<std::size_t>> strongly_connected_components(const TropMatrix& a);

/// True iff the associated digraph is strongly connected.
bool is_irreducible(const TropMatrix& a);

}  // namespace maxplus
