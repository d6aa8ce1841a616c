#pragma once

// Exact integer and rational linear algebra: Hermite and Smith normal forms,
// kernel lattices, rational solves and lattice membership.

#include "gkz/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gkz {

/// U * M == H with U unimodular and H in row Hermite form: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;

  /// Number of nonzero rows of H.
  Index rank() const;
};

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// U * M * V == S, U and V unimodular, S diagonal with d1 | d2 | ... and
/// nonnegative entries.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  Index rank() const;
  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Z-basis of ker_Z(A), one vector per entry, in Hermite-canonical order.
std::vector<IntVector> kernel_lattice_basis(const IntMatrix& a);

/// LLL-reduced basis (delta = 3/4) of the lattice spanned by linearly
/// independent integer vectors. Exact rational Gram-Schmidt.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);
std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b);

/// True iff v is an integer combination of the vectors in `lattice`.
bool lattice_member(std::span<const IntVector> lattice, const RatVector& v);

/// Stacks vectors as the rows of a matrix with `cols` columns.
IntMatrix rows_to_matrix(std::span<const IntVector> rows, Index cols);

/// Row-reduced echelon form over the rationals; returns pivot columns.
std::vector<Index> row_reduce(RatMatrix& m);

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix work = m.template cast<Rational>();
  return static_cast<Index>(row_reduce(work).size());
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntMatrix m);

/// Columns of `m` selected by `cols`, in order.
template <typename Derived>
Matrix<typename Derived::Scalar> select_columns(const Eigen::MatrixBase<Derived>& m, const IndexSet& cols) {
  Matrix<typename Derived::Scalar> out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = m.col(cols[k]);
  return out;
}

}  // namespace gkz
