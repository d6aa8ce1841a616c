#include "gkz/linalg.hpp"

#include "gkz/error.hpp"

#include <algorithm>
#include <utility>

namespace gkz {

namespace {

// Replaces rows (r, i) by a unimodular combination that puts gcd(m(r,c), m(i,c))
// at (r,c) and zero at (i,c). The same transform is applied to `track`.
void combine_rows(IntMatrix& m, IntMatrix& track, Index r, Index i, Index c) {
  const Integer a = m(r, c), b = m(i, c);
  if (a != 0 && b % a == 0) {
    const Integer f = b / a;
    m.row(i) -= f * m.row(r);
    track.row(i) -= f * track.row(r);
    return;
  }
  const auto [g, p, q] = xgcd(a, b);
  const Integer ag = a / g, bg = b / g;
  for (IntMatrix* target : {&m, &track}) {
    IntMatrix& t = *target;
    for (Index k = 0; k < t.cols(); ++k) {
      Integer x = t(r, k), y = t(i, k);
      t(r, k) = p * x + q * y;
      t(i, k) = ag * y - bg * x;
    }
  }
}

void combine_cols(IntMatrix& m, IntMatrix& track, Index r, Index j, Index c) {
  const Integer a = m(r, c), b = m(r, j);
  if (a != 0 && b % a == 0) {
    const Integer f = b / a;
    m.col(j) -= f * m.col(c);
    track.col(j) -= f * track.col(c);
    return;
  }
  const auto [g, p, q] = xgcd(a, b);
  const Integer ag = a / g, bg = b / g;
  for (IntMatrix* target : {&m, &track}) {
    IntMatrix& t = *target;
    for (Index k = 0; k < t.rows(); ++k) {
      Integer x = t(k, c), y = t(k, j);
      t(k, c) = p * x + q * y;
      t(k, j) = ag * y - bg * x;
    }
  }
}

void negate_row(IntMatrix& m, Index r) {
  for (Index k = 0; k < m.cols(); ++k) m(r, k) = -m(r, k);
}

}  // namespace

Index HermiteDecomposition::rank() const {
  Index r = 0;
  for (Index i = 0; i < H.rows(); ++i)
    if (!is_zero(H.row(i))) ++r;
  return r;
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::Identity(rows, rows);
  Index pivot = 0;
  for (Index c = 0; c < cols && pivot < rows; ++c) {
    for (Index i = pivot + 1; i < rows; ++i)
      if (h(i, c) != 0) combine_rows(h, u, pivot, i, c);
    if (h(pivot, c) == 0) continue;
    if (h(pivot, c) < 0) {
      negate_row(h, pivot);
      negate_row(u, pivot);
    }
    for (Index k = 0; k < pivot; ++k) {
      const Integer f = floor_div(h(k, c), h(pivot, c));
      if (f == 0) continue;
      h.row(k) -= f * h.row(pivot);
      u.row(k) -= f * u.row(pivot);
    }
    ++pivot;
  }
  return {std::move(h), std::move(u)};
}

Index SmithDecomposition::rank() const {
  Index r = 0;
  for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) out.push_back(S(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  IntMatrix s = m;
  IntMatrix u = IntMatrix::Identity(rows, rows);
  IntMatrix v = IntMatrix::Identity(cols, cols);
  const Index diag = std::min(rows, cols);
  for (Index t = 0; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    Index pi = -1, pj = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j)
        if (s(i, j) != 0 && (pi < 0 || abs(s(i, j)) < abs(s(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      s.row(t).swap(s.row(pi));
      u.row(t).swap(u.row(pi));
    }
    if (pj != t) {
      s.col(t).swap(s.col(pj));
      v.col(t).swap(v.col(pj));
    }
    while (true) {
      for (Index i = t + 1; i < rows; ++i)
        if (s(i, t) != 0) combine_rows(s, u, t, i, t);
      for (Index j = t + 1; j < cols; ++j)
        if (s(t, j) != 0) combine_cols(s, v, t, j, t);
      bool column_clear = true;
      for (Index i = t + 1; i < rows; ++i)
        if (s(i, t) != 0) column_clear = false;
      if (!column_clear) continue;
      // Divisibility: fold an offending row into the pivot row and repeat.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      s.row(t) += s.row(bad);
      u.row(t) += u.row(bad);
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

IntMatrix rows_to_matrix(std::span<const IntVector> rows, Index cols) {
  IntMatrix out(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "vectors of unequal length");
    out.row(static_cast<Index>(i)) = rows[i].transpose();
  }
  return out;
}

std::vector<IntVector> kernel_lattice_basis(const IntMatrix& a) {
  const Index n = a.cols();
  std::vector<IntVector> basis;
  if (n == 0) return basis;
  IntMatrix generators;
  if (a.rows() == 0) {
    generators = IntMatrix::Identity(n, n);
  } else {
    const SmithDecomposition snf = smith_normal_form(a);
    const Index r = snf.rank();
    if (r == n) return basis;
    generators = snf.V.rightCols(n - r).transpose();
  }
  const HermiteDecomposition hnf = hermite_normal_form(generators);
  for (Index i = 0; i < hnf.H.rows(); ++i)
    if (!is_zero(hnf.H.row(i))) basis.push_back(hnf.H.row(i).transpose());
  return basis;
}

std::vector<IntVector> lll_reduce(std::vector<IntVector> b) {
  const std::size_t m = b.size();
  if (m < 2) return b;
  std::vector<RatVector> star(m);
  std::vector<Rational> norm(m);
  std::vector<std::vector<Rational>> mu(m, std::vector<Rational>(m, Rational(0)));
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      star[i] = b[i].cast<Rational>();
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = b[i].cast<Rational>().dot(star[j]) / norm[j];
        star[i] -= mu[i][j] * star[j];
      }
      norm[i] = star[i].squaredNorm();
      if (norm[i] == 0) throw Error(ErrorKind::InvalidInput, "LLL input vectors are linearly dependent");
    }
  };
  auto size_reduce = [&](std::size_t k, std::size_t j) {
    const Rational& x = mu[k][j];
    const Integer r = floor_div(2 * numerator(x) + denominator(x), 2 * denominator(x));
    if (r == 0) return;
    b[k] -= r * b[j];
    for (std::size_t l = 0; l < j; ++l) mu[k][l] -= Rational(r) * mu[j][l];
    mu[k][j] -= Rational(r);
  };
  gram_schmidt();
  const Rational delta(3, 4);
  std::size_t k = 1;
  while (k < m) {
    for (std::size_t j = k; j-- > 0;) size_reduce(k, j);
    if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

std::vector<Index> row_reduce(RatMatrix& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index c = 0; c < m.cols() && row < m.rows(); ++c) {
    Index p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, c);
    m.row(row) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      m.row(i) -= f * m.row(row);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve_rational: right-hand side has wrong length");
  const Index n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const std::vector<Index> pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RatVector x = RatVector::Zero(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Index>(i), n);
  return x;
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b) {
  return solve_rational(RatMatrix(a.cast<Rational>()), b);
}

bool lattice_member(std::span<const IntVector> lattice, const RatVector& v) {
  const Index dim = v.size();
  for (const IntVector& w : lattice)
    if (w.size() != dim) throw Error(ErrorKind::DimensionMismatch, "lattice_member: vectors of unequal length");
  RatVector residual = v;
  if (lattice.empty()) return is_zero(residual);
  const IntMatrix h = hermite_normal_form(rows_to_matrix(lattice, dim)).H;
  Index row = 0;
  for (Index c = 0; c < dim; ++c) {
    if (row < h.rows() && h(row, c) != 0) {
      const Rational q = residual(c) / Rational(h(row, c));
      if (!is_integral(q)) return false;
      for (Index k = c; k < dim; ++k) residual(k) -= q * Rational(h(row, k));
      ++row;
    } else if (residual(c) != 0) {
      return false;
    }
  }
  return true;
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace gkz
