#pragma once

// Random generators and independent oracles shared by the test binaries.

#include "gkz/cone.hpp"
#include "gkz/linalg.hpp"
#include "gkz/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace gkz::testing {

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

inline IntMatrix random_matrix(Rng& rng, Index d, Index n, int lo, int hi) {
  IntMatrix m(d, n);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = rng.uniform(lo, hi);
  return m;
}

inline bool distinct_columns(const IntMatrix& a) {
  for (Index i = 0; i < a.cols(); ++i)
    for (Index j = i + 1; j < a.cols(); ++j)
      if (a.col(i) == a.col(j)) return false;
  return true;
}

// Random raw matrix with d <= max_d rows, n <= max_n columns, entries in
// [-bound, bound], normalized so that its columns generate the lattice.
// Configurations with repeated columns are redrawn.
inline Configuration random_configuration(Rng& rng, Index max_d, Index max_n, int bound) {
  while (true) {
    const Index d = rng.uniform(1, static_cast<int>(max_d));
    const Index n = rng.uniform(static_cast<int>(d), static_cast<int>(max_n));
    const IntMatrix raw = random_matrix(rng, d, n, -bound, bound);
    if (rank(raw) == 0) continue;
    const Reduction r = reduce_configuration(raw, Parameter::zero(d));
    if (!distinct_columns(r.config.matrix())) continue;
    return r.config;
  }
}

// Product of random elementary integer row operations.
inline IntMatrix random_unimodular(Rng& rng, Index d, int steps = 6) {
  IntMatrix u = IntMatrix::Identity(d, d);
  for (int s = 0; s < steps && d > 1; ++s) {
    const Index i = rng.uniform(0, static_cast<int>(d) - 1);
    Index k = rng.uniform(0, static_cast<int>(d) - 2);
    if (k >= i) ++k;
    switch (rng.uniform(0, 2)) {
      case 0:
        u.row(i) += rng.uniform(-2, 2) * u.row(k);
        break;
      case 1:
        u.row(i).swap(u.row(k));
        break;
      default:
        u.row(i) = -u.row(i);
    }
  }
  return u;
}

inline Rational random_rational(Rng& rng, int bound = 3, int max_den = 6) {
  return Rational(rng.uniform(-bound * max_den, bound * max_den), rng.uniform(1, max_den));
}

// Parameter in C A: either generic, or resonant by construction
// (integer point plus a combination of the columns of a random face).
inline Parameter random_parameter(Rng& rng, const Configuration& c, const FaceLattice& lattice) {
  const Index d = c.dimension();
  std::vector<GaussRat> entries(static_cast<std::size_t>(d));
  switch (rng.uniform(0, 3)) {
    case 0:
      for (GaussRat& e : entries) e = GaussRat(random_rational(rng));
      break;
    case 1:
      for (GaussRat& e : entries) e = GaussRat(random_rational(rng), rng.coin() ? random_rational(rng) : Rational(0));
      break;
    default: {
      const Face& f = lattice.faces[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(lattice.faces.size()) - 1))];
      for (Index i = 0; i < d; ++i) entries[static_cast<std::size_t>(i)] = GaussRat(rng.uniform(-3, 3));
      for (Index j : f.indices) {
        const GaussRat coeff(random_rational(rng), rng.uniform(0, 3) == 0 ? random_rational(rng) : Rational(0));
        for (Index i = 0; i < d; ++i) {
          GaussRat& e = entries[static_cast<std::size_t>(i)];
          e = e + Rational(c.matrix()(i, j)) * coeff;
        }
      }
    }
  }
  return Parameter(entries);
}

inline std::vector<Index> random_permutation(Rng& rng, Index n) {
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), Index{0});
  std::shuffle(p.begin(), p.end(), rng.engine());
  return p;
}

inline IntMatrix permute_columns(const IntMatrix& a, const std::vector<Index>& p) {
  IntMatrix out(a.rows(), a.cols());
  for (Index j = 0; j < a.cols(); ++j) out.col(j) = a.col(p[static_cast<std::size_t>(j)]);
  return out;
}

// ---- oracles ----

// Determinant by cofactor expansion.
inline Integer cofactor_determinant(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer sum = 0;
  for (Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i)
      for (Index k = 0, t = 0; k < n; ++k)
        if (k != j) minor(i - 1, t++) = m(i, k);
    const Integer term = m(0, j) * cofactor_determinant(minor);
    sum += (j % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

// Kernel lattice of A from the rows of U beyond the rank in U * A^T = H.
inline std::vector<IntVector> kernel_via_hermite(const IntMatrix& a) {
  const HermiteDecomposition h = hermite_normal_form(IntMatrix(a.transpose()));
  std::vector<IntVector> out;
  for (Index i = h.rank(); i < h.U.rows(); ++i) out.push_back(h.U.row(i).transpose());
  return out;
}

// Canonical form of the lattice spanned by `rows` (nonzero HNF rows).
inline IntMatrix lattice_hnf(const std::vector<IntVector>& rows, Index dim) {
  if (rows.empty()) return IntMatrix(0, dim);
  const HermiteDecomposition h = hermite_normal_form(rows_to_matrix(rows, dim));
  return h.H.topRows(h.rank());
}

// Is v an integer combination of `gens` with coefficients in [-box, box]?
inline bool bounded_lattice_member(const std::vector<IntVector>& gens, const RatVector& v, int box) {
  std::vector<int> coeff(gens.size(), -box);
  while (true) {
    RatVector sum = RatVector::Zero(v.size());
    for (std::size_t k = 0; k < gens.size(); ++k) sum += Rational(coeff[k]) * gens[k].cast<Rational>();
    if (sum == v) return true;
    std::size_t k = 0;
    while (k < coeff.size() && coeff[k] == box) coeff[k++] = -box;
    if (k == coeff.size()) return false;
    ++coeff[k];
  }
}

// Twice the area of conv(points and the origin) in the plane.
inline Integer shoelace_volume(const IntMatrix& points) {
  using P = std::pair<Integer, Integer>;
  std::vector<P> pts{{0, 0}};
  for (Index j = 0; j < points.cols(); ++j) pts.emplace_back(points(0, j), points(1, j));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  auto cross = [](const P& o, const P& a, const P& b) {
    return Integer((a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first));
  };
  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  Integer twice_area = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const P& p = hull[i];
    const P& q = hull[(i + 1) % hull.size()];
    twice_area += p.first * q.second - q.first * p.second;
  }
  return abs(twice_area);
}

inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index d = static_cast<Index>(rows.size());
  const Index n = static_cast<Index>(rows.begin()->size());
  IntMatrix m(d, n);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Parameter make_beta(std::initializer_list<GaussRat> entries) { return Parameter(std::vector<GaussRat>(entries)); }

inline Rational q(long p, long den = 1) { return Rational(p, den); }

inline IndexSet set(std::initializer_list<Index> one_based) {
  IndexSet out;
  for (Index j : one_based) out.push_back(j - 1);
  return out;
}

inline std::vector<IndexSet> face_sets(const FaceLattice& lattice) {
  std::vector<IndexSet> out;
  for (const Face& f : lattice.faces) out.push_back(f.indices);
  return out;
}

}  // namespace gkz::testing
