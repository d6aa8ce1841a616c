#include "gkz/pyramid.hpp"

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"
#include "gkz/volume.hpp"

#include <set>
#include <vector>

namespace gkz {

namespace {

IndexSet outside(const Configuration& c, const Face& f) {
  IndexSet out;
  for (Index j = 0; j < c.size(); ++j)
    if (!f.contains(j)) out.push_back(j);
  return out;
}

IntMatrix without_column(const IntMatrix& a, Index j) {
  IntMatrix out(a.rows(), a.cols() - 1);
  for (Index k = 0, t = 0; k < a.cols(); ++k)
    if (k != j) out.col(t++) = a.col(k);
  return out;
}

}  // namespace

bool is_pyramid_rank(const Configuration& c, const Face& f) {
  const Index face_rank = f.indices.empty() ? 0 : rank(select_columns(c.matrix(), f.indices));
  return c.dimension() == static_cast<Index>(outside(c, f).size()) + face_rank;
}

bool is_pyramid_summand(const Configuration& c, const Face& f) {
  const Index d = c.dimension();
  for (Index j : outside(c, f)) {
    const IntMatrix rest = without_column(c.matrix(), j);
    const SmithDecomposition snf = smith_normal_form(rest);
    // a_j outside Q(A \ a_j)
    if (snf.rank() != d - 1) return false;
    for (Index i = 0; i < d - 1; ++i)
      if (snf.S(i, i) != 1) return false;
    // a_j generates Z^d / Z(A \ a_j)
    const IntVector image = snf.U * c.column(j);
    if (abs(image(d - 1)) != 1) return false;
  }
  return true;
}

bool is_pyramid_kernel(const Configuration& c, const Face& f) {
  for (const IntVector& u : kernel_lattice_basis(c.matrix()))
    for (Index j : outside(c, f))
      if (u(j) != 0) return false;
  return true;
}

bool is_pyramid_volume(const Configuration& c, const Face& f) {
  return face_volume(c, f) == normalized_volume(c).volume;
}

bool volume_check_applies(const Configuration& c, const Face& f) {
  if (f.indices.empty()) return false;
  const IndexSet rest = outside(c, f);
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t k = i + 1; k < rest.size(); ++k)
      if (c.column(rest[i]) == c.column(rest[k])) return false;
  return true;
}

PyramidVerdict is_pyramid(const Configuration& c, const Face& f) {
  PyramidVerdict verdict;
  verdict.checks["rank"] = is_pyramid_rank(c, f);
  verdict.checks["summand"] = is_pyramid_summand(c, f);
  verdict.checks["kernel"] = is_pyramid_kernel(c, f);
  if (volume_check_applies(c, f)) verdict.checks["volume"] = is_pyramid_volume(c, f);
  const bool first = verdict.checks.begin()->second;
  for (const auto& [name, value] : verdict.checks)
    if (value != first) verdict.agreement = false;
  if (!verdict.agreement) {
    std::string detail;
    for (const auto& [name, value] : verdict.checks) detail += " " + name + "=" + (value ? "true" : "false");
    throw Error(ErrorKind::InternalInconsistency, "pyramid criteria disagree:" + detail);
  }
  verdict.is_pyramid = first;
  return verdict;
}

BetaSplit split_beta(const Configuration& c, const Face& f, const Parameter& beta) {
  if (beta.size() != c.dimension()) throw Error(ErrorKind::DimensionMismatch, "beta length does not match dimension");
  if (!is_pyramid_rank(c, f)) throw Error(ErrorKind::NotAPyramid, "configuration is not a pyramid over the face");
  const auto re = solve_rational(c.matrix(), beta.re);
  const auto im = solve_rational(c.matrix(), beta.im);
  if (!re || !im) throw Error(ErrorKind::BetaOutsideSpan, "beta lies outside the column span");
  BetaSplit split;
  split.beta_face = beta;
  for (Index j : outside(c, f)) {
    const GaussRat coeff{(*re)(j), (*im)(j)};
    split.beta_bar[j] = coeff;
    const RatVector column = c.column(j).cast<Rational>();
    split.beta_face.re -= coeff.re * column;
    split.beta_face.im -= coeff.im * column;
  }
  return split;
}

}  // namespace gkz
