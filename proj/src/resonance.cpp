#include "gkz/resonance.hpp"

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"

#include <algorithm>

namespace gkz {

IntMatrix quotient_functionals(const Configuration& c, const Face& f) {
  const Index d = c.dimension();
  if (f.indices.empty()) return IntMatrix::Identity(d, d);
  const IntMatrix span_t = select_columns(c.matrix(), f.indices).transpose();
  return rows_to_matrix(kernel_lattice_basis(span_t), d);
}

bool in_resonant_span(const Configuration& c, const Face& f, const Parameter& beta) {
  if (beta.size() != c.dimension())
    throw Error(ErrorKind::DimensionMismatch, "beta length does not match the configuration dimension");
  const IntMatrix y = quotient_functionals(c, f);
  if (y.rows() == 0) return true;
  const RatMatrix yq = y.cast<Rational>();
  if (!is_zero(RatVector(yq * beta.im))) return false;
  // Image of Z^d in the quotient is spanned by the columns of y.
  std::vector<IntVector> image;
  for (Index i = 0; i < y.cols(); ++i) image.push_back(y.col(i));
  return lattice_member(image, RatVector(yq * beta.re));
}

ResonanceReport resonance_centers(const Configuration& c, const FaceLattice& lattice, const Parameter& beta) {
  ResonanceReport report;
  report.beta = beta;
  for (const Face& f : lattice.faces)
    if (in_resonant_span(c, f, beta)) report.member_faces.push_back(f);
  for (const Face& f : report.member_faces) {
    const bool minimal = std::none_of(report.member_faces.begin(), report.member_faces.end(), [&](const Face& g) {
      return g.size() < f.size() && std::includes(f.indices.begin(), f.indices.end(), g.indices.begin(), g.indices.end());
    });
    if (minimal) report.centers.push_back(f);
  }
  if (report.centers.empty())
    throw Error(ErrorKind::InternalInconsistency, "no resonance center found; the whole configuration must be a member");
  report.is_nonresonant = report.centers.size() == 1 && report.centers.front().indices == lattice.whole().indices;
  return report;
}

ResonanceReport resonance_centers(const Configuration& c, const Parameter& beta) {
  return resonance_centers(c, enumerate_faces(c), beta);
}

bool is_resonant(const Configuration& c, const Parameter& beta) { return !resonance_centers(c, beta).is_nonresonant; }

std::string congruence_text(const IntVector& functional) {
  std::string out;
  for (Index i = 0; i < functional.size(); ++i) {
    const Integer& v = functional(i);
    if (v == 0) continue;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (abs(v) != 1) out += to_string(Integer(abs(v))) + "*";
    out += "beta_" + std::to_string(i + 1);
  }
  if (out.empty()) out = "0";
  return out + " in Z";
}

ArrangementDescription describe_resonant_arrangement(const Configuration& c) {
  ArrangementDescription out;
  out.dimension = c.dimension();
  const FaceLattice lattice = enumerate_faces(c);
  for (const Face& f : lattice.faces) {
    if (f.indices.size() == static_cast<std::size_t>(c.size())) continue;
    ArrangementComponent comp;
    comp.face = f;
    if (f.indices.empty()) {
      comp.span_basis = IntMatrix(0, c.dimension());
    } else {
      const HermiteDecomposition hnf = hermite_normal_form(IntMatrix(select_columns(c.matrix(), f.indices).transpose()));
      comp.span_basis = hnf.H.topRows(hnf.rank());
    }
    comp.functionals = quotient_functionals(c, f);
    for (Index i = 0; i < comp.functionals.rows(); ++i)
      comp.congruences.push_back(congruence_text(comp.functionals.row(i).transpose()));
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace gkz
