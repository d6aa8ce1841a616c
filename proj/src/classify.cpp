#include "gkz/classify.hpp"

#include "gkz/error.hpp"
#include "gkz/volume.hpp"

namespace gkz {

std::string_view to_string(Verdict v) { return v == Verdict::Irreducible ? "Irreducible" : "Reducible"; }

Verdict parse_verdict(std::string_view text) {
  if (text == "Irreducible") return Verdict::Irreducible;
  if (text == "Reducible") return Verdict::Reducible;
  throw Error(ErrorKind::InvalidInput, "unknown verdict '" + std::string(text) + "'");
}

Classification classify(const IntMatrix& a_raw, const Parameter& beta_raw) {
  Classification out;
  out.normalized = reduce_configuration(a_raw, beta_raw);
  const Configuration& c = out.normalized.config;
  if (c.has_repeated_columns())
    throw Error(ErrorKind::RepeatedColumns, "A has repeated columns; the criterion applies to column sets");

  const FaceLattice lattice = enumerate_faces(c);
  const ResonanceReport report = resonance_centers(c, lattice, out.normalized.beta);
  out.generic_rank = generic_rank(c);
  out.nonresonant = report.is_nonresonant;

  std::optional<Index> pyramid_center;
  for (const Face& f : report.centers) {
    CenterEvidence ev{f, is_pyramid(c, f), std::nullopt};
    if (!f.indices.empty()) ev.face_volume = face_volume(c, f);
    if (ev.pyramid.is_pyramid && !pyramid_center) pyramid_center = static_cast<Index>(out.centers.size());
    out.centers.push_back(std::move(ev));
  }
  if (pyramid_center) {
    if (out.centers.size() != 1)
      throw Error(ErrorKind::InternalInconsistency, "a pyramid resonance center must be the only center");
    out.verdict = Verdict::Irreducible;
    out.witness = *pyramid_center;
  } else {
    out.verdict = Verdict::Reducible;
    out.witness = 0;
    for (const CenterEvidence& ev : out.centers)
      if (ev.face_volume && !(*ev.face_volume < out.generic_rank))
        throw Error(ErrorKind::InternalInconsistency, "non-pyramid center without a volume drop");
  }
  return out;
}

std::vector<Classification> classify_equivalence_class(const IntMatrix& a_raw, const Parameter& beta_raw,
                                                       const std::vector<IntVector>& shifts) {
  std::vector<Classification> out;
  for (const IntVector& z : shifts) {
    out.push_back(classify(a_raw, shifted(beta_raw, a_raw, z)));
    if (out.back().verdict != out.front().verdict)
      throw Error(ErrorKind::ShiftInvarianceViolation, "verdict changed under an integer shift of beta");
  }
  return out;
}

}  // namespace gkz
