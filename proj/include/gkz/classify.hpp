#pragma once

// Monodromy reducibility of M_A(beta): irreducible exactly when some
// resonance center of beta is a face over which A is a pyramid.

#include "gkz/cone.hpp"
#include "gkz/pyramid.hpp"
#include "gkz/resonance.hpp"
#include "gkz/scalar.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace gkz {

enum class Verdict { Reducible, Irreducible };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct CenterEvidence {
  Face center;
  PyramidVerdict pyramid;
  std::optional<Integer> face_volume;  // absent for the empty face
};

struct Classification {
  Verdict verdict = Verdict::Reducible;
  std::vector<CenterEvidence> centers;  // canonical order
  Index witness = 0;                    // center the verdict is attributed to
  Integer generic_rank;
  bool nonresonant = false;
  Reduction normalized;
};

/// Throws BetaOutsideSpan / RankDeficient from normalization, RepeatedColumns
/// when A has equal columns, InternalInconsistency if a pyramid center is not
/// the unique center.
Classification classify(const IntMatrix& a_raw, const Parameter& beta_raw);

/// Classifies beta + A z for each shift z; throws ShiftInvarianceViolation
/// unless all verdicts agree.
std::vector<Classification> classify_equivalence_class(const IntMatrix& a_raw, const Parameter& beta_raw,
                                                       const std::vector<IntVector>& shifts);

}  // namespace gkz
