#pragma once

// Is A a pyramid over the face F? Several equivalent criteria, evaluated
// independently and cross-checked.

#include "gkz/cone.hpp"
#include "gkz/scalar.hpp"

#include <map>
#include <string>

namespace gkz {

struct PyramidVerdict {
  bool is_pyramid = false;
  std::map<std::string, bool> checks;  // "rank", "summand", "kernel", "volume"
  bool agreement = true;

  friend bool operator==(const PyramidVerdict&, const PyramidVerdict&) = default;
};

/// d == |complement of F| + rank ZF.
bool is_pyramid_rank(const Configuration& c, const Face& f);
/// Z a_j is a direct summand complementary to Z(A \ a_j) for every j outside F.
bool is_pyramid_summand(const Configuration& c, const Face& f);
/// ker_Z(A) is supported on F.
bool is_pyramid_kernel(const Configuration& c, const Face& f);
/// vol_F(F) == vol_A(A). Throws EmptyFace for the empty face.
bool is_pyramid_volume(const Configuration& c, const Face& f);

/// The volume criterion only characterizes pyramids for nonempty faces whose
/// complement has no repeated columns; elsewhere it is left out of the audit.
bool volume_check_applies(const Configuration& c, const Face& f);

/// Runs every applicable check. Throws InternalInconsistency if they disagree.
PyramidVerdict is_pyramid(const Configuration& c, const Face& f);

/// beta = beta_face + sum_j beta_bar[j] * a_j over the columns j outside F.
struct BetaSplit {
  Parameter beta_face;
  std::map<Index, GaussRat> beta_bar;
};

/// Throws NotAPyramid unless A is a pyramid over F.
BetaSplit split_beta(const Configuration& c, const Face& f, const Parameter& beta);

}  // namespace gkz
