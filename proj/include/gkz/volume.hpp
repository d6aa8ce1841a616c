#pragma once

// Normalized volume vol_A(A) = d! * vol(conv(A u {0})), the generic rank of
// the hypergeometric system, certified by a placing triangulation.

#include "gkz/cone.hpp"
#include "gkz/scalar.hpp"

#include <vector>

namespace gkz {

/// Vertex 0 is the origin, vertex j >= 1 is column j (1-based).
struct Simplex {
  std::vector<Index> vertices;
  Integer contribution;  // |det| of the edge matrix
};

struct VolumeResult {
  Integer volume;
  std::vector<Simplex> triangulation;
};

/// Placing triangulation of {0} u columns of a full-rank d x n matrix, points
/// inserted in column order. Throws DegenerateConfiguration if rank < d.
VolumeResult placing_volume(const IntMatrix& points);

VolumeResult normalized_volume(const Configuration& c);

/// Normalized volume of the face configuration in its own lattice ZF.
/// Throws EmptyFace for the empty face.
Integer face_volume(const Configuration& c, const Face& f);

inline Integer generic_rank(const Configuration& c) { return normalized_volume(c).volume; }

/// |det| of the simplex with the given vertex labels.
Integer simplex_volume(const IntMatrix& points, const std::vector<Index>& vertices);

}  // namespace gkz
