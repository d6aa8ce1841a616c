#pragma once

// Configurations A (columns = lattice points generating Z^d) and the faces of
// the cone Q_+ A, each certified by an integer functional.

#include "gkz/scalar.hpp"

#include <optional>
#include <vector>

namespace gkz {

/// Integer d x n matrix whose columns generate Z^d.
class Configuration {
 public:
  /// Throws NotNormalized unless rank == rows and every Smith invariant
  /// factor is 1, DegenerateConfiguration for empty matrices.
  explicit Configuration(IntMatrix a);
  Configuration() = default;

  const IntMatrix& matrix() const { return a_; }
  Index dimension() const { return a_.rows(); }
  Index size() const { return a_.cols(); }
  auto column(Index j) const { return a_.col(j); }

  /// The empty set is a face.
  bool is_pointed() const { return pointed_; }
  /// Columns in the minimal face (units of NA and zero columns).
  const IndexSet& units() const { return units_; }
  bool has_repeated_columns() const;

  IndexSet all_columns() const;

 private:
  IntMatrix a_;
  bool pointed_ = false;
  IndexSet units_;
};

/// A face F with a functional vanishing on F and positive off F.
struct Face {
  IndexSet indices;
  IntVector witness;

  bool contains(Index j) const;
  std::size_t size() const { return indices.size(); }

  friend bool operator==(const Face& a, const Face& b) { return a.indices == b.indices; }
};

/// Canonical order: by cardinality, then lexicographically by indices.
bool canonical_less(const IndexSet& a, const IndexSet& b);

/// Every face of a configuration, sorted canonically.
struct FaceLattice {
  std::vector<Face> faces;

  const Face* find(const IndexSet& indices) const;
  const Face& whole() const { return faces.back(); }
  bool contains_empty() const { return !faces.empty() && faces.front().indices.empty(); }
};

/// A = B * A' with the columns of A' generating Z^r.
struct ColumnLattice {
  IntMatrix basis;    // d x r
  IntMatrix reduced;  // r x n
};

ColumnLattice column_lattice(const IntMatrix& a);

/// Normalized input: config.matrix() = B^{-1} A_raw, beta = B^{-1} beta_raw.
struct Reduction {
  Configuration config;
  Parameter beta;
  IntMatrix basis;
};

Reduction reduce_configuration(const IntMatrix& a_raw, const Parameter& beta_raw);

std::optional<Face> is_face(const Configuration& c, const IndexSet& subset);

/// True iff the witness vanishes exactly on the face's columns.
bool verify_witness(const Configuration& c, const Face& f);

/// Primitive inner normals of the facets of Q_+ A, computed by the double
/// description method on the dual cone.
std::vector<IntVector> facet_normals(const Configuration& c);

enum class FaceMethod { DoubleDescription, BruteForce };

FaceLattice enumerate_faces(const Configuration& c, FaceMethod method = FaceMethod::DoubleDescription);

/// Faces strictly contained in f. Throws FaceNotInLattice.
std::vector<Face> subfaces(const FaceLattice& lattice, const Face& f);

}  // namespace gkz
