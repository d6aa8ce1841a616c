#include "gkz/volume.hpp"

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"

#include <algorithm>
#include <map>

namespace gkz {

namespace {

IntVector point(const IntMatrix& points, Index label) {
  if (label == 0) return IntVector::Zero(points.rows());
  return points.col(label - 1);
}

// Sign of det[q1 - q0, ..., q_{d-1} - q0, x - q0] for a facet q0..q_{d-1}.
int orientation(const IntMatrix& points, const std::vector<Index>& facet, const IntVector& x) {
  const Index d = points.rows();
  const IntVector base = point(points, facet[0]);
  IntMatrix m(d, d);
  for (Index k = 1; k < d; ++k) m.col(k - 1) = point(points, facet[static_cast<std::size_t>(k)]) - base;
  m.col(d - 1) = x - base;
  const Integer det = determinant(std::move(m));
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace

Integer simplex_volume(const IntMatrix& points, const std::vector<Index>& vertices) {
  const Index d = points.rows();
  if (static_cast<Index>(vertices.size()) != d + 1)
    throw Error(ErrorKind::DimensionMismatch, "simplex needs d+1 vertices");
  const IntVector base = point(points, vertices[0]);
  IntMatrix m(d, d);
  for (Index k = 1; k <= d; ++k) m.col(k - 1) = point(points, vertices[static_cast<std::size_t>(k)]) - base;
  return abs(determinant(std::move(m)));
}

VolumeResult placing_volume(const IntMatrix& points) {
  const Index d = points.rows(), n = points.cols();
  std::vector<Index> initial{0};
  IntMatrix edges(d, 0);
  for (Index label = 1; label <= n && static_cast<Index>(initial.size()) <= d; ++label) {
    IntMatrix trial(d, edges.cols() + 1);
    trial.leftCols(edges.cols()) = edges;
    trial.col(edges.cols()) = points.col(label - 1);
    if (rank(trial) == trial.cols()) {
      edges = std::move(trial);
      initial.push_back(label);
    }
  }
  if (static_cast<Index>(initial.size()) != d + 1)
    throw Error(ErrorKind::DegenerateConfiguration, "points do not span a full-dimensional hull");

  std::vector<std::vector<Index>> simplices{initial};
  for (Index label = 1; label <= n; ++label) {
    if (std::binary_search(initial.begin(), initial.end(), label)) continue;
    // Boundary facets are those lying in exactly one simplex.
    std::map<std::vector<Index>, std::pair<int, Index>> facets;
    for (const auto& s : simplices) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Index> facet;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) facet.push_back(s[k]);
        auto [it, inserted] = facets.try_emplace(facet, 0, s[drop]);
        ++it->second.first;
      }
    }
    const IntVector p = point(points, label);
    std::vector<std::vector<Index>> added;
    for (const auto& [facet, info] : facets) {
      if (info.first != 1) continue;
      const int side_p = orientation(points, facet, p);
      const int side_opposite = orientation(points, facet, point(points, info.second));
      if (side_p * side_opposite < 0) {
        std::vector<Index> s = facet;
        s.push_back(label);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }

  VolumeResult result{0, {}};
  for (auto& s : simplices) {
    Integer v = simplex_volume(points, s);
    result.volume += v;
    result.triangulation.push_back({std::move(s), std::move(v)});
  }
  return result;
}

VolumeResult normalized_volume(const Configuration& c) { return placing_volume(c.matrix()); }

Integer face_volume(const Configuration& c, const Face& f) {
  if (f.indices.empty()) throw Error(ErrorKind::EmptyFace, "volume of the empty face is undefined");
  const ColumnLattice lattice = column_lattice(select_columns(c.matrix(), f.indices));
  if (lattice.reduced.rows() == 0) return 1;
  return placing_volume(lattice.reduced).volume;
}

}  // namespace gkz
