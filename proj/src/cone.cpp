#include "gkz/cone.hpp"

#include "gkz/error.hpp"
#include "gkz/fourier_motzkin.hpp"
#include "gkz/linalg.hpp"

#include <algorithm>
#include <set>

namespace gkz {

namespace {

// Feasibility of { y : y.a_k >= 0 for k in `nonneg`, y.a_k >= 1 for k in `positive`,
// y.a_k = 0 for k in `zero` }, solved in coordinates of the annihilator of `zero`.
std::optional<IntVector> find_functional(const IntMatrix& a, const IndexSet& zero, const IndexSet& nonneg,
                                         const IndexSet& positive) {
  const Index d = a.rows();
  IntMatrix annihilator;
  if (zero.empty()) {
    annihilator = IntMatrix::Identity(d, d);
  } else {
    const std::vector<IntVector> basis = kernel_lattice_basis(IntMatrix(select_columns(a, zero).transpose()));
    annihilator = rows_to_matrix(basis, d);  // k x d
  }
  const Index k = annihilator.rows();
  const Index m = static_cast<Index>(nonneg.size() + positive.size());
  if (k == 0) {
    if (!positive.empty()) return std::nullopt;
    return IntVector(IntVector::Zero(d));
  }
  RatMatrix g(m, k);
  RatVector h(m);
  Index row = 0;
  for (const IndexSet* group : {&nonneg, &positive}) {
    for (Index j : *group) {
      g.row(row) = (annihilator * a.col(j)).transpose().cast<Rational>();
      h(row) = group == &positive ? 1 : 0;
      ++row;
    }
  }
  const auto lambda = fourier_motzkin_feasible(g, h);
  if (!lambda) return std::nullopt;
  const RatVector phi = annihilator.transpose().cast<Rational>() * *lambda;
  return primitive(clear_denominators(phi));
}

IndexSet complement(const IndexSet& s, Index n) {
  IndexSet out;
  for (Index j = 0; j < n; ++j)
    if (!std::binary_search(s.begin(), s.end(), j)) out.push_back(j);
  return out;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Configuration::Configuration(IntMatrix a) : a_(std::move(a)) {
  if (a_.rows() == 0 || a_.cols() == 0)
    throw Error(ErrorKind::DegenerateConfiguration, "configuration matrix is empty");
  const SmithDecomposition snf = smith_normal_form(a_);
  if (snf.rank() != a_.rows())
    throw Error(ErrorKind::NotNormalized, "configuration rows are linearly dependent");
  for (const Integer& f : snf.invariant_factors())
    if (f != 1) throw Error(ErrorKind::NotNormalized, "columns do not generate Z^d");
  const IndexSet all = all_columns();
  for (Index j = 0; j < size(); ++j)
    if (!find_functional(a_, {}, all, {j})) units_.push_back(j);
  pointed_ = units_.empty();
}

IndexSet Configuration::all_columns() const {
  IndexSet out(static_cast<std::size_t>(size()));
  for (Index j = 0; j < size(); ++j) out[static_cast<std::size_t>(j)] = j;
  return out;
}

bool Configuration::has_repeated_columns() const {
  for (Index i = 0; i < size(); ++i)
    for (Index j = i + 1; j < size(); ++j)
      if (a_.col(i) == a_.col(j)) return true;
  return false;
}

bool Face::contains(Index j) const { return std::binary_search(indices.begin(), indices.end(), j); }

bool canonical_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const Face* FaceLattice::find(const IndexSet& indices) const {
  for (const Face& f : faces)
    if (f.indices == indices) return &f;
  return nullptr;
}

ColumnLattice column_lattice(const IntMatrix& a) {
  const HermiteDecomposition hnf = hermite_normal_form(IntMatrix(a.transpose()));
  const Index r = hnf.rank();
  IntMatrix basis = hnf.H.topRows(r).transpose();
  IntMatrix reduced(r, a.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    const auto x = solve_rational(basis, RatVector(a.col(j).cast<Rational>()));
    if (!x) throw Error(ErrorKind::InternalInconsistency, "column outside its own lattice basis");
    for (Index i = 0; i < r; ++i) {
      if (!is_integral((*x)(i))) throw Error(ErrorKind::InternalInconsistency, "lattice basis coordinates not integral");
      reduced(i, j) = numerator((*x)(i));
    }
  }
  return {std::move(basis), std::move(reduced)};
}

Reduction reduce_configuration(const IntMatrix& a_raw, const Parameter& beta_raw) {
  if (a_raw.rows() == 0 || a_raw.cols() == 0) throw Error(ErrorKind::InvalidInput, "matrix A is empty");
  if (beta_raw.size() != a_raw.rows())
    throw Error(ErrorKind::DimensionMismatch, "beta has " + std::to_string(beta_raw.size()) + " entries but A has " +
                                                  std::to_string(a_raw.rows()) + " rows");
  ColumnLattice lattice = column_lattice(a_raw);
  const Index r = lattice.basis.cols();
  if (r == 0) throw Error(ErrorKind::RankDeficient, "matrix A has rank 0");

  const auto re = solve_rational(lattice.basis, beta_raw.re);
  const auto im = solve_rational(lattice.basis, beta_raw.im);
  if (!re || !im) {
    Index nonzero_rows = 0;
    for (Index i = 0; i < a_raw.rows(); ++i)
      if (!is_zero(a_raw.row(i))) ++nonzero_rows;
    if (r < nonzero_rows)
      throw Error(ErrorKind::RankDeficient, "rows of A are dependent and beta lies outside the column span");
    throw Error(ErrorKind::BetaOutsideSpan, "beta lies outside the column span of A");
  }
  return {Configuration(std::move(lattice.reduced)), Parameter(*re, *im), std::move(lattice.basis)};
}

std::optional<Face> is_face(const Configuration& c, const IndexSet& subset) {
  IndexSet s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Index j : s)
    if (j < 0 || j >= c.size()) throw Error(ErrorKind::InvalidInput, "column index out of range");
  const auto phi = find_functional(c.matrix(), s, {}, complement(s, c.size()));
  if (!phi) return std::nullopt;
  return Face{std::move(s), *phi};
}

bool verify_witness(const Configuration& c, const Face& f) {
  if (f.witness.size() != c.dimension()) return false;
  for (Index j = 0; j < c.size(); ++j) {
    const Integer v = f.witness.dot(c.column(j));
    if (f.contains(j) ? v != 0 : v <= 0) return false;
  }
  return true;
}

std::vector<IntVector> facet_normals(const Configuration& c) {
  const Index d = c.dimension(), n = c.size();
  struct Ray {
    IntVector y;
    std::vector<bool> zeros;  // over processed constraints
  };
  std::vector<IntVector> lineality;
  for (Index i = 0; i < d; ++i) lineality.push_back(IntVector::Unit(d, i));
  std::vector<Ray> rays;

  for (Index j = 0; j < n; ++j) {
    const auto a = c.column(j);
    auto pivot = std::find_if(lineality.begin(), lineality.end(), [&](const IntVector& l) { return l.dot(a) != 0; });
    if (pivot != lineality.end()) {
      IntVector l = *pivot;
      lineality.erase(pivot);
      if (l.dot(a) < 0) l = -l;
      const Integer la = l.dot(a);
      for (IntVector& other : lineality) {
        const Integer oa = other.dot(a);
        if (oa != 0) other = primitive(IntVector(la * other - oa * l));
      }
      for (Ray& r : rays) {
        const Integer ra = r.y.dot(a);
        if (ra != 0) r.y = primitive(IntVector(la * r.y - ra * l));
        r.zeros[static_cast<std::size_t>(j)] = true;
      }
      std::vector<bool> zeros(static_cast<std::size_t>(n), false);
      for (Index k = 0; k < j; ++k) zeros[static_cast<std::size_t>(k)] = true;
      rays.push_back({l, std::move(zeros)});
      continue;
    }

    std::vector<const Ray*> pos, neg;
    std::vector<Ray> next;
    for (const Ray& r : rays) {
      const Integer v = r.y.dot(a);
      if (v > 0) {
        pos.push_back(&r);
        next.push_back(r);
      } else if (v < 0) {
        neg.push_back(&r);
      } else {
        next.push_back(r);
        next.back().zeros[static_cast<std::size_t>(j)] = true;
      }
    }
    const std::size_t needed = static_cast<std::size_t>(std::max<Index>(0, d - static_cast<Index>(lineality.size()) - 2));
    for (const Ray* p : pos) {
      for (const Ray* q : neg) {
        std::vector<bool> common(static_cast<std::size_t>(n));
        std::size_t count = 0;
        for (std::size_t k = 0; k < common.size(); ++k) {
          common[k] = p->zeros[k] && q->zeros[k];
          count += common[k];
        }
        if (count < needed) continue;
        bool adjacent = true;
        for (const Ray& r : rays) {
          if (&r == p || &r == q) continue;
          bool covers = true;
          for (std::size_t k = 0; k < common.size() && covers; ++k)
            if (common[k] && !r.zeros[k]) covers = false;
          if (covers) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        const Integer pa = p->y.dot(a), qa = q->y.dot(a);
        common[static_cast<std::size_t>(j)] = true;
        next.push_back({primitive(IntVector(pa * q->y - qa * p->y)), std::move(common)});
      }
    }
    rays = std::move(next);
  }
  if (!lineality.empty())
    throw Error(ErrorKind::InternalInconsistency, "dual cone has lineality; configuration is not full rank");

  std::vector<IntVector> normals;
  for (const Ray& r : rays) normals.push_back(r.y);
  std::sort(normals.begin(), normals.end(), [](const IntVector& x, const IntVector& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  return normals;
}

namespace {

void sort_canonically(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return canonical_less(a.indices, b.indices); });
}

FaceLattice faces_by_double_description(const Configuration& c) {
  const std::vector<IntVector> normals = facet_normals(c);
  std::vector<IndexSet> facet_sets;
  for (const IntVector& y : normals) {
    IndexSet s;
    for (Index j = 0; j < c.size(); ++j)
      if (y.dot(c.column(j)) == 0) s.push_back(j);
    facet_sets.push_back(std::move(s));
  }
  std::set<IndexSet> found{c.all_columns()};
  for (const IndexSet& facet : facet_sets) {
    std::vector<IndexSet> current(found.begin(), found.end());
    for (const IndexSet& g : current) {
      IndexSet meet;
      std::set_intersection(facet.begin(), facet.end(), g.begin(), g.end(), std::back_inserter(meet));
      found.insert(std::move(meet));
    }
  }
  FaceLattice lattice;
  for (const IndexSet& s : found) {
    IntVector phi = IntVector::Zero(c.dimension());
    for (std::size_t i = 0; i < facet_sets.size(); ++i)
      if (is_subset(s, facet_sets[i])) phi += normals[i];
    lattice.faces.push_back({s, primitive(phi)});
  }
  sort_canonically(lattice.faces);
  return lattice;
}

FaceLattice faces_by_brute_force(const Configuration& c) {
  const Index n = c.size();
  if (n > 24) throw Error(ErrorKind::ScaleLimit, "brute-force face enumeration limited to 24 columns");
  FaceLattice lattice;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    IndexSet s;
    for (Index j = 0; j < n; ++j)
      if (mask >> j & 1U) s.push_back(j);
    if (auto f = is_face(c, s)) lattice.faces.push_back(std::move(*f));
  }
  sort_canonically(lattice.faces);
  return lattice;
}

}  // namespace

FaceLattice enumerate_faces(const Configuration& c, FaceMethod method) {
  return method == FaceMethod::BruteForce ? faces_by_brute_force(c) : faces_by_double_description(c);
}

std::vector<Face> subfaces(const FaceLattice& lattice, const Face& f) {
  if (!lattice.find(f.indices)) throw Error(ErrorKind::FaceNotInLattice, "face is not in the lattice");
  std::vector<Face> out;
  for (const Face& g : lattice.faces)
    if (g.indices.size() < f.indices.size() && is_subset(g.indices, f.indices)) out.push_back(g);
  return out;
}

}  // namespace gkz
