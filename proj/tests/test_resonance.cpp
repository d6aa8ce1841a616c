#include "gkz/error.hpp"
#include "gkz/resonance.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace gkz;
using namespace gkz::testing;

namespace {

const Configuration& quadric() {
  static const Configuration c(make_matrix({{1, 1, 1}, {0, 1, 2}}));
  return c;
}

const Face& face_of(const FaceLattice& l, std::initializer_list<Index> one_based) {
  const Face* f = l.find(set(one_based));
  if (!f) throw std::runtime_error("missing face");
  return *f;
}

std::vector<IndexSet> sets(const std::vector<Face>& faces) {
  std::vector<IndexSet> out;
  for (const Face& f : faces) out.push_back(f.indices);
  return out;
}

// beta in Z^d + C F, searched over integer shifts with |z_i| <= box.
bool membership_by_search(const Configuration& c, const Face& f, const Parameter& beta, int box) {
  const Index d = c.dimension();
  const IntMatrix span = select_columns(c.matrix(), f.indices);
  auto in_span = [&](const RatVector& v) {
    if (f.indices.empty()) return is_zero(v);
    return solve_rational(span, v).has_value();
  };
  if (!in_span(beta.im)) return false;
  std::vector<int> z(static_cast<std::size_t>(d), -box);
  while (true) {
    RatVector v = beta.re;
    for (Index i = 0; i < d; ++i) v(i) -= z[static_cast<std::size_t>(i)];
    if (in_span(v)) return true;
    std::size_t k = 0;
    while (k < z.size() && z[k] == box) z[k++] = -box;
    if (k == z.size()) return false;
    ++z[k];
  }
}

}  // namespace

TEST(Membership, QuadricExamples) {
  const FaceLattice l = enumerate_faces(quadric());
  const Parameter beta = make_beta({GaussRat(q(1, 2)), GaussRat(q(1))});
  EXPECT_TRUE(in_resonant_span(quadric(), face_of(l, {1}), beta));
  EXPECT_TRUE(in_resonant_span(quadric(), face_of(l, {3}), beta));
  EXPECT_FALSE(in_resonant_span(quadric(), face_of(l, {}), beta));
  EXPECT_TRUE(in_resonant_span(quadric(), l.whole(), beta));
  EXPECT_THROW(in_resonant_span(quadric(), l.whole(), Parameter::zero(3)), Error);
}

TEST(Membership, QuotientFunctionals) {
  const FaceLattice l = enumerate_faces(quadric());
  const IntMatrix y = quotient_functionals(quadric(), face_of(l, {3}));
  ASSERT_EQ(y.rows(), 1);
  EXPECT_EQ(primitive(y.row(0).transpose()).cwiseAbs(), (IntVector(2) << 2, 1).finished());
  EXPECT_EQ(quotient_functionals(quadric(), l.whole()).rows(), 0);
  EXPECT_EQ(quotient_functionals(quadric(), face_of(l, {})), IntMatrix(IntMatrix::Identity(2, 2)));
}

TEST(Centers, QuadricExamples) {
  const ResonanceReport half = resonance_centers(quadric(), make_beta({GaussRat(q(1, 2)), GaussRat(q(1))}));
  EXPECT_EQ(sets(half.centers), (std::vector<IndexSet>{set({1}), set({3})}));
  EXPECT_FALSE(half.is_nonresonant);

  const ResonanceReport generic = resonance_centers(quadric(), make_beta({GaussRat(q(1, 3)), GaussRat(q(1, 5))}));
  EXPECT_EQ(sets(generic.centers), (std::vector<IndexSet>{set({1, 2, 3})}));
  EXPECT_TRUE(generic.is_nonresonant);

  const ResonanceReport integral = resonance_centers(quadric(), Parameter::zero(2));
  EXPECT_EQ(sets(integral.centers), (std::vector<IndexSet>{{}}));
}

TEST(Centers, IsResonant) {
  EXPECT_TRUE(is_resonant(quadric(), make_beta({GaussRat(q(1, 2)), GaussRat(q(1))})));
  EXPECT_FALSE(is_resonant(quadric(), make_beta({GaussRat(q(1, 3)), GaussRat(q(1, 5))})));
  // Imaginary part outside every proper face span.
  EXPECT_FALSE(is_resonant(quadric(), make_beta({GaussRat(q(0), q(1)), GaussRat(q(0), q(1))})));
  // On the span of {1}: Im beta = (1, 0), Re beta integral in the second coordinate.
  EXPECT_TRUE(is_resonant(quadric(), make_beta({GaussRat(q(1, 7), q(1)), GaussRat(q(3))})));
}

TEST(Arrangement, QuadricCongruences) {
  const ArrangementDescription a = describe_resonant_arrangement(quadric());
  ASSERT_EQ(a.components.size(), 3U);
  EXPECT_EQ(a.components[0].face.indices, IndexSet{});
  EXPECT_EQ(a.components[0].congruences, (std::vector<std::string>{"beta_1 in Z", "beta_2 in Z"}));
  EXPECT_EQ(a.components[1].face.indices, set({1}));
  EXPECT_EQ(a.components[1].congruences, (std::vector<std::string>{"beta_2 in Z"}));
  EXPECT_EQ(a.components[2].face.indices, set({3}));
  EXPECT_EQ(a.components[2].congruences, (std::vector<std::string>{"2*beta_1 - beta_2 in Z"}));
}

TEST(Arrangement, SimplicialAndNonPointed) {
  EXPECT_EQ(describe_resonant_arrangement(Configuration(IntMatrix::Identity(2, 2))).components.size(), 3U);
  const Configuration line(make_matrix({{1, -1}}));
  EXPECT_TRUE(describe_resonant_arrangement(line).components.empty());
  Rng rng(401);
  for (int k = 0; k < 20; ++k)
    EXPECT_FALSE(is_resonant(line, make_beta({GaussRat(random_rational(rng), random_rational(rng))})));
}

TEST(ResonanceProperty, StructureOfReport) {
  Rng rng(402);
  for (int k = 0; k < 300; ++k) {
    const Configuration c = random_configuration(rng, 4, 7, 3);
    const FaceLattice l = enumerate_faces(c);
    const Parameter beta = random_parameter(rng, c, l);
    const ResonanceReport r = resonance_centers(c, l, beta);
    ASSERT_FALSE(r.centers.empty());
    ASSERT_FALSE(r.member_faces.empty());
    ASSERT_EQ(r.member_faces.back().indices, c.all_columns());
    ASSERT_EQ(r.is_nonresonant, r.centers.size() == 1 && r.centers[0].indices == c.all_columns());
    ASSERT_EQ(r.is_nonresonant, !is_resonant(c, beta));
    // Up-closed members and monotonicity.
    for (const Face& f : l.faces) {
      const bool member = in_resonant_span(c, f, beta);
      for (const Face& g : l.faces)
        if (std::includes(g.indices.begin(), g.indices.end(), f.indices.begin(), f.indices.end()) && member)
          ASSERT_TRUE(in_resonant_span(c, g, beta));
    }
    // Centers pairwise incomparable and minimal.
    for (const Face& a : r.centers)
      for (const Face& b : r.centers)
        if (!(a == b)) ASSERT_FALSE(std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end()));
  }
}

TEST(ResonanceProperty, ShiftInvariance) {
  Rng rng(403);
  for (int k = 0; k < 200; ++k) {
    const Configuration c = random_configuration(rng, 4, 7, 3);
    const FaceLattice l = enumerate_faces(c);
    const Parameter beta = random_parameter(rng, c, l);
    IntVector z(c.size());
    for (Index j = 0; j < c.size(); ++j) z(j) = rng.uniform(-4, 4);
    const Parameter moved = shifted(beta, c.matrix(), z);
    for (const Face& f : l.faces) ASSERT_EQ(in_resonant_span(c, f, beta), in_resonant_span(c, f, moved));
  }
}

TEST(ResonanceProperty, AgreesWithShiftSearch) {
  // A hit in the search box certifies membership; constructed members must
  // be accepted.
  Rng rng(404);
  int hits = 0;
  for (int k = 0; k < 150; ++k) {
    const Configuration c = random_configuration(rng, 3, 5, 3);
    const FaceLattice l = enumerate_faces(c);
    const Parameter beta = random_parameter(rng, c, l);
    for (const Face& f : l.faces) {
      const bool fast = in_resonant_span(c, f, beta);
      if (membership_by_search(c, f, beta, 10)) {
        ++hits;
        ASSERT_TRUE(fast) << c.matrix();
      }
    }
  }
  EXPECT_GT(hits, 100);
}

TEST(ResonanceProperty, MembersFromConstruction) {
  Rng rng(405);
  for (int k = 0; k < 200; ++k) {
    const Configuration c = random_configuration(rng, 4, 7, 3);
    const FaceLattice l = enumerate_faces(c);
    const Face& f = l.faces[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(l.faces.size()) - 1))];
    std::vector<GaussRat> entries;
    for (Index i = 0; i < c.dimension(); ++i) entries.emplace_back(Rational(rng.uniform(-5, 5)));
    for (Index j : f.indices) {
      const GaussRat coeff(random_rational(rng), random_rational(rng));
      for (Index i = 0; i < c.dimension(); ++i)
        entries[static_cast<std::size_t>(i)] = entries[static_cast<std::size_t>(i)] + Rational(c.matrix()(i, j)) * coeff;
    }
    ASSERT_TRUE(in_resonant_span(c, f, Parameter(entries)));
  }
}

TEST(Congruence, Text) {
  EXPECT_EQ(congruence_text((IntVector(2) << 2, -1).finished()), "2*beta_1 - beta_2 in Z");
  EXPECT_EQ(congruence_text((IntVector(3) << 0, -1, 3).finished()), "-beta_2 + 3*beta_3 in Z");
}
