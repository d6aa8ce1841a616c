#pragma once

// A small Buchberger engine over Q: degrevlex and block elimination orders,
// Gebauer-Moeller pair criteria. Sized for saturating toric ideals at desk
// scale.

#include "gkz/scalar.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace gkz {

using Exponent = std::vector<int>;

bool divides(const Exponent& a, const Exponent& b);
Exponent exponent_lcm(const Exponent& a, const Exponent& b);
int total_degree(const Exponent& e);

/// Degree reverse lexicographic order on variables [0, block_start), refined
/// by a first comparison of the block [block_start, nvars) in the same order.
/// With block_start == nvars this is plain degrevlex.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex(std::size_t nvars) { return {nvars, nvars}; }
  static MonomialOrder elimination(std::size_t nvars, std::size_t block_start) { return {nvars, block_start}; }

  std::size_t variables() const { return nvars_; }
  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;

 private:
  MonomialOrder(std::size_t nvars, std::size_t block_start) : nvars_(nvars), block_start_(block_start) {}
  std::size_t nvars_;
  std::size_t block_start_;
};

struct Term {
  Exponent exponent;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms sorted strictly decreasing in the order used to build the polynomial,
/// no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& leading() const { return terms.front(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial make_polynomial(std::vector<Term> terms, const MonomialOrder& order);
Polynomial monic(Polynomial p);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);
/// Full reduction of f modulo the basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);

struct GroebnerBudget {
  std::size_t max_pairs = 200000;
};

/// Reduced, monic Groebner basis sorted by decreasing leading monomial.
/// Throws ScaleLimit when more than budget.max_pairs S-pairs are reduced.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, const MonomialOrder& order,
                                       const GroebnerBudget& budget = {});

}  // namespace gkz
