#include "gkz/toric.hpp"

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"

#include <algorithm>
#include <limits>

namespace gkz {

namespace {

int to_exponent(const Integer& v) {
  if (v > std::numeric_limits<int>::max()) throw Error(ErrorKind::ScaleLimit, "exponent exceeds machine range");
  return static_cast<int>(v);
}

Binomial oriented(Exponent plus, Exponent minus) {
  if (plus < minus) std::swap(plus, minus);
  return {std::move(plus), std::move(minus)};
}

}  // namespace

Binomial binomial_from_kernel_vector(const IntVector& u) {
  Exponent plus(static_cast<std::size_t>(u.size()), 0), minus(static_cast<std::size_t>(u.size()), 0);
  for (Index j = 0; j < u.size(); ++j) {
    if (u(j) > 0) plus[static_cast<std::size_t>(j)] = to_exponent(u(j));
    if (u(j) < 0) minus[static_cast<std::size_t>(j)] = to_exponent(-u(j));
  }
  return oriented(std::move(plus), std::move(minus));
}

IntVector binomial_exponent(const Binomial& b) {
  IntVector u(static_cast<Index>(b.plus.size()));
  for (std::size_t j = 0; j < b.plus.size(); ++j) u(static_cast<Index>(j)) = b.plus[j] - b.minus[j];
  return u;
}

bool canonical_less(const Binomial& a, const Binomial& b) {
  const int da = std::max(total_degree(a.plus), total_degree(a.minus));
  const int db = std::max(total_degree(b.plus), total_degree(b.minus));
  if (da != db) return da < db;
  if (a.plus != b.plus) return a.plus > b.plus;
  return a.minus > b.minus;
}

std::vector<EulerOperator> euler_operators(const Configuration& c, const Parameter& beta) {
  if (beta.size() != c.dimension()) throw Error(ErrorKind::DimensionMismatch, "beta length does not match dimension");
  std::vector<EulerOperator> out;
  for (Index i = 0; i < c.dimension(); ++i) {
    EulerOperator e;
    e.index = i;
    for (Index j = 0; j < c.size(); ++j) e.coefficients.push_back(c.matrix()(i, j));
    e.shift = -beta[i];
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Binomial> lattice_binomials(const Configuration& c) {
  std::vector<Binomial> out;
  for (const IntVector& u : kernel_lattice_basis(c.matrix())) out.push_back(binomial_from_kernel_vector(u));
  return out;
}

Polynomial to_polynomial(const Binomial& b, const MonomialOrder& order) {
  Exponent plus = b.plus, minus = b.minus;
  plus.resize(order.variables(), 0);
  minus.resize(order.variables(), 0);
  return make_polynomial({{std::move(plus), Rational(1)}, {std::move(minus), Rational(-1)}}, order);
}

std::vector<Binomial> toric_ideal_generators(const Configuration& c, const GroebnerBudget& budget) {
  std::vector<Binomial> lattice;
  for (const IntVector& u : lll_reduce(kernel_lattice_basis(c.matrix()))) lattice.push_back(binomial_from_kernel_vector(u));
  if (lattice.empty()) return {};
  const std::size_t n = static_cast<std::size_t>(c.size());
  const MonomialOrder order = MonomialOrder::elimination(n + 1, n);

  std::vector<Polynomial> generators;
  for (const Binomial& b : lattice) generators.push_back(to_polynomial(b, order));
  // t * d_1 * ... * d_n - 1
  Exponent all(n + 1, 1);
  generators.push_back(make_polynomial({{all, Rational(1)}, {Exponent(n + 1, 0), Rational(-1)}}, order));

  std::vector<Binomial> out;
  for (const Polynomial& g : groebner_basis(std::move(generators), order, budget)) {
    if (g.leading().exponent[n] != 0) continue;
    if (g.terms.size() != 2 || g.terms[0].coefficient != 1 || g.terms[1].coefficient != -1)
      throw Error(ErrorKind::InternalInconsistency, "toric Groebner basis element is not a pure binomial");
    Exponent plus = g.terms[0].exponent, minus = g.terms[1].exponent;
    plus.pop_back();
    minus.pop_back();
    out.push_back(oriented(std::move(plus), std::move(minus)));
  }
  std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) { return canonical_less(a, b); });
  return out;
}

ToricSystem hypergeometric_system(const Configuration& c, const Parameter& beta, const GroebnerBudget& budget) {
  ToricSystem system;
  system.variables = c.size();
  system.euler = euler_operators(c, beta);
  try {
    system.binomials = toric_ideal_generators(c, budget);
    system.saturated = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ScaleLimit) throw;
    system.binomials = lattice_binomials(c);
    std::sort(system.binomials.begin(), system.binomials.end(),
              [](const Binomial& a, const Binomial& b) { return canonical_less(a, b); });
    system.saturated = false;
  }
  return system;
}

}  // namespace gkz
