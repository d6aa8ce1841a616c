#include "gkz/fourier_motzkin.hpp"

#include "gkz/error.hpp"

#include <map>
#include <vector>

namespace gkz {

namespace {

// coeffs . y >= rhs
struct Inequality {
  std::vector<Rational> coeffs;
  Rational rhs;
};

using System = std::vector<Inequality>;

Integer ceil_of(const Rational& q) { return -floor_div(-numerator(q), denominator(q)); }
Integer floor_of(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

// Scales to unit leading coefficient, drops duplicates keeping the tightest
// right-hand side, and reports infeasible constant rows.
bool normalize(System& system) {
  std::map<std::vector<Rational>, Rational> unique;
  for (Inequality& ineq : system) {
    Rational lead = 0;
    for (const Rational& c : ineq.coeffs)
      if (c != 0) {
        lead = abs(c);
        break;
      }
    if (lead == 0) {
      if (ineq.rhs > 0) return false;
      continue;
    }
    for (Rational& c : ineq.coeffs) c /= lead;
    ineq.rhs /= lead;
    auto [it, inserted] = unique.try_emplace(ineq.coeffs, ineq.rhs);
    if (!inserted && ineq.rhs > it->second) it->second = ineq.rhs;
  }
  system.clear();
  for (auto& [coeffs, rhs] : unique) system.push_back({coeffs, rhs});
  return true;
}

System eliminate(const System& system, std::size_t var) {
  System lower, upper, out;
  for (const Inequality& ineq : system) {
    if (ineq.coeffs[var] > 0) lower.push_back(ineq);
    else if (ineq.coeffs[var] < 0) upper.push_back(ineq);
    else out.push_back(ineq);
  }
  for (const Inequality& lo : lower) {
    for (const Inequality& up : upper) {
      const Rational a = lo.coeffs[var], b = -up.coeffs[var];
      Inequality combined{std::vector<Rational>(lo.coeffs.size()), b * lo.rhs + a * up.rhs};
      for (std::size_t k = 0; k < lo.coeffs.size(); ++k) combined.coeffs[k] = b * lo.coeffs[k] + a * up.coeffs[k];
      combined.coeffs[var] = 0;
      out.push_back(std::move(combined));
    }
  }
  return out;
}

Rational pick(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  const bool zero_ok = (!lo || *lo <= 0) && (!hi || *hi >= 0);
  if (zero_ok) return 0;
  if (lo && *lo > 0) {
    Rational c(ceil_of(*lo));
    return (!hi || c <= *hi) ? c : *lo;
  }
  Rational f(floor_of(*hi));
  return (!lo || f >= *lo) ? f : *hi;
}

}  // namespace

std::optional<RatVector> fourier_motzkin_feasible(const RatMatrix& g, const RatVector& h) {
  if (g.rows() != h.size()) throw Error(ErrorKind::DimensionMismatch, "fourier_motzkin_feasible: row count mismatch");
  const std::size_t n = static_cast<std::size_t>(g.cols());
  // stages[k] involves variables 0..k-1 only.
  std::vector<System> stages(n + 1);
  System& top = stages[n];
  for (Index i = 0; i < g.rows(); ++i) {
    Inequality ineq{std::vector<Rational>(n), h(i)};
    for (std::size_t k = 0; k < n; ++k) ineq.coeffs[k] = g(i, static_cast<Index>(k));
    top.push_back(std::move(ineq));
  }
  if (!normalize(top)) return std::nullopt;
  for (std::size_t k = n; k > 0; --k) {
    stages[k - 1] = eliminate(stages[k], k - 1);
    if (!normalize(stages[k - 1])) return std::nullopt;
  }
  RatVector y = RatVector::Zero(static_cast<Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<Rational> lo, hi;
    for (const Inequality& ineq : stages[k + 1]) {
      const Rational& c = ineq.coeffs[k];
      if (c == 0) continue;
      Rational rest = ineq.rhs;
      for (std::size_t i = 0; i < k; ++i) rest -= ineq.coeffs[i] * y(static_cast<Index>(i));
      const Rational bound = rest / c;
      if (c > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    if (lo && hi && *lo > *hi)
      throw Error(ErrorKind::InternalInconsistency, "Fourier-Motzkin back substitution found an empty interval");
    y(static_cast<Index>(k)) = pick(lo, hi);
  }
  return y;
}

}  // namespace gkz
