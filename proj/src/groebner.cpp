#include "gkz/groebner.hpp"

#include "gkz/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gkz {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

int total_degree(const Exponent& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

namespace {

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::strong_ordering degrevlex_range(const Exponent& a, const Exponent& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i > lo; --i)
    if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
  return std::strong_ordering::equal;
}

Exponent product(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponent quotient(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// f - c * x^m * g
Polynomial subtract_multiple(const Polynomial& f, const Rational& c, const Exponent& m, const Polynomial& g,
                             const MonomialOrder& order) {
  Polynomial out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  std::size_t i = 0, k = 0;
  while (i < f.terms.size() || k < g.terms.size()) {
    if (k == g.terms.size()) {
      out.terms.push_back(f.terms[i++]);
      continue;
    }
    Term shifted{product(m, g.terms[k].exponent), -c * g.terms[k].coefficient};
    if (i == f.terms.size()) {
      out.terms.push_back(std::move(shifted));
      ++k;
      continue;
    }
    const auto cmp = order.compare(f.terms[i].exponent, shifted.exponent);
    if (cmp > 0) {
      out.terms.push_back(f.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back(std::move(shifted));
      ++k;
    } else {
      Rational sum = f.terms[i].coefficient + shifted.coefficient;
      if (sum != 0) out.terms.push_back({f.terms[i].exponent, std::move(sum)});
      ++i;
      ++k;
    }
  }
  return out;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  if (block_start_ < nvars_) {
    const auto block = degrevlex_range(a, b, block_start_, nvars_);
    if (block != 0) return block;
  }
  return degrevlex_range(a, b, 0, block_start_);
}

Polynomial make_polynomial(std::vector<Term> terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return order.compare(x.exponent, y.exponent) > 0; });
  Polynomial out;
  for (Term& t : terms) {
    if (!out.terms.empty() && out.terms.back().exponent == t.exponent) {
      out.terms.back().coefficient += t.coefficient;
      if (out.terms.back().coefficient == 0) out.terms.pop_back();
    } else if (t.coefficient != 0) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Polynomial monic(Polynomial p) {
  if (p.is_zero()) return p;
  const Rational lead = p.leading().coefficient;
  for (Term& t : p.terms) t.coefficient /= lead;
  return p;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Exponent l = exponent_lcm(f.leading().exponent, g.leading().exponent);
  Polynomial lhs;
  const Exponent mf = quotient(l, f.leading().exponent);
  const Rational cf = Rational(1) / f.leading().coefficient;
  for (const Term& t : f.terms) lhs.terms.push_back({product(mf, t.exponent), cf * t.coefficient});
  return subtract_multiple(lhs, Rational(1) / g.leading().coefficient, quotient(l, g.leading().exponent), g, order);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  Polynomial rest = f;
  Polynomial done;
  while (!rest.is_zero()) {
    const Term& lead = rest.leading();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis)
      if (!g.is_zero() && divides(g.leading().exponent, lead.exponent)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      rest = subtract_multiple(rest, lead.coefficient / reducer->leading().coefficient,
                               quotient(lead.exponent, reducer->leading().exponent), *reducer, order);
    } else {
      done.terms.push_back(lead);
      rest.terms.erase(rest.terms.begin());
    }
  }
  return done;
}

namespace {

struct Pair {
  std::size_t i, j;
  Exponent lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerBudget& budget) : order_(order), budget_(budget) {}

  void add(Polynomial h) { update(polys_.size(), std::move(h)); }

  void run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        return order_.compare(a.lcm, b.lcm) < 0;
      });
      const Pair p = *best;
      pairs_.erase(best);
      if (++processed > budget_.max_pairs)
        throw Error(ErrorKind::ScaleLimit, "Groebner computation exceeded " + std::to_string(budget_.max_pairs) + " S-pairs");
      Polynomial h = normal_form(s_polynomial(polys_[p.i], polys_[p.j], order_), active_cache_, order_);
      if (!h.is_zero()) add(monic(std::move(h)));
    }
  }

  std::vector<Polynomial> reduced() const {
    // Minimal basis first: drop elements whose leading monomial is a multiple
    // of another's (keeping the first of equal leading monomials).
    std::vector<Polynomial> g;
    for (std::size_t k = 0; k < active_cache_.size(); ++k) {
      const Exponent& lk = active_cache_[k].leading().exponent;
      bool redundant = false;
      for (std::size_t m = 0; m < active_cache_.size() && !redundant; ++m) {
        if (m == k) continue;
        const Exponent& lm = active_cache_[m].leading().exponent;
        if (divides(lm, lk) && (lm != lk || m < k)) redundant = true;
      }
      if (!redundant) g.push_back(active_cache_[k]);
    }
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t m = 0; m < g.size(); ++m)
        if (m != k) others.push_back(g[m]);
      out.push_back(monic(normal_form(g[k], others, order_)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading().exponent, b.leading().exponent) > 0;
    });
    return out;
  }

 private:
  const Exponent& lead(std::size_t k) const { return polys_[k].leading().exponent; }

  // Gebauer-Moeller installation of a new element h.
  void update(std::size_t h, Polynomial poly) {
    polys_.push_back(std::move(poly));
    const Exponent& lh = lead(h);

    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({h, g, exponent_lcm(lh, lead(g))});
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& c = candidates[k];
      bool keep = coprime(lh, lead(c.j));
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < candidates.size() && keep; ++m)
          if (divides(candidates[m].lcm, c.lcm)) keep = false;
        for (const Pair& q : kept)
          if (keep && divides(q.lcm, c.lcm)) keep = false;
      }
      if (keep) kept.push_back(c);
    }
    std::vector<Pair> fresh;
    for (Pair& c : kept)
      if (!coprime(lh, lead(c.j))) fresh.push_back(std::move(c));

    std::vector<Pair> survivors;
    for (Pair& p : pairs_) {
      const bool drop = divides(lh, p.lcm) && exponent_lcm(lead(p.i), lh) != p.lcm &&
                        exponent_lcm(lh, lead(p.j)) != p.lcm;
      if (!drop) survivors.push_back(std::move(p));
    }
    survivors.insert(survivors.end(), std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));
    pairs_ = std::move(survivors);

    std::vector<std::size_t> next;
    for (std::size_t g : active_)
      if (!divides(lh, lead(g))) next.push_back(g);
    next.push_back(h);
    active_ = std::move(next);
    active_cache_.clear();
    for (std::size_t k : active_) active_cache_.push_back(polys_[k]);
  }

  const MonomialOrder& order_;
  const GroebnerBudget& budget_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::vector<Polynomial> active_cache_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, const MonomialOrder& order,
                                       const GroebnerBudget& budget) {
  Buchberger engine(order, budget);
  for (Polynomial& f : generators)
    if (!f.is_zero()) engine.add(monic(std::move(f)));
  engine.run();
  return engine.reduced();
}

}  // namespace gkz
