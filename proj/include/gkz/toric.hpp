#pragma once

// The hypergeometric system H_A(beta): Euler operators E_i - beta_i and the
// toric ideal I_A in the variables d_1..d_n, plus script exporters.

#include "gkz/cone.hpp"
#include "gkz/groebner.hpp"
#include "gkz/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gkz {

/// d^plus - d^minus, oriented so that plus is lexicographically larger.
struct Binomial {
  Exponent plus;
  Exponent minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Binomial for a kernel vector u: d^{u+} - d^{u-}, canonically oriented.
Binomial binomial_from_kernel_vector(const IntVector& u);
/// plus - minus as an integer vector.
IntVector binomial_exponent(const Binomial& b);
/// Order on binomials: total degree, then plus and minus lexicographically
/// decreasing.
bool canonical_less(const Binomial& a, const Binomial& b);

/// sum_j coefficients[j] * x_j d_j + shift, with shift = -beta_i.
struct EulerOperator {
  Index index = 0;  // 0-based row of A
  std::vector<Integer> coefficients;
  GaussRat shift;

  friend bool operator==(const EulerOperator&, const EulerOperator&) = default;
};

struct ToricSystem {
  Index variables = 0;
  std::vector<EulerOperator> euler;
  std::vector<Binomial> binomials;
  bool saturated = false;

  friend bool operator==(const ToricSystem&, const ToricSystem&) = default;
};

std::vector<EulerOperator> euler_operators(const Configuration& c, const Parameter& beta);

/// One binomial per vector of the kernel lattice basis.
std::vector<Binomial> lattice_binomials(const Configuration& c);

/// Generators of I_A: the lattice-basis ideal saturated at d_1...d_n,
/// via elimination of an auxiliary variable. Reduced degrevlex Groebner
/// basis, canonically sorted. Throws ScaleLimit past the budget.
std::vector<Binomial> toric_ideal_generators(const Configuration& c, const GroebnerBudget& budget = {});

/// Euler operators plus toric generators; falls back to the lattice
/// binomials (saturated = false) when the Groebner budget runs out.
ToricSystem hypergeometric_system(const Configuration& c, const Parameter& beta, const GroebnerBudget& budget = {});

/// b as a polynomial in n variables.
Polynomial to_polynomial(const Binomial& b, const MonomialOrder& order);

enum class ExportFormat { Json, Macaulay2, Singular };

ExportFormat parse_export_format(std::string_view name);  // throws UnsupportedFormat
std::string export_system(const ToricSystem& system, ExportFormat format);
ToricSystem parse_system_json(std::string_view text);

}  // namespace gkz
