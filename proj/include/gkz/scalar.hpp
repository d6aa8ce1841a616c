#pragma once

// Exact scalar types and the dense Eigen containers built on them.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gkz {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

using Index = Eigen::Index;

/// Sorted list of 0-based column indices.
using IndexSet = std::vector<Index>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Floor division, rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

/// Extended gcd: g = p*a + q*b with g >= 0.
struct ExtendedGcd {
  Integer g, p, q;
};
ExtendedGcd xgcd(const Integer& a, const Integer& b);

/// Exact zero test (Eigen's isZero is tolerance based).
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

/// Divides by the gcd of the entries (zero vectors are returned unchanged).
IntVector primitive(const IntVector& v);
/// Smallest positive multiple of v that is integral.
IntVector clear_denominators(const RatVector& v);

/// Gaussian rational re + im*i; the exact stand-in for a complex parameter.
struct GaussRat {
  Rational re{0};
  Rational im{0};

  GaussRat() = default;
  GaussRat(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(int r) : re(r), im(0) {}

  bool is_real() const { return im == 0; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const GaussRat&, const GaussRat&) = default;
  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const Rational& s, const GaussRat& a) { return {s * a.re, s * a.im}; }
};

/// Parses "p", "p/q", "a+bi", "bi", "-i", ... Decimal points and exponents
/// are rejected. Throws Error(InvalidInput) naming the offending position.
Rational parse_rational(std::string_view text);
GaussRat parse_gauss_rat(std::string_view text);
/// Comma separated list of GaussRat literals.
std::vector<GaussRat> parse_gauss_list(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
std::string to_string(const GaussRat& z);

/// A parameter vector beta, stored as real and imaginary parts.
struct Parameter {
  RatVector re;
  RatVector im;

  Parameter() = default;
  Parameter(RatVector r, RatVector i) : re(std::move(r)), im(std::move(i)) {}
  explicit Parameter(const std::vector<GaussRat>& entries);
  static Parameter real(RatVector r);
  static Parameter zero(Index size);

  Index size() const { return re.size(); }
  GaussRat operator[](Index i) const { return {re(i), im(i)}; }
  std::vector<GaussRat> entries() const;
  bool is_real() const;

  friend bool operator==(const Parameter& a, const Parameter& b) {
    return a.re.size() == b.re.size() && a.re == b.re && a.im == b.im;
  }
};

/// beta + A*z for an integer shift z.
Parameter shifted(const Parameter& beta, const IntMatrix& a, const IntVector& z);

}  // namespace gkz
