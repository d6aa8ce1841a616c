#include "gkz/scalar.hpp"

#include "gkz/error.hpp"

#include <cctype>
#include <optional>

namespace gkz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::BetaOutsideSpan: return "BetaOutsideSpan";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::RepeatedColumns: return "RepeatedColumns";
    case ErrorKind::FaceNotInLattice: return "FaceNotInLattice";
    case ErrorKind::NotAPyramid: return "NotAPyramid";
    case ErrorKind::EmptyFace: return "EmptyFace";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::ScaleLimit: return "ScaleLimit";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ShiftInvarianceViolation: return "ShiftInvarianceViolation";
  }
  return "Unknown";
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

ExtendedGcd xgcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quotient * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

IntVector clear_denominators(const RatVector& v) {
  Integer common = 1;
  for (Index i = 0; i < v.size(); ++i) common = lcm(common, denominator(v(i)));
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = numerator(v(i)) * (common / denominator(v(i)));
  return out;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::InvalidInput, "invalid literal '" + std::string(text_) + "' at position " +
                                             std::to_string(offset_ + pos_ + 1) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<Integer> digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  // [digits [/ digits]], absent when no digits follow.
  std::optional<Rational> magnitude() {
    auto num = digits();
    if (!num) return std::nullopt;
    Integer den = 1;
    if (accept('/')) {
      auto d = digits();
      if (!d) fail("expected denominator");
      if (*d == 0) fail("zero denominator");
      den = *d;
    }
    char c = peek();
    if (c == '.' || c == 'e' || c == 'E') fail("decimal literals are not exact; write p/q");
    return Rational(*num, den);
  }

  // One signed term, returns (value, is_imaginary).
  std::pair<Rational, bool> term(bool sign_required) {
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else if (!accept('+') && sign_required) {
      fail("expected '+' or '-'");
    }
    auto mag = magnitude();
    bool imaginary = false;
    if (mag) accept('*');
    if (accept('i')) imaginary = true;
    if (!mag && !imaginary) fail("expected a number");
    Rational value = mag ? *mag : Rational(1);
    return {sign * value, imaginary};
  }

  GaussRat gauss() {
    GaussRat out;
    auto [first, first_im] = term(false);
    (first_im ? out.im : out.re) = first;
    if (!at_end()) {
      auto [second, second_im] = term(true);
      if (second_im == first_im) fail(first_im ? "two imaginary parts" : "two real parts");
      (second_im ? out.im : out.re) = second;
    }
    if (!at_end()) fail("unexpected trailing characters");
    return out;
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

GaussRat parse_at(std::string_view text, std::size_t offset) {
  return LiteralParser(text, offset).gauss();
}

}  // namespace

GaussRat parse_gauss_rat(std::string_view text) { return parse_at(text, 0); }

Rational parse_rational(std::string_view text) {
  GaussRat z = parse_at(text, 0);
  if (!z.is_real())
    throw Error(ErrorKind::InvalidInput, "invalid literal '" + std::string(text) + "': expected a real rational");
  return z.re;
}

std::vector<GaussRat> parse_gauss_list(std::string_view text) {
  std::vector<GaussRat> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_at(piece, start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const GaussRat& z) {
  if (z.is_real()) return to_string(z.re);
  std::string im = (abs(z.im) == 1) ? "" : to_string(abs(z.im));
  if (z.re == 0) return (z.im < 0 ? "-" : "") + im + "i";
  return to_string(z.re) + (z.im < 0 ? "-" : "+") + im + "i";
}

Parameter::Parameter(const std::vector<GaussRat>& entries)
    : re(static_cast<Index>(entries.size())), im(static_cast<Index>(entries.size())) {
  for (Index i = 0; i < re.size(); ++i) {
    re(i) = entries[static_cast<std::size_t>(i)].re;
    im(i) = entries[static_cast<std::size_t>(i)].im;
  }
}

Parameter Parameter::real(RatVector r) {
  RatVector i = RatVector::Zero(r.size());
  return {std::move(r), std::move(i)};
}

Parameter Parameter::zero(Index size) { return {RatVector::Zero(size), RatVector::Zero(size)}; }

std::vector<GaussRat> Parameter::entries() const {
  std::vector<GaussRat> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Index i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

bool Parameter::is_real() const { return is_zero(im); }

Parameter shifted(const Parameter& beta, const IntMatrix& a, const IntVector& z) {
  if (a.rows() != beta.size() || a.cols() != z.size())
    throw Error(ErrorKind::DimensionMismatch, "shift has wrong dimensions");
  RatVector shift = (a * z).cast<Rational>();
  return {beta.re + shift, beta.im};
}

}  // namespace gkz
