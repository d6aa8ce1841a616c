#include "gkz/error.hpp"
#include "gkz/io.hpp"
#include "gkz/toric.hpp"

#include <functional>
#include <sstream>

namespace gkz {

namespace {

using VarName = std::function<std::string(std::size_t)>;

struct Dialect {
  VarName x;
  VarName d;
  std::string imaginary;  // name of sqrt(-1) in the coefficient field
};

std::string monomial(const Exponent& e, const VarName& name) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += name(j);
    if (e[j] > 1) out += '^' + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

std::string constant(const GaussRat& z, const std::string& imaginary) {
  if (z.is_real()) return to_string(z.re);
  std::string out = "(";
  if (z.re != 0) out += to_string(z.re);
  if (z.im >= 0 && z.re != 0) out += '+';
  if (z.im == 1)
    out += imaginary;
  else if (z.im == -1)
    out += "-" + imaginary;
  else
    out += to_string(z.im) + "*" + imaginary;
  return out + ")";
}

std::string euler_text(const EulerOperator& e, const Dialect& dialect) {
  std::string out;
  for (std::size_t j = 0; j < e.coefficients.size(); ++j) {
    const Integer& a = e.coefficients[j];
    if (a == 0) continue;
    const Integer mag = abs(a);
    if (a < 0)
      out += out.empty() ? "-" : " - ";
    else if (!out.empty())
      out += " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += dialect.x(j) + "*" + dialect.d(j);
  }
  if (!e.shift.is_zero()) {
    if (e.shift.is_real()) {
      const Rational mag = abs(e.shift.re);
      if (out.empty())
        out = to_string(e.shift.re);
      else
        out += (e.shift.re < 0 ? " - " : " + ") + to_string(mag);
    } else {
      out += out.empty() ? "" : " + ";
      out += constant(e.shift, dialect.imaginary);
    }
  }
  return out.empty() ? "0" : out;
}

std::string binomial_text(const Binomial& b, const Dialect& dialect) {
  return monomial(b.plus, dialect.d) + " - " + monomial(b.minus, dialect.d);
}

bool has_complex_shift(const ToricSystem& s) {
  for (const EulerOperator& e : s.euler)
    if (!e.shift.is_real()) return true;
  return false;
}

std::string joined_list(const std::vector<std::string>& items, const std::string& indent) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    out += indent + items[k];
    if (k + 1 < items.size()) out += ',';
    out += '\n';
  }
  return out;
}

std::string macaulay2(const ToricSystem& s) {
  const std::size_t n = static_cast<std::size_t>(s.variables);
  const Dialect dialect{[](std::size_t j) { return "x_" + std::to_string(j + 1); },
                        [](std::size_t j) { return "dx_" + std::to_string(j + 1); }, "ii"};
  const bool complex = has_complex_shift(s);
  std::ostringstream out;
  out << "-- A-hypergeometric system H_A(beta) in " << n << " variables\n";
  out << "-- toric generators " << (s.saturated ? "saturated" : "not saturated (lattice basis only)") << "\n";
  if (complex) out << "K = toField(QQ[ii]/(ii^2+1));\n";
  out << "D = " << (complex ? "K" : "QQ") << "[";
  for (std::size_t j = 0; j < n; ++j) out << dialect.x(j) << ", ";
  for (std::size_t j = 0; j < n; ++j) out << dialect.d(j) << ", ";
  out << "WeylAlgebra => {";
  for (std::size_t j = 0; j < n; ++j) out << (j ? ", " : "") << dialect.x(j) << " => " << dialect.d(j);
  out << "}];\n";

  std::vector<std::string> euler, toric;
  for (const EulerOperator& e : s.euler) euler.push_back(euler_text(e, dialect));
  for (const Binomial& b : s.binomials) toric.push_back(binomial_text(b, dialect));
  out << "eulerOperators = {\n" << joined_list(euler, "  ") << "};\n";
  out << "toricGenerators = {\n" << joined_list(toric, "  ") << "};\n";
  out << "H = ideal(eulerOperators | toricGenerators);\n";
  return out.str();
}

std::string singular(const ToricSystem& s) {
  const std::size_t n = static_cast<std::size_t>(s.variables);
  const Dialect dialect{[](std::size_t j) { return "x(" + std::to_string(j + 1) + ")"; },
                        [](std::size_t j) { return "d(" + std::to_string(j + 1) + ")"; }, "i"};
  const bool complex = has_complex_shift(s);
  std::ostringstream out;
  out << "// A-hypergeometric system H_A(beta) in " << n << " variables\n";
  out << "// toric generators " << (s.saturated ? "saturated" : "not saturated (lattice basis only)") << "\n";
  out << "LIB \"nctools.lib\";\n";
  out << "ring R = " << (complex ? "(0,i)" : "0") << ",(x(1.." << n << "),d(1.." << n << ")),dp;\n";
  if (complex) out << "minpoly = i^2+1;\n";
  out << "def D = Weyl();\n";
  out << "setring D;\n";

  std::vector<std::string> items;
  for (const EulerOperator& e : s.euler) items.push_back(euler_text(e, dialect));
  for (const Binomial& b : s.binomials) items.push_back(binomial_text(b, dialect));
  out << "ideal H =\n" << joined_list(items, "  ") << ";\n";
  return out.str();
}

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "macaulay2" || name == "m2") return ExportFormat::Macaulay2;
  if (name == "singular") return ExportFormat::Singular;
  throw Error(ErrorKind::UnsupportedFormat, "unsupported export format '" + std::string(name) + "'");
}

std::string export_system(const ToricSystem& system, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json:
      return json(system).dump(2) + "\n";
    case ExportFormat::Macaulay2:
      return macaulay2(system);
    case ExportFormat::Singular:
      return singular(system);
  }
  throw Error(ErrorKind::UnsupportedFormat, "unsupported export format");
}

ToricSystem parse_system_json(std::string_view text) {
  try {
    return json::parse(text).get<ToricSystem>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed system JSON: ") + e.what());
  }
}

}  // namespace gkz
