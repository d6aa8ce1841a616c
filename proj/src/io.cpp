#include "gkz/io.hpp"

#include "gkz/error.hpp"

#include <limits>

namespace gkz {

json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integral(q)) throw Error(ErrorKind::InvalidInput, "expected an integer, got " + j.dump());
    return numerator(q);
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer, got " + j.dump());
}

json gauss_to_json(const GaussRat& z) {
  if (z.is_real()) return to_string(z.re);
  return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected a rational \"p/q\" string, got " + j.dump());
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(integer_to_json(v(i)));
  return out;
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of integers");
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = integer_from_json(j[i]);
  return v;
}

json indices_to_json(const IndexSet& s) {
  json out = json::array();
  for (Index i : s) out.push_back(i + 1);
  return out;
}

IndexSet indices_from_json(const json& j) {
  IndexSet s;
  for (const json& e : j) {
    const Index i = e.get<Index>();
    if (i < 1) throw Error(ErrorKind::InvalidInput, "face indices are 1-based");
    s.push_back(i - 1);
  }
  return s;
}

json exponent_to_json(const Exponent& e) { return json(e); }

}  // namespace

GaussRat gauss_from_json(const json& j) {
  if (j.is_object()) {
    GaussRat z;
    if (j.contains("re")) z.re = rational_from_json(j.at("re"));
    if (j.contains("im")) z.im = rational_from_json(j.at("im"));
    return z;
  }
  if (j.is_string()) return parse_gauss_rat(j.get<std::string>());
  if (j.is_number_integer()) return GaussRat(Rational(j.get<std::int64_t>()));
  throw Error(ErrorKind::InvalidInput, "expected a rational literal, got " + j.dump() + " (floats are not accepted)");
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i).transpose()));
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidInput, "matrix must be a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw Error(ErrorKind::InvalidInput, "matrix rows must be nonempty arrays");
  IntMatrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw Error(ErrorKind::InvalidInput, "matrix row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(static_cast<Index>(i), static_cast<Index>(k)) = integer_from_json(j[i][k]);
  }
  return m;
}

json parameter_to_json(const Parameter& beta) {
  json out = json::array();
  for (Index i = 0; i < beta.size(); ++i) out.push_back(gauss_to_json(beta[i]));
  return out;
}

Parameter parameter_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "beta must be an array");
  std::vector<GaussRat> entries;
  for (const json& e : j) entries.push_back(gauss_from_json(e));
  return Parameter(entries);
}

ProblemInput parse_problem_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("A")) throw Error(ErrorKind::InvalidInput, "input must be an object with key \"A\"");
  ProblemInput input{matrix_from_json(j.at("A")), std::nullopt};
  if (j.contains("beta")) input.beta = parameter_from_json(j.at("beta"));
  return input;
}

json problem_to_json(const ProblemInput& input) {
  json j{{"A", matrix_to_json(input.a)}};
  if (input.beta) j["beta"] = parameter_to_json(*input.beta);
  return j;
}

void to_json(json& j, const Face& f) {
  j = json{{"indices", indices_to_json(f.indices)}, {"witness", vector_to_json(f.witness)}};
}

void from_json(const json& j, Face& f) {
  f.indices = indices_from_json(j.at("indices"));
  f.witness = vector_from_json(j.at("witness"));
}

void to_json(json& j, const FaceLattice& l) { j = json{{"faces", l.faces}}; }

void from_json(const json& j, FaceLattice& l) { l.faces = j.at("faces").get<std::vector<Face>>(); }

void to_json(json& j, const Reduction& r) {
  j = json{{"A", matrix_to_json(r.config.matrix())},
           {"beta", parameter_to_json(r.beta)},
           {"B", matrix_to_json(r.basis)},
           {"pointed", r.config.is_pointed()}};
}

void from_json(const json& j, Reduction& r) {
  r.config = Configuration(matrix_from_json(j.at("A")));
  r.beta = parameter_from_json(j.at("beta"));
  r.basis = matrix_from_json(j.at("B"));
}

void to_json(json& j, const ResonanceReport& r) {
  j = json{{"beta", parameter_to_json(r.beta)},
           {"member_faces", r.member_faces},
           {"centers", r.centers},
           {"nonresonant", r.is_nonresonant}};
}

void from_json(const json& j, ResonanceReport& r) {
  r.beta = parameter_from_json(j.at("beta"));
  r.member_faces = j.at("member_faces").get<std::vector<Face>>();
  r.centers = j.at("centers").get<std::vector<Face>>();
  r.is_nonresonant = j.at("nonresonant").get<bool>();
}

void to_json(json& j, const ArrangementDescription& a) {
  json components = json::array();
  for (const ArrangementComponent& c : a.components) {
    components.push_back(json{{"face", c.face},
                              {"span_basis", matrix_to_json(c.span_basis)},
                              {"functionals", matrix_to_json(c.functionals)},
                              {"congruences", c.congruences}});
  }
  j = json{{"dimension", a.dimension}, {"components", components}};
}

void from_json(const json& j, ArrangementDescription& a) {
  a.dimension = j.at("dimension").get<Index>();
  a.components.clear();
  for (const json& c : j.at("components")) {
    ArrangementComponent comp;
    comp.face = c.at("face").get<Face>();
    const json& span = c.at("span_basis");
    comp.span_basis = span.empty() ? IntMatrix(0, a.dimension) : matrix_from_json(span);
    comp.functionals = matrix_from_json(c.at("functionals"));
    comp.congruences = c.at("congruences").get<std::vector<std::string>>();
    a.components.push_back(std::move(comp));
  }
}

void to_json(json& j, const PyramidVerdict& v) {
  json checks = json::object();
  for (const auto& [name, value] : v.checks) checks[name] = value;
  j = json{{"is_pyramid", v.is_pyramid}, {"checks", checks}, {"agreement", v.agreement}};
}

void from_json(const json& j, PyramidVerdict& v) {
  v.is_pyramid = j.at("is_pyramid").get<bool>();
  v.checks.clear();
  for (const auto& [name, value] : j.at("checks").items()) v.checks[name] = value.get<bool>();
  v.agreement = j.at("agreement").get<bool>();
}

void to_json(json& j, const BetaSplit& s) {
  json bar = json::object();
  for (const auto& [index, value] : s.beta_bar) bar[std::to_string(index + 1)] = gauss_to_json(value);
  j = json{{"beta_face", parameter_to_json(s.beta_face)}, {"beta_bar", bar}};
}

void from_json(const json& j, BetaSplit& s) {
  s.beta_face = parameter_from_json(j.at("beta_face"));
  s.beta_bar.clear();
  for (const auto& [key, value] : j.at("beta_bar").items()) s.beta_bar[std::stol(key) - 1] = gauss_from_json(value);
}

void to_json(json& j, const VolumeResult& v) {
  json simplices = json::array();
  for (const Simplex& s : v.triangulation)
    simplices.push_back(json{{"vertices", s.vertices}, {"contribution", integer_to_json(s.contribution)}});
  j = json{{"volume", integer_to_json(v.volume)}, {"triangulation", simplices}};
}

void from_json(const json& j, VolumeResult& v) {
  v.volume = integer_from_json(j.at("volume"));
  v.triangulation.clear();
  for (const json& s : j.at("triangulation"))
    v.triangulation.push_back({s.at("vertices").get<std::vector<Index>>(), integer_from_json(s.at("contribution"))});
}

void to_json(json& j, const Classification& c) {
  json centers = json::array();
  json evidence = json::array();
  for (const CenterEvidence& ev : c.centers) {
    centers.push_back(indices_to_json(ev.center.indices));
    json e{{"face", ev.center}, {"pyramid", ev.pyramid}};
    e["face_volume"] = ev.face_volume ? integer_to_json(*ev.face_volume) : json(nullptr);
    evidence.push_back(std::move(e));
  }
  j = json{{"verdict", std::string(to_string(c.verdict))},
           {"centers", centers},
           {"witness_center", c.centers.empty() ? json(nullptr) : indices_to_json(c.centers[c.witness].center.indices)},
           {"nonresonant", c.nonresonant},
           {"generic_rank", integer_to_json(c.generic_rank)},
           {"evidence", evidence},
           {"normalized", c.normalized}};
}

void from_json(const json& j, Classification& c) {
  c.verdict = parse_verdict(j.at("verdict").get<std::string>());
  c.nonresonant = j.at("nonresonant").get<bool>();
  c.generic_rank = integer_from_json(j.at("generic_rank"));
  c.centers.clear();
  for (const json& e : j.at("evidence")) {
    CenterEvidence ev{e.at("face").get<Face>(), e.at("pyramid").get<PyramidVerdict>(), std::nullopt};
    if (!e.at("face_volume").is_null()) ev.face_volume = integer_from_json(e.at("face_volume"));
    c.centers.push_back(std::move(ev));
  }
  c.witness = 0;
  if (!j.at("witness_center").is_null()) {
    const IndexSet w = indices_from_json(j.at("witness_center"));
    for (std::size_t k = 0; k < c.centers.size(); ++k)
      if (c.centers[k].center.indices == w) c.witness = static_cast<Index>(k);
  }
  c.normalized = j.at("normalized").get<Reduction>();
}

void to_json(json& j, const Binomial& b) {
  j = json{{"plus", exponent_to_json(b.plus)}, {"minus", exponent_to_json(b.minus)}};
}

void from_json(const json& j, Binomial& b) {
  b.plus = j.at("plus").get<Exponent>();
  b.minus = j.at("minus").get<Exponent>();
}

void to_json(json& j, const EulerOperator& e) {
  json coeffs = json::array();
  for (const Integer& a : e.coefficients) coeffs.push_back(integer_to_json(a));
  j = json{{"index", e.index + 1}, {"coefficients", coeffs}, {"shift", gauss_to_json(e.shift)}};
}

void from_json(const json& j, EulerOperator& e) {
  e.index = j.at("index").get<Index>() - 1;
  e.coefficients.clear();
  for (const json& a : j.at("coefficients")) e.coefficients.push_back(integer_from_json(a));
  e.shift = gauss_from_json(j.at("shift"));
}

void to_json(json& j, const ToricSystem& s) {
  j = json{{"variables", s.variables}, {"euler", s.euler}, {"binomials", s.binomials}, {"saturated", s.saturated}};
}

void from_json(const json& j, ToricSystem& s) {
  s.variables = j.at("variables").get<Index>();
  s.euler = j.at("euler").get<std::vector<EulerOperator>>();
  s.binomials = j.at("binomials").get<std::vector<Binomial>>();
  s.saturated = j.at("saturated").get<bool>();
}

}  // namespace gkz
