#pragma once

// JSON encoding of inputs and reports. Face indices are 1-based on the wire;
// integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are "p/q" strings, complex entries {"re", "im"}.

#include "gkz/classify.hpp"
#include "gkz/cone.hpp"
#include "gkz/pyramid.hpp"
#include "gkz/resonance.hpp"
#include "gkz/scalar.hpp"
#include "gkz/toric.hpp"
#include "gkz/volume.hpp"

#include "json.hpp"

#include <optional>
#include <string_view>

namespace gkz {

using json = nlohmann::ordered_json;

json integer_to_json(const Integer& z);
Integer integer_from_json(const json& j);
json gauss_to_json(const GaussRat& z);
GaussRat gauss_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);
/// Rows of integers; throws InvalidInput on ragged or empty input.
IntMatrix matrix_from_json(const json& j);
json parameter_to_json(const Parameter& beta);
Parameter parameter_from_json(const json& j);

/// {"A": [[...]], "beta": [...]}; beta optional.
struct ProblemInput {
  IntMatrix a;
  std::optional<Parameter> beta;
};
ProblemInput parse_problem_json(std::string_view text);
json problem_to_json(const ProblemInput& input);

void to_json(json& j, const Face& f);
void from_json(const json& j, Face& f);
void to_json(json& j, const FaceLattice& l);
void from_json(const json& j, FaceLattice& l);
void to_json(json& j, const Reduction& r);
void from_json(const json& j, Reduction& r);
void to_json(json& j, const ResonanceReport& r);
void from_json(const json& j, ResonanceReport& r);
void to_json(json& j, const ArrangementDescription& a);
void from_json(const json& j, ArrangementDescription& a);
void to_json(json& j, const PyramidVerdict& v);
void from_json(const json& j, PyramidVerdict& v);
void to_json(json& j, const BetaSplit& s);
void from_json(const json& j, BetaSplit& s);
void to_json(json& j, const VolumeResult& v);
void from_json(const json& j, VolumeResult& v);
void to_json(json& j, const Classification& c);
void from_json(const json& j, Classification& c);
void to_json(json& j, const Binomial& b);
void from_json(const json& j, Binomial& b);
void to_json(json& j, const EulerOperator& e);
void from_json(const json& j, EulerOperator& e);
void to_json(json& j, const ToricSystem& s);
void from_json(const json& j, ToricSystem& s);

}  // namespace gkz
