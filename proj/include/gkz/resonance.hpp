#pragma once

// Resonance: membership beta in ZA + CF, resonance centers, and the
// resonant arrangement Res(A).

#include "gkz/cone.hpp"
#include "gkz/scalar.hpp"

#include <string>
#include <vector>

namespace gkz {

struct ResonanceReport {
  Parameter beta;
  std::vector<Face> member_faces;  // faces F with beta in ZA + CF, canonical order
  std::vector<Face> centers;       // inclusion-minimal members
  bool is_nonresonant = false;
};

/// Integer functionals spanning the saturated annihilator of span(F), in
/// Hermite order. beta lies in Z^d + CF iff each takes an integer value on it.
IntMatrix quotient_functionals(const Configuration& c, const Face& f);

bool in_resonant_span(const Configuration& c, const Face& f, const Parameter& beta);

ResonanceReport resonance_centers(const Configuration& c, const FaceLattice& lattice, const Parameter& beta);
ResonanceReport resonance_centers(const Configuration& c, const Parameter& beta);

bool is_resonant(const Configuration& c, const Parameter& beta);

struct ArrangementComponent {
  Face face;
  IntMatrix span_basis;   // rows: Hermite basis of the lattice ZF
  IntMatrix functionals;  // rows: quotient functionals
  std::vector<std::string> congruences;
};

struct ArrangementDescription {
  Index dimension = 0;
  std::vector<ArrangementComponent> components;  // one per proper face
};

ArrangementDescription describe_resonant_arrangement(const Configuration& c);

/// "2*beta_1 - beta_2 in Z"
std::string congruence_text(const IntVector& functional);

}  // namespace gkz
