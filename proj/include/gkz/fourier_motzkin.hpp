#pragma once

#include "gkz/scalar.hpp"

#include <optional>

namespace gkz {

/// A point y with G y >= h (row-wise), found by Fourier-Motzkin elimination
/// and back substitution, or nullopt when the system is infeasible. Among the
/// admissible values of each variable the back substitution prefers the
/// integer closest to zero.
std::optional<RatVector> fourier_motzkin_feasible(const RatMatrix& g, const RatVector& h);

}  // namespace gkz
