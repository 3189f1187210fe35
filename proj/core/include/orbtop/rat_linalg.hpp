#pragma once

#include <vector>

#include "orbtop/rational.hpp"

namespace orbtop {

using RatMatrix = std::vector<RatVec>;  // row-major, rectangular

/// Solves A x = b exactly over Q; throws SingularSystem if A is singular.
RatVec solve_linear_system(RatMatrix a, RatVec b);

}  // namespace orbtop
