#pragma once

#include "qcoord/signals/signals.hpp"

namespace qcoord::detail {

// Local-polytope LP on the conditionals, without the state-consistency
// precondition of check_classically_generated.
ClassicalGenerationResult solve_local_polytope(const JointSignalDistribution& p, const Tolerances& tol);

}  // namespace qcoord::detail
