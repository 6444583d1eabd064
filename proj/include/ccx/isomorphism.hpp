#pragma once

#include "ccx/graph.hpp"

namespace ccx {

// Exact isomorphism test: iterated neighborhood-color refinement for
// pruning, then backtracking. Meant for desk-scale round-trip checks, not
// adversarial inputs.
bool graph_isomorphic(const CubeGraph& a, const CubeGraph& b);

}  // namespace ccx
