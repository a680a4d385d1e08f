#pragma once

#include <vector>

#include "tripm/budget.hpp"
#include "tripm/certificates.hpp"

namespace tripm {

/// Proper 3-edge-colouring of a cubic graph, one singleton colour set per
/// edge. Each component is coloured separately by backtracking in edge-id
/// order with its first edge fixed to colour 1. Throws std::invalid_argument
/// if `h` is not cubic.
SearchOutcome<std::vector<ColorSet>> color_cubic_3(const Graph& h, SearchBudget& budget);

}  // namespace tripm
