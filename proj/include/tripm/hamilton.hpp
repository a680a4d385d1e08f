#pragma once

#include <vector>

#include "tripm/budget.hpp"
#include "tripm/graph.hpp"

namespace tripm {

/// Hamilton cycle as edge ids in traversal order from vertex 0, found by
/// depth-first extension in edge-id order. A vertex left with fewer than two
/// usable neighbours cuts the branch.
SearchOutcome<std::vector<EdgeId>> hamilton_cycle(const Graph& g, SearchBudget& budget);

}  // namespace tripm
