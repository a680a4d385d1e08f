#pragma once

#include "tripm/graph.hpp"

namespace tripm {

/// Vertex k-connectivity for k in 1..3: n > k and the graph stays connected
/// after deleting any set of fewer than k vertices. Exhaustive over deletion
/// sets, intended for graphs with a few dozen vertices.
bool is_k_connected(const Graph& g, int k);

}  // namespace tripm
