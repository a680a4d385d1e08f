#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tripm/graph.hpp"
#include "tripm/matching.hpp"

namespace tripm {

/// The data-parallel loops of the matching engine. Every kernel has a serial
/// reference and an OpenMP version; each loop iteration is an independent
/// pure computation, so both produce identical results.
enum class Exec { serial, parallel };

/// Exec::parallel when built with OpenMP, otherwise Exec::serial.
Exec default_exec();

/// For each vertex v: the maximum matching size of the graph on `allowed`
/// edges with v deleted.
std::vector<std::size_t> deletion_matching_numbers(const Graph& g, const EdgeSet& allowed,
                                                   Exec exec = default_exec());

/// For each edge e: a perfect matching containing e, if one exists.
std::vector<std::optional<Matching>> forced_edge_matchings(const Graph& g, Exec exec = default_exec());

/// For each v in `scope` (in increasing order): whether the subgraph induced
/// by scope - v has a perfect matching.
std::vector<char> deletion_perfect_flags(const Graph& g, const VertexSet& scope,
                                         Exec exec = default_exec());

}  // namespace tripm
