#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tripm/graph.hpp"

namespace tripm {

/// Parameters for `generate`. Only the fields a family uses are read.
struct GeneratorParams {
    std::size_t n = 0;           // wheel / double_wheel rim size, random_regular order, cycle/path/complete order
    std::size_t k = 0;           // random_regular degree
    std::uint64_t seed = 0;      // halin, random_regular
    std::size_t max_vertices = 16;  // halin size cap
};

/// Builds a named graph. Families and their frozen vertex numbering:
///
///  - k4: complete graph on 0..3.
///  - k33: parts {0,1,2} and {3,4,5}.
///  - prism (alias b6): triangles 0-1-2 and 3-4-5, rungs i -- i+3.
///  - b8: edges 01 02 05 14 16 23 25 34 37 46 57 67.
///  - petersen: outer cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
///  - cube: vertices 0..7, edges between ids differing in one bit.
///  - octahedron: all pairs except the antipodal pairs (i, i+3).
///  - icosahedron: 12 vertices numbered top to bottom as drawn in the classic
///    labelled drawing (0 apex, 1 the vertex below it, 2..5 the upper row left
///    to right, 6..8 the middle row, 9 the lower centre, 10/11 the base corners).
///  - dodecahedron: outer cycle 0..4, middle 10-cycle 5..14, inner cycle 15..19;
///    i -- 5+2i and 6+2i -- 15+i.
///  - wheel(n): rim cycle 0..n-1, hub n. Requires n >= 3.
///  - double_wheel(n): rim cycle 0..n-1, hubs n and n+1 adjacent; hub n sees
///    rim 0..ceil(n/2)-1, hub n+1 the rest. Requires n >= 4.
///  - carvalho10: the 10-vertex, 17-edge graph with an independent perfect
///    matching polytope; 0 apex, 1..3 the upper row, 4/5, 6/7, 8/9 below.
///  - no_pm_cubic16: three gadgets k = 0,1,2 on a=5k, b, c, w, y=5k+4 with
///    edges ab aw ac bc cw by wy, and hub 15 adjacent to every y.
///  - halin(seed, max_vertices): random plane tree, internal degree >= 3,
///    leaves closed into a cycle in planar order. Vertex 0 is the root,
///    remaining vertices in creation order.
///  - random_regular(k, n, seed): pairing model, resampled until simple.
///  - cycle(n), path(n), complete(n), theta: small helpers (theta is the
///    2-vertex, 3-parallel-edge multigraph).
///
/// Throws std::invalid_argument on unknown family or invalid parameters.
Graph generate(std::string_view family, const GeneratorParams& params = {});

/// Families `generate` accepts.
std::vector<std::string> generator_families();

/// True if the family's output depends on `seed`.
bool family_is_seeded(std::string_view family);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph wheel_graph(std::size_t rim);
Graph double_wheel_graph(std::size_t rim);
Graph halin_graph(std::uint64_t seed, std::size_t max_vertices);
Graph random_regular_graph(std::size_t k, std::size_t n, std::uint64_t seed);

}  // namespace tripm
