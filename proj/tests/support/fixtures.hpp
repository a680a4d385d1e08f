#pragma once

// Labelled triples read off the published drawings, in the generators'
// vertex numbering.

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

#include "tripm/certificates.hpp"
#include "tripm/generators.hpp"

namespace tripm::fixture {

using Pairs = std::initializer_list<std::pair<VertexId, VertexId>>;

inline EdgeId edge_id(const Graph& g, VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).u == u && g.edge(e).v == v) return e;
    throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
}

inline EdgeSet edge_set(const Graph& g, Pairs pairs) {
    EdgeSet s = g.empty_edge_set();
    for (auto [u, v] : pairs) s.insert(edge_id(g, u, v));
    return s;
}

struct Labelled {
    std::string name;
    Graph graph;
    TripleCertificate triple;
};

inline Labelled make(std::string name, Graph g, Pairs m1, Pairs m2, Pairs m3) {
    TripleCertificate t{edge_set(g, m1), edge_set(g, m2), edge_set(g, m3)};
    return {std::move(name), std::move(g), std::move(t)};
}

inline std::vector<Labelled> figure_triples() {
    std::vector<Labelled> out;
    out.push_back(make("wheel7", wheel_graph(7),
                       {{5, 6}, {0, 7}, {1, 2}, {3, 4}},
                       {{0, 1}, {6, 7}, {4, 5}, {2, 3}},
                       {{0, 6}, {1, 7}, {4, 5}, {2, 3}}));
    out.push_back(make("double_wheel8", double_wheel_graph(8),
                       {{0, 7}, {1, 8}, {6, 9}, {2, 3}, {4, 5}},
                       {{0, 1}, {6, 7}, {2, 8}, {5, 9}, {3, 4}},
                       {{0, 8}, {7, 9}, {1, 2}, {5, 6}, {3, 4}}));
    out.push_back(make("octahedron", generate("octahedron"),
                       {{0, 1}, {4, 5}, {2, 3}},
                       {{0, 5}, {1, 2}, {3, 4}},
                       {{0, 2}, {1, 5}, {3, 4}}));
    out.push_back(make("icosahedron", generate("icosahedron"),
                       {{0, 1}, {10, 2}, {11, 5}, {6, 3}, {4, 7}, {8, 9}},
                       {{10, 6}, {11, 9}, {5, 0}, {3, 4}, {7, 8}, {2, 1}},
                       {{10, 9}, {11, 8}, {2, 0}, {3, 4}, {6, 7}, {5, 1}}));
    out.push_back(make("carvalho10", generate("carvalho10"),
                       {{0, 2}, {1, 4}, {3, 5}, {6, 7}, {8, 9}},
                       {{0, 1}, {2, 8}, {3, 9}, {4, 6}, {5, 7}},
                       {{0, 3}, {2, 9}, {1, 8}, {4, 6}, {5, 7}}));
    return out;
}

}  // namespace tripm::fixture
