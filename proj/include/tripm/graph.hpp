#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tripm/id_set.hpp"

namespace tripm {

struct Edge {
    VertexId u;
    VertexId v;  // u < v always

    VertexId other(VertexId w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

/// Immutable loopless undirected multigraph.
///
/// Edge ids are the positions of the edges after a stable lexicographic sort
/// of the canonical (min, max) endpoint pairs, so parallel edges keep their
/// insertion order. Incidence lists are in edge-id order.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on loops or endpoints >= n.
    Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);
    Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges)
        : Graph(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Incidence> incident(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    bool is_simple() const;
    bool is_regular(std::size_t k) const;
    bool is_connected() const;

    EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }
    VertexSet empty_vertex_set() const { return VertexSet(n_); }

    /// Edges with both endpoints in `scope`.
    EdgeSet induced_edges(const VertexSet& scope) const;
    /// Vertices touched by `edges`.
    VertexSet touched(const EdgeSet& edges) const;
    /// Degree of every vertex counting only edges in `edges`.
    std::vector<std::size_t> degrees_within(const EdgeSet& edges) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Incidence> adjacency_;
};

/// A graph built from a subset of another graph's edges, with id maps back
/// to the parent. Vertex relabelling is monotone, so edge order is preserved.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> to_parent_vertex;
    std::vector<EdgeId> to_parent_edge;
};

/// Keeps every vertex (ids unchanged) and only the edges in `keep`.
Subgraph spanning_subgraph(const Graph& g, const EdgeSet& keep);
/// Induced subgraph on `scope`, vertices renumbered in increasing order.
Subgraph induced_subgraph(const Graph& g, const VertexSet& scope);

/// Connected components as vertex lists; components ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g, const EdgeSet& edges,
                                                        const VertexSet& scope);

}  // namespace tripm
