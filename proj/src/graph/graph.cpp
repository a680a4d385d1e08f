#include "tripm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tripm {

Graph::Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) : n_(n) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + " " +
                                        std::to_string(b));
        if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
        edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::stable_sort(edges_.begin(), edges_.end());

    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto& e = edges_[id];
        adjacency_[fill[e.u]++] = {e.v, id};
        adjacency_[fill[e.v]++] = {e.u, id};
    }
}

bool Graph::is_simple() const {
    return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

bool Graph::is_regular(std::size_t k) const {
    for (VertexId v = 0; v < n_; ++v)
        if (degree(v) != k) return false;
    return true;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    auto comps = connected_components(*this, EdgeSet::full(edges_.size()), VertexSet::full(n_));
    return comps.size() == 1;
}

EdgeSet Graph::induced_edges(const VertexSet& scope) const {
    EdgeSet out(edges_.size());
    for (EdgeId id = 0; id < edges_.size(); ++id)
        if (scope.contains(edges_[id].u) && scope.contains(edges_[id].v)) out.insert(id);
    return out;
}

VertexSet Graph::touched(const EdgeSet& edges) const {
    VertexSet out(n_);
    for (auto id : edges.ids()) {
        out.insert(edges_[id].u);
        out.insert(edges_[id].v);
    }
    return out;
}

std::vector<std::size_t> Graph::degrees_within(const EdgeSet& edges) const {
    std::vector<std::size_t> deg(n_, 0);
    for (auto id : edges.ids()) {
        ++deg[edges_[id].u];
        ++deg[edges_[id].v];
    }
    return deg;
}

Subgraph spanning_subgraph(const Graph& g, const EdgeSet& keep) {
    Subgraph s;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (auto id : keep.ids()) {
        pairs.emplace_back(g.edge(id).u, g.edge(id).v);
        s.to_parent_edge.push_back(id);
    }
    s.graph = Graph(g.vertex_count(), pairs);
    s.to_parent_vertex.resize(g.vertex_count());
    std::iota(s.to_parent_vertex.begin(), s.to_parent_vertex.end(), VertexId{0});
    return s;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& scope) {
    Subgraph s;
    std::vector<VertexId> local(g.vertex_count(), 0);
    for (auto v : scope.ids()) {
        local[v] = static_cast<VertexId>(s.to_parent_vertex.size());
        s.to_parent_vertex.push_back(v);
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        if (scope.contains(e.u) && scope.contains(e.v)) {
            pairs.emplace_back(local[e.u], local[e.v]);
            s.to_parent_edge.push_back(id);
        }
    }
    s.graph = Graph(s.to_parent_vertex.size(), pairs);
    return s;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g, const EdgeSet& edges,
                                                        const VertexSet& scope) {
    std::vector<std::vector<VertexId>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s] || !scope.contains(s)) continue;
        comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (auto [w, e] : g.incident(v)) {
                if (seen[w] || !scope.contains(w) || !edges.contains(e)) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

}  // namespace tripm
