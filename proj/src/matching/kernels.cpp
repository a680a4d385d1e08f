#include "tripm/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tripm {

namespace {

EdgeSet without_vertex(const Graph& g, EdgeSet allowed, VertexId v) {
    for (auto [w, e] : g.incident(v)) allowed.erase(e);
    return allowed;
}

std::size_t deletion_number(const Graph& g, const EdgeSet& allowed, VertexId v) {
    return matching_number(g, without_vertex(g, allowed, v));
}

std::optional<Matching> forced_one(const Graph& g, EdgeId e) {
    EdgeSet forced(g.edge_count());
    forced.insert(e);
    return perfect_matching_with_forced(g, forced, EdgeSet(g.edge_count()));
}

char deletion_perfect(const Graph& g, const EdgeSet& inside, std::size_t scope_size, VertexId v) {
    return static_cast<char>(2 * matching_number(g, without_vertex(g, inside, v)) + 1 == scope_size);
}

}  // namespace

Exec default_exec() {
#ifdef _OPENMP
    return Exec::parallel;
#else
    return Exec::serial;
#endif
}

std::vector<std::size_t> deletion_matching_numbers(const Graph& g, const EdgeSet& allowed, Exec exec) {
    const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
    std::vector<std::size_t> out(g.vertex_count());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t v = 0; v < n; ++v) out[v] = deletion_number(g, allowed, static_cast<VertexId>(v));
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t v = 0; v < n; ++v) out[v] = deletion_number(g, allowed, static_cast<VertexId>(v));
    return out;
}

std::vector<std::optional<Matching>> forced_edge_matchings(const Graph& g, Exec exec) {
    const auto m = static_cast<std::ptrdiff_t>(g.edge_count());
    std::vector<std::optional<Matching>> out(g.edge_count());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t e = 0; e < m; ++e) out[e] = forced_one(g, static_cast<EdgeId>(e));
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t e = 0; e < m; ++e) out[e] = forced_one(g, static_cast<EdgeId>(e));
    return out;
}

std::vector<char> deletion_perfect_flags(const Graph& g, const VertexSet& scope, Exec exec) {
    const auto members = scope.ids();
    const EdgeSet inside = g.induced_edges(scope);
    const auto k = static_cast<std::ptrdiff_t>(members.size());
    std::vector<char> out(members.size(), 0);
    if (exec == Exec::serial) {
        for (std::ptrdiff_t i = 0; i < k; ++i) out[i] = deletion_perfect(g, inside, members.size(), members[i]);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < k; ++i) out[i] = deletion_perfect(g, inside, members.size(), members[i]);
    return out;
}

}  // namespace tripm
