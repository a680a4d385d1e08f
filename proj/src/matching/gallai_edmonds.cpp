#include "tripm/gallai_edmonds.hpp"

#include <algorithm>

#include "tripm/kernels.hpp"
#include "tripm/matching.hpp"

namespace tripm {

std::size_t GallaiEdmondsDecomposition::omega_one() const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const DComponent& c) { return c.t == 1; }));
}

GallaiEdmondsDecomposition gallai_edmonds(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const EdgeSet all = EdgeSet::full(g.edge_count());
    GallaiEdmondsDecomposition dec;
    dec.d = VertexSet(n);
    dec.a = VertexSet(n);
    dec.c = VertexSet(n);
    dec.matching_number = matching_number(g, all);

    const auto without = deletion_matching_numbers(g, all);
    for (VertexId v = 0; v < n; ++v)
        if (without[v] == dec.matching_number) dec.d.insert(v);

    for (auto v : dec.d.ids())
        for (auto [w, e] : g.incident(v))
            if (!dec.d.contains(w)) dec.a.insert(w);
    for (VertexId v = 0; v < n; ++v)
        if (!dec.d.contains(v) && !dec.a.contains(v)) dec.c.insert(v);

    for (const auto& comp : connected_components(g, all, dec.d)) {
        DComponent rec{VertexSet::of(n, comp), 0};
        for (auto v : comp)
            for (auto [w, e] : g.incident(v))
                if (dec.a.contains(w)) ++rec.t;
        dec.components.push_back(std::move(rec));
    }
    return dec;
}

GallaiEdmondsReport check_gallai_edmonds(const Graph& g, const GallaiEdmondsDecomposition& dec) {
    const std::size_t n = g.vertex_count();
    GallaiEdmondsReport r;

    r.partition = !dec.d.intersects(dec.a) && !dec.d.intersects(dec.c) && !dec.a.intersects(dec.c) &&
                  (dec.d | dec.a | dec.c).count() == n;

    r.components_factor_critical = std::all_of(dec.components.begin(), dec.components.end(),
                                               [&](const DComponent& c) { return is_factor_critical(g, c.vertices); });

    const EdgeSet c_edges = g.induced_edges(dec.c);
    r.c_has_perfect_matching = 2 * matching_number(g, c_edges) == dec.c.count();

    // Bipartite graph: A vertices on one side, D-components on the other.
    const auto a_ids = dec.a.ids();
    std::vector<std::size_t> comp_of(n, dec.components.size());
    for (std::size_t i = 0; i < dec.components.size(); ++i)
        for (auto v : dec.components[i].vertices.ids()) comp_of[v] = i;
    std::vector<std::pair<VertexId, VertexId>> bip;
    for (std::size_t i = 0; i < a_ids.size(); ++i) {
        std::vector<char> seen(dec.components.size(), 0);
        for (auto [w, e] : g.incident(a_ids[i])) {
            std::size_t c = comp_of[w];
            if (c == dec.components.size() || seen[c]) continue;
            seen[c] = 1;
            bip.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(a_ids.size() + c));
        }
    }
    Graph b(a_ids.size() + dec.components.size(), bip);
    r.a_matches_distinct_components = max_matching(b).size() == a_ids.size();

    r.deficiency_identity = dec.omega() >= dec.a.count() &&
                            n - 2 * dec.matching_number == dec.omega() - dec.a.count();

    r.t_parity = true;
    if (g.is_regular(3)) {
        // Degree count: 3|D'| = 2|E(G[D'])| + t, hence t has the parity of |D'|.
        for (const auto& c : dec.components) {
            const std::size_t size = c.vertices.count();
            const std::size_t inner = g.induced_edges(c.vertices).count();
            if (3 * size != 2 * inner + c.t || c.t % 2 != size % 2) r.t_parity = false;
        }
    }
    return r;
}

}  // namespace tripm
