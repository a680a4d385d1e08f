#include "tripm/skeleton.hpp"

#include <algorithm>
#include <numeric>

namespace tripm {

std::string_view to_string(SkeletonReject r) {
    switch (r) {
        case SkeletonReject::none: return "none";
        case SkeletonReject::bad_degree: return "bad_degree";
        case SkeletonReject::even_chain: return "even_chain";
        case SkeletonReject::loop_chain: return "loop_chain";
        case SkeletonReject::isolated_cycle: return "isolated_cycle";
        case SkeletonReject::odd_cycle: return "odd_cycle";
    }
    return "?";
}

namespace {

// The spanning edge at a degree-2 vertex other than `came_by`.
EdgeId next_edge(const Graph& g, const EdgeSet& spanning, VertexId at, EdgeId came_by) {
    for (auto inc : g.incident(at))
        if (spanning.contains(inc.edge) && inc.edge != came_by) return inc.edge;
    return came_by;  // unreachable for degree 2
}

}  // namespace

SkeletonExtraction extract_skeleton(const Graph& g, const EdgeSet& spanning, bool allow_cycles) {
    SkeletonExtraction out;
    const std::size_t n = g.vertex_count();
    if (spanning.universe() != g.edge_count())
        throw std::invalid_argument("spanning set has the wrong universe");

    auto deg = g.degrees_within(spanning);
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] != 2 && deg[v] != 3) out.vertices.push_back(v);
    if (!out.vertices.empty()) {
        out.reason = SkeletonReject::bad_degree;
        return out;
    }

    std::vector<VertexId> branch;
    std::vector<VertexId> skel_id(n, 0);
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] == 3) {
            skel_id[v] = static_cast<VertexId>(branch.size());
            branch.push_back(v);
        }

    std::vector<bool> used(g.edge_count(), false);
    std::vector<std::pair<VertexId, VertexId>> ends;
    std::vector<std::vector<EdgeId>> chains;
    // Branch vertices are visited in increasing order, so each chain is first
    // met from its lower end.
    for (VertexId b : branch) {
        for (auto inc : g.incident(b)) {
            if (!spanning.contains(inc.edge) || used[inc.edge]) continue;
            std::vector<EdgeId> chain{inc.edge};
            used[inc.edge] = true;
            VertexId at = inc.neighbor;
            EdgeId e = inc.edge;
            while (deg[at] == 2) {
                e = next_edge(g, spanning, at, e);
                used[e] = true;
                chain.push_back(e);
                at = g.edge(e).other(at);
            }
            if (at == b) {
                out.reason = SkeletonReject::loop_chain;
                out.edges = chain;
                return out;
            }
            if (chain.size() % 2 == 0) {
                out.reason = SkeletonReject::even_chain;
                out.edges = chain;
                return out;
            }
            ends.emplace_back(skel_id[b], skel_id[at]);
            chains.push_back(std::move(chain));
        }
    }

    std::vector<std::vector<EdgeId>> cycles;
    for (VertexId s = 0; s < n; ++s) {
        EdgeId first = 0;
        bool fresh = false;
        for (auto inc : g.incident(s))
            if (spanning.contains(inc.edge)) {
                fresh = !used[inc.edge];
                first = inc.edge;
                break;
            }
        if (!fresh) continue;
        std::vector<EdgeId> cycle;
        VertexId at = s;
        EdgeId e = first;
        while (true) {
            used[e] = true;
            cycle.push_back(e);
            at = g.edge(e).other(at);
            if (at == s) break;
            e = next_edge(g, spanning, at, e);
        }
        if (!allow_cycles || cycle.size() % 2) {
            out.reason = allow_cycles ? SkeletonReject::odd_cycle : SkeletonReject::isolated_cycle;
            out.edges = cycle;
            return out;
        }
        cycles.push_back(std::move(cycle));
    }

    // Reorder chains the way Graph numbers the skeleton edges.
    std::vector<std::size_t> order(chains.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto kx = std::minmax(ends[x].first, ends[x].second);
        auto ky = std::minmax(ends[y].first, ends[y].second);
        return kx < ky;
    });
    SkeletonCertificate c;
    c.spanning = spanning;
    c.skeleton = Graph(branch.size(), ends);
    c.branch_vertices = std::move(branch);
    for (auto i : order) c.chain_map.push_back(std::move(chains[i]));
    c.even_cycles = std::move(cycles);
    out.certificate = std::move(c);
    return out;
}

TripleCertificate lift_triple(const Graph& g, const SkeletonCertificate& c) {
    const Graph& h = c.skeleton;
    if (c.chain_map.size() != h.edge_count() || c.coloring.size() != h.edge_count())
        throw MalformedCertificate("chain map or colouring does not match the skeleton");

    TripleCertificate t{g.empty_edge_set(), g.empty_edge_set(), g.empty_edge_set()};
    auto put = [&](EdgeId e, ColorSet s) {
        if (e >= g.edge_count()) throw MalformedCertificate("edge id out of range");
        if (s & color_bit(1)) t.m1.insert(e);
        if (s & color_bit(2)) t.m2.insert(e);
        if (s & color_bit(3)) t.m3.insert(e);
    };
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        ColorSet s = c.coloring[i];
        if (s == 0 || s == kAllColors || (s & ~kAllColors))
            throw MalformedCertificate("colour set must be a proper nonempty subset of {1,2,3}");
        const auto& chain = c.chain_map[i];
        if (chain.size() % 2 == 0) throw MalformedCertificate("chain length is not odd");
        for (std::size_t k = 0; k < chain.size(); ++k)
            put(chain[k], k % 2 ? static_cast<ColorSet>(kAllColors & ~s) : s);
    }
    for (const auto& cycle : c.even_cycles) {
        if (cycle.size() % 2) throw MalformedCertificate("cycle component is odd");
        for (std::size_t k = 0; k < cycle.size(); ++k)
            put(cycle[k], k % 2 ? static_cast<ColorSet>(color_bit(2) | color_bit(3)) : color_bit(1));
    }
    return t;
}

}  // namespace tripm
