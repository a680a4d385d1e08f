#include "tripm/verify.hpp"

#include <sstream>

namespace tripm {

std::string VerificationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        const auto& v = violations[i];
        if (i) out << "; ";
        out << v.condition;
        if (!v.edges.empty()) {
            out << " edges";
            for (auto e : v.edges) out << ' ' << e;
        }
        if (!v.vertices.empty()) {
            out << " vertices";
            for (auto x : v.vertices) out << ' ' << x;
        }
    }
    return out.str();
}

namespace {

bool check_universe(const Graph& g, const EdgeSet& s, const char* name, VerificationReport& r) {
    if (s.universe() == g.edge_count()) return true;
    r.violations.push_back({std::string(name) + " has the wrong edge universe", {}, {}});
    return false;
}

void check_perfect(const Graph& g, const EdgeSet& s, const char* name, VerificationReport& r) {
    auto deg = g.degrees_within(s);
    std::vector<VertexId> bad;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (deg[v] != 1) bad.push_back(v);
    if (!bad.empty())
        r.violations.push_back({std::string(name) + " is not a perfect matching", {}, bad});
}

}  // namespace

VerificationReport verify_triple(const Graph& g, const TripleCertificate& c) {
    VerificationReport r;
    bool sized = check_universe(g, c.m1, "m1", r);
    sized = check_universe(g, c.m2, "m2", r) && sized;
    sized = check_universe(g, c.m3, "m3", r) && sized;
    if (!sized) return r;
    check_perfect(g, c.m1, "m1", r);
    check_perfect(g, c.m2, "m2", r);
    check_perfect(g, c.m3, "m3", r);
    auto common = c.m1 & c.m2 & c.m3;
    if (!common.empty()) r.violations.push_back({"common intersection is not empty", common.ids(), {}});
    return r;
}

VerificationReport verify_even_two_factor(const Graph& g, const EvenTwoFactorCertificate& c) {
    VerificationReport r;
    if (!check_universe(g, c.factor, "factor", r)) return r;
    auto deg = g.degrees_within(c.factor);
    std::vector<VertexId> bad;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (deg[v] != 2) bad.push_back(v);
    if (!bad.empty()) {
        r.violations.push_back({"factor degree is not 2", {}, bad});
        return r;
    }
    auto all = VertexSet::full(g.vertex_count());
    for (const auto& comp : connected_components(g, c.factor, all))
        if (comp.size() % 2) r.violations.push_back({"odd cycle", {}, comp});
    return r;
}

namespace {

// Walks `path` from `start`; returns the end vertex or nullopt if the edges
// do not form a walk. Internal vertices are appended to `inner`.
std::optional<VertexId> walk(const Graph& g, VertexId start, const std::vector<EdgeId>& path,
                             std::vector<VertexId>& inner) {
    VertexId at = start;
    for (std::size_t i = 0; i < path.size(); ++i) {
        EdgeId e = path[i];
        if (e >= g.edge_count()) return std::nullopt;
        const Edge& ed = g.edge(e);
        if (ed.u != at && ed.v != at) return std::nullopt;
        at = ed.other(at);
        if (i + 1 < path.size()) inner.push_back(at);
    }
    return at;
}

}  // namespace

VerificationReport verify_skeleton(const Graph& g, const SkeletonCertificate& c) {
    VerificationReport r;
    if (!check_universe(g, c.spanning, "spanning", r)) return r;
    const Graph& h = c.skeleton;
    const std::size_t n = g.vertex_count();

    if (h.vertex_count() != c.branch_vertices.size()) {
        r.violations.push_back({"skeleton size does not match branch vertices", {}, {}});
        return r;
    }
    if (c.chain_map.size() != h.edge_count() || c.coloring.size() != h.edge_count()) {
        r.violations.push_back({"chain map or colouring size does not match skeleton", {}, {}});
        return r;
    }
    for (std::size_t i = 0; i < c.branch_vertices.size(); ++i) {
        if (c.branch_vertices[i] >= n || (i && c.branch_vertices[i] <= c.branch_vertices[i - 1])) {
            r.violations.push_back({"branch vertices are not increasing host vertices", {}, {}});
            return r;
        }
    }
    if (!h.is_regular(3)) r.violations.push_back({"skeleton is not cubic", {}, {}});

    auto deg = g.degrees_within(c.spanning);
    VertexSet branch = g.empty_vertex_set();
    for (auto b : c.branch_vertices) {
        branch.insert(b);
        if (deg[b] != 3) r.violations.push_back({"branch vertex without spanning degree 3", {}, {b}});
    }

    std::vector<int> uses(g.edge_count(), 0);
    auto check_inner = [&](const std::vector<VertexId>& inner) {
        for (auto x : inner)
            if (branch.contains(x) || deg[x] != 2)
                r.violations.push_back({"chain passes through a vertex of spanning degree != 2", {}, {x}});
    };

    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        const auto& chain = c.chain_map[i];
        if (chain.empty() || chain.size() % 2 == 0) {
            r.violations.push_back({"chain length is not odd", chain, {}});
            continue;
        }
        std::vector<VertexId> inner;
        VertexId from = c.branch_vertices[h.edge(i).u];
        auto end = walk(g, from, chain, inner);
        if (!end || *end != c.branch_vertices[h.edge(i).v]) {
            r.violations.push_back({"chain is not a path between its skeleton endpoints", chain, {}});
            continue;
        }
        check_inner(inner);
        for (auto e : chain) ++uses[e];
    }

    for (const auto& cycle : c.even_cycles) {
        if (cycle.size() < 2 || cycle.size() % 2) {
            r.violations.push_back({"cycle component is not even", cycle, {}});
            continue;
        }
        if (cycle.front() >= g.edge_count()) {
            r.violations.push_back({"cycle edge out of range", cycle, {}});
            continue;
        }
        // Either endpoint of the first edge may be the start of the walk.
        const Edge& first = g.edge(cycle.front());
        bool closed = false;
        std::vector<VertexId> inner;
        for (VertexId start : {first.u, first.v}) {
            inner.clear();
            auto end = walk(g, start, cycle, inner);
            if (end && *end == start) {
                closed = true;
                inner.push_back(start);
                break;
            }
        }
        if (!closed) {
            r.violations.push_back({"cycle component is not a closed walk", cycle, {}});
            continue;
        }
        check_inner(inner);
        for (auto e : cycle) ++uses[e];
    }

    std::vector<EdgeId> missing, stray, repeated;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        bool in = c.spanning.contains(e);
        if (in && uses[e] == 0) missing.push_back(e);
        if (!in && uses[e] > 0) stray.push_back(e);
        if (uses[e] > 1) repeated.push_back(e);
    }
    if (!missing.empty()) r.violations.push_back({"spanning edge in no chain or cycle", missing, {}});
    if (!stray.empty()) r.violations.push_back({"chain edge outside the spanning set", stray, {}});
    if (!repeated.empty()) r.violations.push_back({"edge used by two chains", repeated, {}});

    std::vector<VertexId> untouched;
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] == 0) untouched.push_back(v);
    if (!untouched.empty()) r.violations.push_back({"subgraph is not spanning", {}, untouched});

    std::vector<EdgeId> bad_sets;
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        ColorSet s = c.coloring[i];
        if (s == 0 || s == kAllColors || (s & ~kAllColors)) bad_sets.push_back(i);
    }
    if (!bad_sets.empty()) {
        r.violations.push_back({"skeleton colour set is empty, full or invalid", bad_sets, {}});
        return r;
    }
    for (VertexId x = 0; x < h.vertex_count(); ++x) {
        for (int col = 1; col <= 3; ++col) {
            int hits = 0;
            for (auto inc : h.incident(x))
                if (c.coloring[inc.edge] & color_bit(col)) ++hits;
            if (hits != 1)
                r.violations.push_back({"colour " + std::to_string(col) +
                                            " is not a perfect matching of the skeleton",
                                        {}, {x}});
        }
    }
    return r;
}

}  // namespace tripm
