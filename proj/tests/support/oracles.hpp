#pragma once

// Brute-force reference computations used only by tests. Each one works from
// the definition (subset enumeration, permutations) and shares no code with
// the search routines it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "tripm/graph.hpp"
#include "tripm/random.hpp"

namespace tripm::oracle {

inline bool edges_form_matching(const Graph& g, const std::vector<EdgeId>& ids) {
    std::vector<char> used(g.vertex_count(), 0);
    for (auto id : ids) {
        const auto& e = g.edge(id);
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = 1;
    }
    return true;
}

/// Calls `f` with every k-subset of 0..m-1 in lexicographic order.
inline void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<EdgeId>&)>& f) {
    if (k > m) return;
    std::vector<EdgeId> idx(k);
    std::iota(idx.begin(), idx.end(), EdgeId{0});
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Largest matching size over every matching of the graph: each vertex in
/// turn is either left unmatched or paired with a later free neighbour.
inline std::size_t max_matching_size(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> used(n, 0);
    std::size_t best = 0;
    std::function<void(VertexId, std::size_t)> go = [&](VertexId v, std::size_t size) {
        while (v < n && used[v]) ++v;
        if (v >= n) {
            best = std::max(best, size);
            return;
        }
        used[v] = 1;
        go(v + 1, size);
        for (auto [w, e] : g.incident(v)) {
            if (used[w]) continue;
            used[w] = 1;
            go(v + 1, size + 1);
            used[w] = 0;
        }
        used[v] = 0;
    };
    go(0, 0);
    return best;
}

/// Every perfect matching as a sorted id list.
inline std::vector<std::vector<EdgeId>> perfect_matchings(const Graph& g) {
    std::vector<std::vector<EdgeId>> out;
    if (g.vertex_count() % 2) return out;
    for_each_subset(g.edge_count(), g.vertex_count() / 2, [&](const std::vector<EdgeId>& s) {
        if (edges_form_matching(g, s)) out.push_back(s);
    });
    return out;
}

/// Every 2-factor as a sorted id list.
inline std::vector<std::vector<EdgeId>> two_factors(const Graph& g) {
    std::vector<std::vector<EdgeId>> out;
    for_each_subset(g.edge_count(), g.vertex_count(), [&](const std::vector<EdgeId>& s) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (auto id : s) {
            ++deg[g.edge(id).u];
            ++deg[g.edge(id).v];
        }
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) out.push_back(s);
    });
    return out;
}

/// Cycle lengths of a 2-factor.
inline std::vector<std::size_t> cycle_lengths(const Graph& g, const std::vector<EdgeId>& factor) {
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.vertex_count());
    for (auto id : factor) {
        adj[g.edge(id).u].push_back({g.edge(id).v, id});
        adj[g.edge(id).v].push_back({g.edge(id).u, id});
    }
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> lengths;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        VertexId v = s;
        EdgeId came = static_cast<EdgeId>(-1);
        do {
            seen[v] = 1;
            auto next = adj[v][0].second == came ? adj[v][1] : adj[v][0];
            came = next.second;
            v = next.first;
            ++len;
        } while (v != s);
        lengths.push_back(len);
    }
    return lengths;
}

/// Three perfect matchings with empty common intersection (repetition allowed).
inline bool admissible(const Graph& g) {
    auto pms = perfect_matchings(g);
    const std::size_t k = pms.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            for (std::size_t l = j; l < k; ++l) {
                bool common = false;
                for (auto id : pms[i])
                    if (std::binary_search(pms[j].begin(), pms[j].end(), id) &&
                        std::binary_search(pms[l].begin(), pms[l].end(), id))
                        common = true;
                if (!common) return true;
            }
    return false;
}

/// A cubic graph is 3-edge-colourable iff three pairwise disjoint perfect
/// matchings cover E.
inline bool three_edge_colourable(const Graph& g) {
    auto pms = perfect_matchings(g);
    for (std::size_t i = 0; i < pms.size(); ++i)
        for (std::size_t j = i + 1; j < pms.size(); ++j)
            for (std::size_t l = j + 1; l < pms.size(); ++l) {
                std::vector<EdgeId> all;
                for (auto* p : {&pms[i], &pms[j], &pms[l]}) all.insert(all.end(), p->begin(), p->end());
                std::sort(all.begin(), all.end());
                if (all.size() == g.edge_count() && std::adjacent_find(all.begin(), all.end()) == all.end())
                    return true;
            }
    return false;
}

/// Hamilton cycle by trying every vertex permutation that starts at 0.
inline bool hamiltonian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 3) return false;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = adj[perm[i]][perm[(i + 1) % n]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

/// Connected G(n, p)-style random graph, seeded; p in percent.
inline Graph random_graph(std::size_t n, int p_percent, Rng& rng) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (static_cast<int>(rng.below(100)) < p_percent) e.emplace_back(i, j);
    return Graph(n, e);
}

}  // namespace tripm::oracle
