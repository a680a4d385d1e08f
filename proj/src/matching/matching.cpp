#include "tripm/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "tripm/kernels.hpp"

namespace tripm {

Matching::Matching(const Graph& g, EdgeSet edges) : edges_(std::move(edges)) {
    if (edges_.universe() != g.edge_count() || !is_matching(g, edges_))
        throw std::invalid_argument("edge set is not a matching of the graph");
    perfect_ = 2 * edges_.count() == g.vertex_count();
}

bool is_matching(const Graph& g, const EdgeSet& edges) {
    if (edges.universe() != g.edge_count()) return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (auto id : edges.ids()) {
        const auto& e = g.edge(id);
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = 1;
    }
    return true;
}

bool is_perfect_matching(const Graph& g, const EdgeSet& edges) {
    return is_matching(g, edges) && 2 * edges.count() == g.vertex_count();
}

namespace {

constexpr int kNone = -1;

// Edmonds' blossom algorithm, O(n^3) BFS formulation.
class Blossom {
public:
    Blossom(const Graph& g, const EdgeSet* allowed)
        : g_(g), n_(static_cast<int>(g.vertex_count())), allowed_(allowed),
          match_(n_, kNone), parent_(n_), base_(n_), queue_(n_), used_(n_), blossom_(n_), lca_seen_(n_) {}

    std::vector<int> run() {
        greedy();
        for (int root = 0; root < n_; ++root) {
            if (match_[root] != kNone) continue;
            int v = find_path(root);
            while (v != kNone) {
                int pv = parent_[v];
                int ppv = match_[pv];
                match_[v] = pv;
                match_[pv] = v;
                v = ppv;
            }
        }
        return match_;
    }

private:
    bool usable(EdgeId e) const { return allowed_ == nullptr || allowed_->contains(e); }

    void greedy() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != kNone) continue;
            for (auto [w, e] : g_.incident(static_cast<VertexId>(v))) {
                if (!usable(e) || match_[w] != kNone) continue;
                match_[v] = static_cast<int>(w);
                match_[w] = v;
                break;
            }
        }
    }

    int lca(int a, int b) {
        std::fill(lca_seen_.begin(), lca_seen_.end(), 0);
        while (true) {
            a = base_[a];
            lca_seen_[a] = 1;
            if (match_[a] == kNone) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (lca_seen_[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNone);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        int head = 0, tail = 0;
        queue_[tail++] = root;
        while (head < tail) {
            int v = queue_[head++];
            for (auto [w, e] : g_.incident(static_cast<VertexId>(v))) {
                if (!usable(e)) continue;
                int to = static_cast<int>(w);
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!blossom_[base_[i]]) continue;
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue_[tail++] = i;
                        }
                    }
                } else if (parent_[to] == kNone) {
                    parent_[to] = v;
                    if (match_[to] == kNone) return to;
                    used_[match_[to]] = 1;
                    queue_[tail++] = match_[to];
                }
            }
        }
        return kNone;
    }

    const Graph& g_;
    int n_;
    const EdgeSet* allowed_;
    std::vector<int> match_, parent_, base_, queue_;
    std::vector<char> used_, blossom_, lca_seen_;
};

EdgeSet mate_to_edges(const Graph& g, const std::vector<int>& mate, const EdgeSet* allowed) {
    EdgeSet out(g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (mate[v] == kNone || static_cast<int>(v) > mate[v]) continue;
        for (auto [w, e] : g.incident(v)) {
            if (static_cast<int>(w) == mate[v] && (allowed == nullptr || allowed->contains(e))) {
                out.insert(e);
                break;
            }
        }
    }
    return out;
}

}  // namespace

Matching max_matching(const Graph& g) {
    return Matching(g, mate_to_edges(g, Blossom(g, nullptr).run(), nullptr));
}

Matching max_matching(const Graph& g, const EdgeSet& allowed) {
    if (allowed.universe() != g.edge_count()) throw std::invalid_argument("edge mask size mismatch");
    return Matching(g, mate_to_edges(g, Blossom(g, &allowed).run(), &allowed));
}

std::size_t matching_number(const Graph& g, const EdgeSet& allowed) {
    auto mate = Blossom(g, &allowed).run();
    return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(), [](int m) { return m != kNone; })) / 2;
}

std::optional<Matching> perfect_matching_with_forced(const Graph& g, const EdgeSet& forced,
                                                     const EdgeSet& forbidden) {
    if (forced.universe() != g.edge_count() || forbidden.universe() != g.edge_count())
        throw std::invalid_argument("edge set size mismatch");
    if (!is_matching(g, forced)) throw std::invalid_argument("forced edges do not form a matching");
    if (forced.intersects(forbidden)) throw std::invalid_argument("forced and forbidden edges overlap");
    if (g.vertex_count() % 2 != 0) return std::nullopt;

    VertexSet covered = g.touched(forced);
    EdgeSet allowed(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        if (!forbidden.contains(id) && !covered.contains(e.u) && !covered.contains(e.v)) allowed.insert(id);
    }
    EdgeSet rest = max_matching(g, allowed).edges();
    if (2 * (rest.count() + forced.count()) != g.vertex_count()) return std::nullopt;
    return Matching(g, rest | forced);
}

namespace {

struct Enumerator {
    const Graph& g;
    SearchBudget& budget;
    const MatchingVisitor& visit;
    const EdgeSet* forbidden;
    std::vector<char> covered;
    EdgeSet chosen;
    EnumerationResult result;

    // false = stop unwinding
    bool dfs(VertexId from) {
        if (!budget.spend()) {
            result.status = EnumerationStatus::budget_exhausted;
            return false;
        }
        ++result.nodes;
        VertexId v = from;
        while (v < g.vertex_count() && covered[v]) ++v;
        if (v == g.vertex_count()) {
            ++result.emitted;
            if (!visit(Matching(g, chosen))) {
                result.status = EnumerationStatus::stopped;
                return false;
            }
            return true;
        }
        covered[v] = 1;
        for (auto [w, e] : g.incident(v)) {
            if (covered[w] || (forbidden && forbidden->contains(e))) continue;
            covered[w] = 1;
            chosen.insert(e);
            bool go_on = dfs(v + 1);
            chosen.erase(e);
            covered[w] = 0;
            if (!go_on) {
                covered[v] = 0;
                return false;
            }
        }
        covered[v] = 0;
        return true;
    }
};

}  // namespace

EnumerationResult enumerate_perfect_matchings(const Graph& g, SearchBudget& budget,
                                              const MatchingVisitor& visit, const EdgeSet* forbidden) {
    if (g.vertex_count() % 2 != 0) return {};
    Enumerator en{g, budget, visit, forbidden, std::vector<char>(g.vertex_count(), 0),
                  EdgeSet(g.edge_count()), {}};
    en.dfs(0);
    return en.result;
}

MatchingCoverReport is_matching_covered(const Graph& g) {
    MatchingCoverReport report;
    report.connected = g.vertex_count() > 0 && g.is_connected();
    report.witness = forced_edge_matchings(g);
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (!report.witness[id]) report.uncovered.push_back(id);
    report.matching_covered = report.connected && report.uncovered.empty() && g.vertex_count() % 2 == 0;
    return report;
}

bool is_factor_critical(const Graph& g, const VertexSet& scope) {
    const std::size_t size = scope.count();
    if (size == 0 || size % 2 == 0) return false;
    auto flags = deletion_perfect_flags(g, scope);
    return std::all_of(flags.begin(), flags.end(), [](char f) { return f != 0; });
}

}  // namespace tripm
