#include "tripm/hamilton.hpp"

namespace tripm {

namespace {

struct HamiltonSearch {
    const Graph& g;
    SearchBudget& budget;
    std::vector<bool> on_path;
    std::vector<EdgeId> path;
    bool budget_hit = false;

    // Each vertex off the path still needs two distinct neighbours that are
    // off the path or are the path's ends.
    bool viable(VertexId head) const {
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            if (on_path[x]) continue;
            int seen = 0;
            VertexId prev = x;
            for (auto inc : g.incident(x)) {
                VertexId y = inc.neighbor;
                if (y == prev) continue;  // parallel edges are adjacent in the list
                prev = y;
                if (!on_path[y] || y == head || y == 0) ++seen;
                if (seen >= 2) break;
            }
            if (seen < 2) return false;
        }
        return true;
    }

    bool extend(VertexId head, std::size_t visited) {
        if (!budget.spend()) {
            budget_hit = true;
            return false;
        }
        if (visited == g.vertex_count()) {
            for (auto inc : g.incident(head))
                if (inc.neighbor == 0) {
                    path.push_back(inc.edge);
                    return true;
                }
            return false;
        }
        for (auto inc : g.incident(head)) {
            VertexId y = inc.neighbor;
            if (on_path[y]) continue;
            on_path[y] = true;
            path.push_back(inc.edge);
            if (viable(y) && extend(y, visited + 1)) return true;
            path.pop_back();
            on_path[y] = false;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

SearchOutcome<std::vector<EdgeId>> hamilton_cycle(const Graph& g, SearchBudget& budget) {
    SearchOutcome<std::vector<EdgeId>> out;
    const std::size_t n = g.vertex_count();
    std::uint64_t before = budget.used();
    if (n < 2) {
        out.status = SearchStatus::exhausted;
        return out;
    }
    if (n == 2) {
        // Only a pair of parallel edges closes a cycle on two vertices.
        auto inc = g.incident(0);
        if (!budget.spend()) {
            out.status = SearchStatus::budget_exhausted;
        } else if (inc.size() >= 2) {
            out.status = SearchStatus::found;
            out.value = std::vector<EdgeId>{inc[0].edge, inc[1].edge};
        } else {
            out.status = SearchStatus::exhausted;
        }
        out.nodes = budget.used() - before;
        return out;
    }
    HamiltonSearch s{g, budget, std::vector<bool>(n, false), {}};
    s.on_path[0] = true;
    bool ok = s.viable(0) && s.extend(0, 1);
    out.nodes = budget.used() - before;
    if (ok) {
        out.status = SearchStatus::found;
        out.value = std::move(s.path);
    } else {
        out.status = s.budget_hit ? SearchStatus::budget_exhausted : SearchStatus::exhausted;
    }
    return out;
}

}  // namespace tripm
