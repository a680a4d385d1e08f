#include "tripm/coloring.hpp"

#include <stdexcept>

namespace tripm {

namespace {

struct Colorer {
    const Graph& h;
    SearchBudget& budget;
    std::vector<ColorSet> color;
    std::vector<EdgeId> order;
    bool budget_hit = false;

    ColorSet blocked(EdgeId e) const {
        ColorSet b = 0;
        for (VertexId x : {h.edge(e).u, h.edge(e).v})
            for (auto inc : h.incident(x))
                if (inc.edge != e) b |= color[inc.edge];
        return b;
    }

    bool assign(std::size_t k) {
        if (k == order.size()) return true;
        if (!budget.spend()) {
            budget_hit = true;
            return false;
        }
        EdgeId e = order[k];
        ColorSet b = blocked(e);
        int first = k == 0 ? 1 : 3;  // symmetry break: first edge of a component gets colour 1
        for (int col = 1; col <= first; ++col) {
            if (b & color_bit(col)) continue;
            color[e] = color_bit(col);
            if (assign(k + 1)) return true;
            color[e] = 0;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

SearchOutcome<std::vector<ColorSet>> color_cubic_3(const Graph& h, SearchBudget& budget) {
    if (!h.is_regular(3)) throw std::invalid_argument("colouring needs a cubic graph");
    SearchOutcome<std::vector<ColorSet>> out;
    std::uint64_t before = budget.used();
    std::vector<ColorSet> color(h.edge_count(), 0);

    auto all = VertexSet::full(h.vertex_count());
    auto edges = EdgeSet::full(h.edge_count());
    for (const auto& comp : connected_components(h, edges, all)) {
        VertexSet scope = VertexSet::of(h.vertex_count(), comp);
        Colorer c{h, budget, std::move(color), h.induced_edges(scope).ids()};
        bool ok = c.assign(0);
        color = std::move(c.color);
        if (!ok) {
            out.status = c.budget_hit ? SearchStatus::budget_exhausted : SearchStatus::exhausted;
            out.nodes = budget.used() - before;
            return out;
        }
    }
    out.status = SearchStatus::found;
    out.value = std::move(color);
    out.nodes = budget.used() - before;
    return out;
}

}  // namespace tripm
