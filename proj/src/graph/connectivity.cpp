#include "tripm/connectivity.hpp"

#include <stdexcept>
#include <vector>

namespace tripm {

namespace {

bool connected_without(const Graph& g, const std::vector<char>& removed) {
    const std::size_t n = g.vertex_count();
    VertexId start = 0;
    std::size_t alive = 0;
    for (VertexId v = 0; v < n; ++v)
        if (!removed[v]) {
            if (alive == 0) start = v;
            ++alive;
        }
    if (alive == 0) return true;

    std::vector<char> seen(removed);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++reached;
        for (auto [w, e] : g.incident(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    return reached == alive;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("is_k_connected supports k in 1..3");
    const std::size_t n = g.vertex_count();
    if (n <= static_cast<std::size_t>(k)) return false;

    std::vector<char> removed(n, 0);
    if (!connected_without(g, removed)) return false;
    if (k == 1) return true;

    for (VertexId a = 0; a < n; ++a) {
        removed[a] = 1;
        if (!connected_without(g, removed)) return false;
        if (k == 3) {
            for (VertexId b = a + 1; b < n; ++b) {
                removed[b] = 1;
                bool ok = connected_without(g, removed);
                removed[b] = 0;
                if (!ok) return false;
            }
        }
        removed[a] = 0;
    }
    return true;
}

}  // namespace tripm
