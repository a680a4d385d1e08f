#include "tripm/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "tripm/random.hpp"

namespace tripm {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

Graph from_list(std::size_t n, const EdgeList& edges) { return Graph(n, edges); }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Graph petersen() {
    EdgeList e;
    for (VertexId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return from_list(10, e);
}

Graph cube() {
    EdgeList e;
    for (VertexId v = 0; v < 8; ++v)
        for (VertexId bit = 1; bit < 8; bit <<= 1)
            if (v < (v ^ bit)) e.emplace_back(v, v ^ bit);
    return from_list(8, e);
}

Graph octahedron() {
    EdgeList e;
    for (VertexId i = 0; i < 6; ++i)
        for (VertexId j = i + 1; j < 6; ++j)
            if (j != i + 3) e.emplace_back(i, j);
    return from_list(6, e);
}

Graph icosahedron() {
    return from_list(12, {{10, 11}, {6, 7},  {7, 8},  {2, 3},  {3, 4},  {4, 5}, {0, 1},  {6, 2},
                          {8, 5},   {10, 0}, {10, 2}, {10, 6}, {10, 9}, {11, 0}, {11, 5}, {11, 8},
                          {11, 9},  {9, 7},  {2, 0},  {2, 1},  {5, 0},  {5, 1}, {6, 3},  {3, 1},
                          {8, 4},   {4, 1},  {3, 7},  {4, 7},  {6, 9},  {8, 9}});
}

Graph dodecahedron() {
    EdgeList e;
    for (VertexId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, 5 + 2 * i);
        e.emplace_back(6 + 2 * i, 15 + i);
        e.emplace_back(15 + i, 15 + (i + 1) % 5);
    }
    for (VertexId i = 0; i < 10; ++i) e.emplace_back(5 + i, 5 + (i + 1) % 10);
    return from_list(20, e);
}

Graph carvalho10() {
    return from_list(10, {{8, 9}, {6, 7}, {0, 2}, {0, 1}, {0, 3}, {1, 4}, {1, 6}, {1, 8}, {2, 8},
                          {4, 6}, {5, 7}, {3, 5}, {3, 7}, {2, 9}, {3, 9}, {2, 4}, {2, 5}});
}

Graph no_pm_cubic16() {
    EdgeList e;
    for (VertexId k = 0; k < 3; ++k) {
        const VertexId a = 5 * k, b = a + 1, c = a + 2, w = a + 3, y = a + 4;
        for (auto [p, q] : EdgeList{{a, b}, {a, w}, {a, c}, {b, c}, {c, w}, {b, y}, {w, y}})
            e.emplace_back(p, q);
        e.emplace_back(y, 15);
    }
    return from_list(16, e);
}

}  // namespace

Graph complete_graph(std::size_t n) {
    EdgeList e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_list(n, e);
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle: n must be >= 3");
    EdgeList e;
    for (VertexId i = 0; i < n; ++i) e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return from_list(n, e);
}

Graph path_graph(std::size_t n) {
    require(n >= 1, "path: n must be >= 1");
    EdgeList e;
    for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_list(n, e);
}

Graph wheel_graph(std::size_t rim) {
    require(rim >= 3, "wheel: rim size must be >= 3");
    EdgeList e;
    const auto hub = static_cast<VertexId>(rim);
    for (VertexId i = 0; i < rim; ++i) {
        e.emplace_back(i, static_cast<VertexId>((i + 1) % rim));
        e.emplace_back(i, hub);
    }
    return from_list(rim + 1, e);
}

Graph double_wheel_graph(std::size_t rim) {
    require(rim >= 4, "double_wheel: rim size must be >= 4");
    EdgeList e;
    const auto h1 = static_cast<VertexId>(rim);
    const auto h2 = static_cast<VertexId>(rim + 1);
    const std::size_t first = (rim + 1) / 2;
    for (VertexId i = 0; i < rim; ++i) {
        e.emplace_back(i, static_cast<VertexId>((i + 1) % rim));
        e.emplace_back(i, i < first ? h1 : h2);
    }
    e.emplace_back(h1, h2);
    return from_list(rim + 2, e);
}

Graph halin_graph(std::uint64_t seed, std::size_t max_vertices) {
    require(max_vertices >= 4, "halin: max_vertices must be >= 4");
    Rng rng(seed);
    std::vector<std::vector<VertexId>> children{{1, 2, 3}, {}, {}, {}};
    std::vector<VertexId> leaves{1, 2, 3};
    const auto target = static_cast<std::size_t>(rng.between(4, static_cast<std::int64_t>(max_vertices)));

    while (children.size() + 2 <= target) {
        const std::size_t room = target - children.size();
        const auto extra = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(std::min<std::size_t>(room, 4))));
        const std::size_t pick = rng.below(leaves.size());
        const VertexId parent = leaves[pick];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
        for (std::size_t i = 0; i < extra; ++i) {
            const auto child = static_cast<VertexId>(children.size());
            children.emplace_back();
            children[parent].push_back(child);
            leaves.push_back(child);
        }
    }

    EdgeList e;
    std::vector<VertexId> planar_leaves;
    std::function<void(VertexId)> walk = [&](VertexId v) {
        if (children[v].empty()) planar_leaves.push_back(v);
        for (VertexId c : children[v]) {
            e.emplace_back(v, c);
            walk(c);
        }
    };
    walk(0);
    for (std::size_t i = 0; i < planar_leaves.size(); ++i)
        e.emplace_back(planar_leaves[i], planar_leaves[(i + 1) % planar_leaves.size()]);
    return from_list(children.size(), e);
}

Graph random_regular_graph(std::size_t k, std::size_t n, std::uint64_t seed) {
    require(k >= 1 && k < n, "random_regular: need 1 <= k < n");
    require((k * n) % 2 == 0, "random_regular: k*n must be even");
    Rng rng(seed);
    std::vector<VertexId> points;
    for (VertexId v = 0; v < n; ++v)
        for (std::size_t i = 0; i < k; ++i) points.push_back(v);

    constexpr int kMaxAttempts = 1'000'000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        rng.shuffle(points);
        std::set<std::pair<VertexId, VertexId>> seen;
        EdgeList e;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            auto a = points[i], b = points[i + 1];
            if (a == b) {
                simple = false;
                break;
            }
            if (a > b) std::swap(a, b);
            simple = seen.emplace(a, b).second;
            e.emplace_back(a, b);
        }
        if (simple) return from_list(n, e);
    }
    throw std::runtime_error("random_regular: no simple pairing found");
}

Graph generate(std::string_view family, const GeneratorParams& p) {
    if (family == "k4") return complete_graph(4);
    if (family == "k33")
        return from_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    if (family == "prism" || family == "b6")
        return from_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (family == "b8")
        return from_list(8, {{0, 1}, {2, 3}, {3, 4}, {3, 7}, {0, 2}, {0, 5}, {1, 4}, {1, 6}, {2, 5},
                             {4, 6}, {5, 7}, {6, 7}});
    if (family == "petersen") return petersen();
    if (family == "cube") return cube();
    if (family == "octahedron") return octahedron();
    if (family == "icosahedron") return icosahedron();
    if (family == "dodecahedron") return dodecahedron();
    if (family == "carvalho10") return carvalho10();
    if (family == "no_pm_cubic16") return no_pm_cubic16();
    if (family == "wheel") return wheel_graph(p.n);
    if (family == "double_wheel") return double_wheel_graph(p.n);
    if (family == "halin") return halin_graph(p.seed, p.max_vertices);
    if (family == "random_regular") return random_regular_graph(p.k, p.n, p.seed);
    if (family == "cycle") return cycle_graph(p.n);
    if (family == "path") return path_graph(p.n);
    if (family == "complete") {
        require(p.n >= 1, "complete: n must be >= 1");
        return complete_graph(p.n);
    }
    if (family == "theta") return from_list(2, {{0, 1}, {0, 1}, {0, 1}});
    throw std::invalid_argument("unknown graph family: " + std::string(family));
}

std::vector<std::string> generator_families() {
    return {"k4",          "k33",          "prism",         "b6",        "b8",    "petersen",
            "cube",        "octahedron",   "icosahedron",   "dodecahedron", "carvalho10",
            "no_pm_cubic16", "wheel",      "double_wheel",  "halin",     "random_regular",
            "cycle",       "path",         "complete",      "theta"};
}

bool family_is_seeded(std::string_view family) {
    return family == "halin" || family == "random_regular";
}

}  // namespace tripm
