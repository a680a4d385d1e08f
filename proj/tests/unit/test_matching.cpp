#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tripm/connectivity.hpp"
#include "tripm/gallai_edmonds.hpp"
#include "tripm/generators.hpp"
#include "tripm/kernels.hpp"
#include "tripm/matching.hpp"

using namespace tripm;

namespace {

EdgeSet edge_set(const Graph& g, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    EdgeSet s(g.edge_count());
    for (auto [a, b] : pairs) {
        Edge want{std::min(a, b), std::max(a, b)};
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (g.edge(e) == want && !s.contains(e)) {
                s.insert(e);
                break;
            }
    }
    return s;
}

std::size_t count_perfect_matchings(const Graph& g) {
    SearchBudget budget(100'000'000);
    std::size_t count = 0;
    auto res = enumerate_perfect_matchings(g, budget, [&](const Matching&) {
        ++count;
        return true;
    });
    REQUIRE(res.status == EnumerationStatus::complete);
    return count;
}

Graph gadget() {
    // a=0 b=1 c=2 w=3 y=4
    return Graph(5, {{0, 1}, {0, 3}, {0, 2}, {1, 2}, {2, 3}, {1, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("max_matching on named graphs") {
    CHECK(max_matching(complete_graph(4)).size() == 2);
    CHECK(max_matching(complete_graph(4)).perfect());
    Matching p = max_matching(generate("petersen"));
    CHECK(p.size() == 5);
    CHECK(p.perfect());
    // Brute force over all matchings: one vertex always exposed.
    Graph nopm = generate("no_pm_cubic16");
    CHECK(oracle::max_matching_size(nopm) == 7);
    CHECK(max_matching(nopm).size() == 7);
    CHECK(max_matching(Graph(0, {})).size() == 0);
}

TEST_CASE("max_matching agrees with brute force on random graphs") {
    Rng rng(7);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto n = static_cast<std::size_t>(rng.between(1, 11));
        Graph g = oracle::random_graph(n, static_cast<int>(rng.between(5, 70)), rng);
        Matching m = max_matching(g);
        REQUIRE(is_matching(g, m.edges()));
        REQUIRE(m.size() == oracle::max_matching_size(g));
        CHECK(max_matching(g) == m);  // deterministic
    }
}

TEST_CASE("max_matching handles parallel edges with the lowest id") {
    Graph g(2, {{0, 1}, {0, 1}});
    Matching m = max_matching(g);
    CHECK(m.edges().ids() == std::vector<EdgeId>{0});
}

TEST_CASE("perfect_matching_with_forced examples") {
    Graph k4 = complete_graph(4);
    auto forced = edge_set(k4, {{0, 1}});
    auto pm = perfect_matching_with_forced(k4, forced, k4.empty_edge_set());
    REQUIRE(pm);
    CHECK(pm->edges() == edge_set(k4, {{0, 1}, {2, 3}}));

    Graph c6 = cycle_graph(6);
    // 0-1 and 3-4 leave the odd gaps {2} and {5}.
    auto blocked = perfect_matching_with_forced(c6, edge_set(c6, {{0, 1}, {3, 4}}), c6.empty_edge_set());
    CHECK_FALSE(blocked);

    Graph pet = generate("petersen");
    for (EdgeId e = 0; e < pet.edge_count(); ++e) {
        EdgeSet f(pet.edge_count());
        f.insert(e);
        auto m = perfect_matching_with_forced(pet, f, pet.empty_edge_set());
        REQUIRE(m);
        CHECK(m->edges().contains(e));
        CHECK(m->perfect());
    }
}

TEST_CASE("perfect_matching_with_forced precondition errors") {
    Graph k4 = complete_graph(4);
    CHECK_THROWS_AS(perfect_matching_with_forced(k4, edge_set(k4, {{0, 1}, {0, 2}}), k4.empty_edge_set()),
                    std::invalid_argument);
    auto f = edge_set(k4, {{0, 1}});
    CHECK_THROWS_AS(perfect_matching_with_forced(k4, f, f), std::invalid_argument);
}

TEST_CASE("perfect_matching_with_forced matches filtered brute force") {
    Rng rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        const auto n = static_cast<std::size_t>(2 * rng.between(1, 5));
        Graph g = oracle::random_graph(n, static_cast<int>(rng.between(30, 90)), rng);
        if (g.edge_count() == 0) continue;
        auto all = oracle::perfect_matchings(g);
        // random forced matching of size <= 2 and random forbidden set
        EdgeSet forced(g.edge_count()), forbidden(g.edge_count());
        for (int k = 0; k < 2; ++k) {
            auto e = static_cast<EdgeId>(rng.below(g.edge_count()));
            forced.insert(e);
            if (!is_matching(g, forced)) forced.erase(e);
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!forced.contains(e) && rng.below(5) == 0) forbidden.insert(e);

        bool exists = false;
        for (const auto& pm : all) {
            EdgeSet s = EdgeSet::of(g.edge_count(), pm);
            if (forced.is_subset_of(s) && !s.intersects(forbidden)) exists = true;
        }
        auto got = perfect_matching_with_forced(g, forced, forbidden);
        REQUIRE(got.has_value() == exists);
        if (got) {
            CHECK(got->perfect());
            CHECK(forced.is_subset_of(got->edges()));
            CHECK_FALSE(got->edges().intersects(forbidden));
        }
    }
}

TEST_CASE("enumeration counts") {
    CHECK(count_perfect_matchings(complete_graph(4)) == 3);
    CHECK(count_perfect_matchings(generate("k33")) == oracle::perfect_matchings(generate("k33")).size());
    CHECK(count_perfect_matchings(generate("k33")) == 6);
    CHECK(oracle::perfect_matchings(generate("petersen")).size() == 6);
    CHECK(count_perfect_matchings(generate("petersen")) == 6);
    CHECK(count_perfect_matchings(generate("theta")) == 3);  // edge-id semantics
    CHECK(count_perfect_matchings(complete_graph(5)) == 0);
}

TEST_CASE("enumeration: no duplicates, brute-force counts, documented order") {
    Rng rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(2 * rng.between(1, 5));
        Graph g = oracle::random_graph(n, static_cast<int>(rng.between(20, 100)), rng);
        SearchBudget budget(10'000'000);
        std::vector<std::vector<EdgeId>> seen;
        enumerate_perfect_matchings(g, budget, [&](const Matching& m) {
            CHECK(m.perfect());
            seen.push_back(m.edges().ids());
            return true;
        });
        std::set<std::vector<EdgeId>> unique(seen.begin(), seen.end());
        CHECK(unique.size() == seen.size());
        CHECK(seen.size() == oracle::perfect_matchings(g).size());
    }
    // K4: vertex 0 branches over edges 01, 02, 03 in id order.
    Graph k4 = complete_graph(4);
    SearchBudget budget(1000);
    std::vector<std::vector<EdgeId>> order;
    enumerate_perfect_matchings(k4, budget, [&](const Matching& m) {
        order.push_back(m.edges().ids());
        return true;
    });
    CHECK(order == std::vector<std::vector<EdgeId>>{{0, 5}, {1, 4}, {2, 3}});
}

TEST_CASE("enumeration budget exhaustion is distinguishable") {
    SearchBudget budget(5);
    auto res = enumerate_perfect_matchings(complete_graph(8), budget, [](const Matching&) { return true; });
    CHECK(res.status == EnumerationStatus::budget_exhausted);
    CHECK(budget.exhausted());

    SearchBudget big(1000);
    auto stopped = enumerate_perfect_matchings(complete_graph(4), big, [](const Matching&) { return false; });
    CHECK(stopped.status == EnumerationStatus::stopped);
    CHECK(stopped.emitted == 1);
}

TEST_CASE("matching covered") {
    auto pet = is_matching_covered(generate("petersen"));
    CHECK(pet.matching_covered);
    for (const auto& w : pet.witness) CHECK((w && w->perfect()));
    CHECK_FALSE(is_matching_covered(generate("no_pm_cubic16")).matching_covered);
    auto p4 = is_matching_covered(path_graph(4));
    CHECK_FALSE(p4.matching_covered);
    CHECK(p4.uncovered == std::vector<EdgeId>{1});
    CHECK(is_matching_covered(complete_graph(2)).matching_covered);
    CHECK_FALSE(is_matching_covered(Graph(4, {{0, 1}, {2, 3}})).matching_covered);  // disconnected
}

TEST_CASE("factor criticality") {
    Graph c5 = cycle_graph(5);
    CHECK(is_factor_critical(c5, VertexSet::full(5)));
    Graph gd = gadget();
    // brute force: every vertex-deleted subgraph has a perfect matching
    for (VertexId v = 0; v < 5; ++v) {
        VertexSet rest = VertexSet::full(5);
        rest.erase(v);
        auto sub = induced_subgraph(gd, rest);
        CHECK(oracle::perfect_matchings(sub.graph).size() > 0);
    }
    CHECK(is_factor_critical(gd, VertexSet::full(5)));
    CHECK_FALSE(is_factor_critical(complete_graph(2), VertexSet::full(2)));
    CHECK_FALSE(is_factor_critical(path_graph(3), VertexSet::full(3)));
}

TEST_CASE("gallai-edmonds on the named examples") {
    Graph g = generate("no_pm_cubic16");
    auto dec = gallai_edmonds(g);
    CHECK(dec.a.ids() == std::vector<VertexId>{15});
    CHECK(dec.c.empty());
    REQUIRE(dec.omega() == 3);
    CHECK(dec.omega_one() == 3);
    for (const auto& comp : dec.components) {
        CHECK(comp.vertices.count() == 5);
        CHECK(comp.t == 1);
        CHECK(is_factor_critical(g, comp.vertices));
    }
    CHECK(check_gallai_edmonds(g, dec).all());

    auto pet = gallai_edmonds(generate("petersen"));
    CHECK(pet.d.empty());
    CHECK(pet.a.empty());
    CHECK(pet.c.count() == 10);
    CHECK(pet.omega() == 0);

    auto c5 = gallai_edmonds(cycle_graph(5));
    CHECK(c5.d.count() == 5);
    CHECK(c5.a.empty());
    CHECK(c5.c.empty());
}

TEST_CASE("gallai-edmonds properties on random graphs, checked against brute force") {
    Rng rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(rng.between(1, 11));
        Graph g = oracle::random_graph(n, static_cast<int>(rng.between(10, 60)), rng);
        auto dec = gallai_edmonds(g);
        auto rep = check_gallai_edmonds(g, dec);
        CAPTURE(n);
        CHECK(rep.all());
        const std::size_t nu = oracle::max_matching_size(g);
        CHECK(dec.matching_number == nu);
        // D by definition: some maximum matching misses v, i.e. nu(G - v) == nu(G).
        for (VertexId v = 0; v < n; ++v) {
            VertexSet rest = VertexSet::full(n);
            rest.erase(v);
            auto sub = induced_subgraph(g, rest);
            CHECK(dec.d.contains(v) == (oracle::max_matching_size(sub.graph) == nu));
        }
    }
}

TEST_CASE("gallai-edmonds on random cubic graphs: t is odd") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_regular_graph(3, 16, seed);
        auto dec = gallai_edmonds(g);
        auto rep = check_gallai_edmonds(g, dec);
        CHECK(rep.all());
        for (const auto& c : dec.components) CHECK(c.t % 2 == 1);
    }
}

TEST_CASE("parallel kernels match their serial references") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(rng.between(2, 16));
        Graph g = oracle::random_graph(n, static_cast<int>(rng.between(15, 60)), rng);
        EdgeSet all = EdgeSet::full(g.edge_count());
        CHECK(deletion_matching_numbers(g, all, Exec::serial) == deletion_matching_numbers(g, all, Exec::parallel));
        CHECK(forced_edge_matchings(g, Exec::serial) == forced_edge_matchings(g, Exec::parallel));
        VertexSet scope = VertexSet::full(n);
        CHECK(deletion_perfect_flags(g, scope, Exec::serial) == deletion_perfect_flags(g, scope, Exec::parallel));
    }
}
