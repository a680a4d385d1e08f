#include "tripm/direct_search.hpp"

#include "tripm/matching.hpp"

namespace tripm {

Verdict find_triple_direct(const Graph& g, SearchBudget& budget) {
    require_matching_covered(g);
    const std::uint64_t before = budget.used();
    std::vector<EdgeSet> seen;
    std::optional<TripleCertificate> found;
    std::uint64_t pairs = 0;
    bool out_of_budget = false;
    const EdgeSet none = g.empty_edge_set();

    auto result = enumerate_perfect_matchings(g, budget, [&](const Matching& mj) {
        const EdgeSet& b = mj.edges();
        for (const EdgeSet& a : seen) {
            if (!budget.spend()) {
                out_of_budget = true;
                return false;
            }
            ++pairs;
            EdgeSet common = a & b;
            if (common.empty()) {
                found = TripleCertificate{a, b, b};
                return false;
            }
            if (auto m3 = perfect_matching_with_forced(g, none, common)) {
                found = TripleCertificate{a, b, m3->edges()};
                return false;
            }
        }
        seen.push_back(b);
        return true;
    });

    Verdict v;
    v.stage = "direct";
    v.nodes = budget.used() - before;
    std::string searched = std::to_string(result.emitted) + " perfect matchings, " +
                           std::to_string(pairs) + " pairs";
    if (found) {
        v.kind = VerdictKind::admissible;
        v.triple = std::move(found);
        v.detail = "found after " + searched;
    } else if (out_of_budget || result.status == EnumerationStatus::budget_exhausted) {
        v.kind = VerdictKind::unknown;
        v.detail = "budget of " + std::to_string(budget.limit()) + " nodes exhausted after " + searched;
    } else {
        v.kind = VerdictKind::not_admissible;
        v.exhausted = true;
        v.detail = "exhaustive: " + searched + ", no pair admits a disjoint third matching";
    }
    return v;
}

}  // namespace tripm
