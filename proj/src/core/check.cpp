#include "tripm/check.hpp"

#include <stdexcept>

#include "tripm/budget.hpp"
#include "tripm/connectivity.hpp"
#include "tripm/direct_search.hpp"
#include "tripm/four_regular.hpp"
#include "tripm/hamilton.hpp"
#include "tripm/structural.hpp"
#include "tripm/two_factor.hpp"
#include "tripm/verify.hpp"

namespace tripm {

namespace {

bool four_regular_applies(const Graph& g) {
    return g.vertex_count() % 2 == 0 && g.vertex_count() > 4 && g.is_regular(4) && g.is_simple() &&
           is_k_connected(g, 3);
}

void require_verified(const Graph& g, const Verdict& v) {
    if (v.kind != VerdictKind::admissible) return;
    if (!v.triple) throw std::logic_error("admissible verdict without a certificate");
    auto report = verify_triple(g, *v.triple);
    if (!report.ok()) throw std::logic_error(v.stage + " produced a bad certificate: " + report.summary());
}

}  // namespace

CheckResult check(const Graph& g, std::uint64_t budget) {
    CheckResult out;
    try {
        require_matching_covered(g);
    } catch (const NotMatchingCovered& e) {
        out.verdict.kind = VerdictKind::ineligible;
        out.verdict.stage = "gate";
        out.verdict.detail = e.what();
        out.stages.push_back({"gate", "ineligible", 0});
        return out;
    }
    out.stages.push_back({"gate", "matching_covered", 0});

    const std::uint64_t fast_budget = budget / 10;
    const std::uint64_t structural_budget = budget * 45 / 100;
    const std::uint64_t direct_budget = budget - fast_budget - structural_budget;
    std::uint64_t total_nodes = 0;

    auto finish = [&](Verdict v) {
        require_verified(g, v);
        v.nodes = total_nodes;
        out.verdict = std::move(v);
        return out;
    };

    SearchBudget fast(fast_budget);
    if (four_regular_applies(g)) {
        auto r = four_regular_fastpath(g, fast);
        total_nodes += r.verdict.nodes;
        out.stages.push_back({"four_regular", std::string(to_string(r.verdict.kind)), r.verdict.nodes});
        if (r.verdict.kind == VerdictKind::admissible || r.verdict.kind == VerdictKind::not_admissible)
            return finish(std::move(r.verdict));
    } else {
        out.stages.push_back({"four_regular", "not_applicable", 0});
    }

    {
        auto h = hamilton_cycle(g, fast);
        total_nodes += h.nodes;
        out.stages.push_back({"hamilton", std::string(to_string(h.status)), h.nodes});
        if (h.found()) {
            EdgeSet cycle = EdgeSet::of(g.edge_count(), *h.value);
            EvenTwoFactorCertificate factor{cycle};
            Verdict v;
            v.kind = VerdictKind::admissible;
            v.stage = "hamilton";
            v.triple = triple_from_even_2factor(g, factor);
            v.structural = StructuralCertificate{std::move(factor)};
            v.detail = "Hamilton cycle on an even number of vertices";
            return finish(std::move(v));
        }
    }

    SearchBudget sb(structural_budget);
    Verdict structural = structural_check(g, sb);
    total_nodes += structural.nodes;
    out.stages.push_back({"structural", std::string(to_string(structural.kind)), structural.nodes});
    if (structural.kind == VerdictKind::admissible) return finish(std::move(structural));

    SearchBudget db(direct_budget);
    Verdict direct = find_triple_direct(g, db);
    total_nodes += direct.nodes;
    out.stages.push_back({"direct", std::string(to_string(direct.kind)), direct.nodes});
    if (direct.kind == VerdictKind::admissible) {
        out.disagreement = structural.kind == VerdictKind::not_admissible;
        return finish(std::move(direct));
    }
    if (direct.kind == VerdictKind::not_admissible) return finish(std::move(direct));
    if (structural.kind == VerdictKind::not_admissible) return finish(std::move(structural));

    Verdict unknown;
    unknown.kind = VerdictKind::unknown;
    unknown.stage = "direct";
    unknown.detail = "budget of " + std::to_string(budget) + " nodes exhausted; structural: " +
                     structural.detail + "; direct: " + direct.detail;
    return finish(std::move(unknown));
}

bool CrossValidation::agree() const {
    auto definite = [](VerdictKind k) {
        return k == VerdictKind::admissible || k == VerdictKind::not_admissible;
    };
    if (!definite(direct.kind) || !definite(structural.kind)) return true;
    return direct.kind == structural.kind;
}

CrossValidation cross_validate(const Graph& g, std::uint64_t budget) {
    CrossValidation cv;
    SearchBudget db(budget), sb(budget);
    cv.direct = find_triple_direct(g, db);
    cv.structural = structural_check(g, sb);
    return cv;
}

}  // namespace tripm
