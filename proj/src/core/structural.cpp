#include "tripm/structural.hpp"

#include <stdexcept>

#include "tripm/coloring.hpp"
#include "tripm/skeleton.hpp"
#include "tripm/two_factor.hpp"
#include "tripm/verify.hpp"

namespace tripm {

namespace {

enum : std::uint8_t { kUndecided = 0, kIn = 1, kOut = 2 };

// Enumerates spanning subgraphs with all degrees in {2, 3}, branching on the
// lowest vertex with undecided edges. Once every edge at a vertex is decided
// the chains through it are checked as far as they are fully decided.
class SpanningSearch {
public:
    SpanningSearch(const Graph& g, SearchBudget& budget, bool allow_cycles, bool cubic_only)
        : g_(g), budget_(budget), allow_cycles_(allow_cycles), min_degree_(cubic_only ? 3 : 2), state_(g.edge_count(), kUndecided),
          deg_(g.vertex_count(), 0), undecided_(g.vertex_count(), 0) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            undecided_[v] = static_cast<std::uint32_t>(g.degree(v));
    }

    bool run() {
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (undecided_[v] < min_degree_) return false;
        return search();
    }

    bool budget_hit() const { return budget_hit_; }
    std::uint64_t leaves() const { return leaves_; }
    std::optional<SkeletonCertificate>& result() { return result_; }

private:
    bool finished(VertexId x) const { return undecided_[x] == 0; }

    struct Walk {
        enum Kind { open, closed, end } kind;
        VertexId at;
        std::size_t length;
    };

    // Follows the chain leaving x along e through finished degree-2 vertices.
    Walk walk(VertexId x, EdgeId e) const {
        VertexId at = g_.edge(e).other(x);
        std::size_t len = 1;
        while (true) {
            if (at == x) return {Walk::closed, at, len};
            if (!finished(at)) return {Walk::open, at, len};
            if (deg_[at] == 3) return {Walk::end, at, len};
            for (auto inc : g_.incident(at))
                if (state_[inc.edge] == kIn && inc.edge != e) {
                    e = inc.edge;
                    break;
                }
            at = g_.edge(e).other(at);
            ++len;
        }
    }

    bool chains_ok(VertexId x) const {
        EdgeId in[3];
        int k = 0;
        for (auto inc : g_.incident(x))
            if (state_[inc.edge] == kIn) in[k++] = inc.edge;
        if (k == 3) {
            for (int i = 0; i < 3; ++i) {
                Walk w = walk(x, in[i]);
                if (w.kind == Walk::closed) return false;
                if (w.kind == Walk::end && w.length % 2 == 0) return false;
            }
            return true;
        }
        Walk a = walk(x, in[0]);
        if (a.kind == Walk::closed) return a.length % 2 == 0;
        Walk b = walk(x, in[1]);
        if (a.kind == Walk::end && b.kind == Walk::end)
            return a.at != b.at && (a.length + b.length) % 2 == 1;
        return true;
    }

    bool leaf() {
        ++leaves_;
        EdgeSet spanning = g_.empty_edge_set();
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            if (state_[e] == kIn) spanning.insert(e);
        auto ex = extract_skeleton(g_, spanning, allow_cycles_);
        if (!ex.certificate) return false;
        auto& cert = *ex.certificate;
        if (cert.skeleton.vertex_count() > 0) {
            auto col = color_cubic_3(cert.skeleton, budget_);
            if (col.status == SearchStatus::budget_exhausted) budget_hit_ = true;
            if (!col.found()) return false;
            cert.coloring = std::move(*col.value);
        }
        result_ = std::move(cert);
        return true;
    }

    bool search() {
        if (!budget_.spend()) {
            budget_hit_ = true;
            return false;
        }
        VertexId v = 0;
        while (v < g_.vertex_count() && finished(v)) ++v;
        if (v == g_.vertex_count()) return leaf();

        std::vector<EdgeId> open;
        for (auto inc : g_.incident(v))
            if (state_[inc.edge] == kUndecided) open.push_back(inc.edge);

        // Subsets of the open edges that bring v to degree 3, then 2; larger
        // subsets first so that branch vertices are preferred.
        const std::size_t k = open.size();
        std::vector<std::size_t> pick;
        for (std::uint32_t target : {3u, 2u}) {
            if (target < min_degree_) break;
            if (target < deg_[v] || target - deg_[v] > k) continue;
            std::size_t r = target - deg_[v];
            pick.resize(r);
            for (std::size_t i = 0; i < r; ++i) pick[i] = i;
            while (true) {
                if (try_subset(v, open, pick)) return true;
                if (budget_hit_) return false;
                std::size_t i = r;
                while (i > 0 && pick[i - 1] == k - r + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return false;
    }

    bool try_subset(VertexId v, const std::vector<EdgeId>& open, const std::vector<std::size_t>& pick) {
        for (auto e : open) state_[e] = kOut;
        for (auto i : pick) state_[open[i]] = kIn;
        for (std::size_t i = 0; i < open.size(); ++i) {
            EdgeId e = open[i];
            VertexId w = g_.edge(e).other(v);
            --undecided_[v];
            --undecided_[w];
            if (state_[e] == kIn) {
                ++deg_[v];
                ++deg_[w];
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < open.size() && ok; ++i) {
            VertexId w = g_.edge(open[i]).other(v);
            if (deg_[w] > 3 || deg_[w] + undecided_[w] < min_degree_) ok = false;
        }
        if (ok) ok = chains_ok(v);
        for (std::size_t i = 0; i < open.size() && ok; ++i) {
            VertexId w = g_.edge(open[i]).other(v);
            if (finished(w)) ok = chains_ok(w);
        }
        bool found = ok && search();
        if (!found) {
            for (std::size_t i = 0; i < open.size(); ++i) {
                EdgeId e = open[i];
                VertexId w = g_.edge(e).other(v);
                if (state_[e] == kIn) {
                    --deg_[v];
                    --deg_[w];
                }
                ++undecided_[v];
                ++undecided_[w];
                state_[e] = kUndecided;
            }
        }
        return found;
    }

    const Graph& g_;
    SearchBudget& budget_;
    bool allow_cycles_;
    std::uint32_t min_degree_;
    std::vector<std::uint8_t> state_;
    std::vector<std::uint32_t> deg_;
    std::vector<std::uint32_t> undecided_;
    std::optional<SkeletonCertificate> result_;
    std::uint64_t leaves_ = 0;
    bool budget_hit_ = false;
};

void attach(Verdict& v, const Graph& g, StructuralCertificate sc, TripleCertificate t) {
    auto report = verify_triple(g, t);
    if (!report.ok()) throw std::logic_error("structural lift failed verification: " + report.summary());
    v.kind = VerdictKind::admissible;
    v.structural = std::move(sc);
    v.triple = std::move(t);
}

}  // namespace

Verdict structural_check(const Graph& g, SearchBudget& budget, StructuralMode mode) {
    require_matching_covered(g);
    const std::uint64_t before = budget.used();
    Verdict v;
    v.stage = "structural";

    auto factor = mode == StructuralMode::any
                      ? find_even_2factor(g, budget)
                      : SearchOutcome<EvenTwoFactorCertificate>{SearchStatus::exhausted, {}, 0};
    if (factor.found()) {
        auto t = triple_from_even_2factor(g, *factor.value);
        attach(v, g, StructuralCertificate{std::move(*factor.value)}, std::move(t));
        v.nodes = budget.used() - before;
        v.detail = "even 2-factor";
        return v;
    }
    if (factor.status == SearchStatus::budget_exhausted) {
        v.nodes = budget.used() - before;
        v.detail = "budget of " + std::to_string(budget.limit()) +
                   " nodes exhausted while searching for an even 2-factor";
        return v;
    }

    // Spanning cubic subgraphs first, then every degree pattern in {2, 3}.
    const bool allow_cycles = mode == StructuralMode::any;
    SpanningSearch cubic(g, budget, allow_cycles, true);
    bool found = cubic.run();
    std::uint64_t leaves = cubic.leaves();
    std::optional<SkeletonCertificate> result = std::move(cubic.result());
    bool budget_hit = cubic.budget_hit();
    if (!found && !budget_hit) {
        SpanningSearch general(g, budget, allow_cycles, false);
        found = general.run();
        leaves += general.leaves();
        result = std::move(general.result());
        budget_hit = general.budget_hit();
    }
    v.nodes = budget.used() - before;
    if (found) {
        SkeletonCertificate sc = std::move(*result);
        auto t = lift_triple(g, sc);
        attach(v, g, StructuralCertificate{std::move(sc)}, std::move(t));
        v.detail = "spanning bisubdivision after " + std::to_string(leaves) + " candidates";
    } else if (budget_hit) {
        v.detail = "budget of " + std::to_string(budget.limit()) + " nodes exhausted after " +
                   std::to_string(leaves) + " candidate subgraphs";
    } else {
        v.kind = VerdictKind::not_admissible;
        v.exhausted = true;
        v.detail = std::string(allow_cycles ? "exhaustive: no even 2-factor; " : "exhaustive: ") +
                   std::to_string(leaves) +
                   " candidate subgraphs, none with odd chains and a 3-edge-colourable skeleton";
    }
    return v;
}

}  // namespace tripm
