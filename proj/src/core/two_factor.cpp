#include "tripm/two_factor.hpp"

#include <stdexcept>

namespace tripm {

namespace {

enum : std::uint8_t { kUndecided = 0, kIn = 1, kOut = 2 };

class EvenFactorSearch {
public:
    EvenFactorSearch(const Graph& g, SearchBudget& budget)
        : g_(g), budget_(budget), deg_(g.vertex_count(), 0), end_(g.vertex_count()),
          len_(g.vertex_count(), 0), state_(g.edge_count(), kUndecided) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) end_[v] = v;
    }

    SearchOutcome<EvenTwoFactorCertificate> run() {
        SearchOutcome<EvenTwoFactorCertificate> out;
        std::uint64_t before = budget_.used();
        bool found = feasible() && search();
        out.nodes = budget_.used() - before;
        if (found) {
            EdgeSet f = g_.empty_edge_set();
            for (EdgeId e = 0; e < g_.edge_count(); ++e)
                if (state_[e] == kIn) f.insert(e);
            out.status = SearchStatus::found;
            out.value = EvenTwoFactorCertificate{std::move(f)};
        } else {
            out.status = budget_hit_ ? SearchStatus::budget_exhausted : SearchStatus::exhausted;
        }
        return out;
    }

private:
    struct Undo {
        std::uint32_t* slot;
        std::uint32_t old;
    };

    void set(std::uint32_t& slot, std::uint32_t value) {
        trail_.push_back({&slot, slot});
        slot = value;
    }
    void set_state(EdgeId e, std::uint8_t s) {
        state_trail_.push_back({e, state_[e]});
        state_[e] = s;
    }
    void undo(std::size_t mark, std::size_t state_mark) {
        while (trail_.size() > mark) {
            *trail_.back().slot = trail_.back().old;
            trail_.pop_back();
        }
        while (state_trail_.size() > state_mark) {
            state_[state_trail_.back().first] = state_trail_.back().second;
            state_trail_.pop_back();
        }
    }

    // Adds e to the factor; false if that breaks a degree or closes an odd cycle.
    bool add(EdgeId e) {
        VertexId a = g_.edge(e).u, b = g_.edge(e).v;
        if (deg_[a] >= 2 || deg_[b] >= 2) return false;
        VertexId ea = end_[a], eb = end_[b];
        if (ea == b) {
            if ((len_[a] + 1) % 2) return false;
        } else {
            std::uint32_t l = len_[a] + len_[b] + 1;
            set(end_[ea], eb);
            set(end_[eb], ea);
            set(len_[ea], l);
            set(len_[eb], l);
        }
        set(deg_[a], deg_[a] + 1);
        set(deg_[b], deg_[b] + 1);
        set_state(e, kIn);
        return true;
    }

    bool usable(EdgeId e, VertexId from) const {
        return state_[e] == kUndecided && deg_[g_.edge(e).other(from)] < 2;
    }

    bool feasible() const {
        for (VertexId x = 0; x < g_.vertex_count(); ++x) {
            if (deg_[x] >= 2) continue;
            std::uint32_t avail = 0;
            for (auto inc : g_.incident(x))
                if (usable(inc.edge, x)) ++avail;
            if (deg_[x] + avail < 2) return false;
        }
        return true;
    }

    bool search() {
        if (!budget_.spend()) {
            budget_hit_ = true;
            return false;
        }
        VertexId v = 0;
        while (v < g_.vertex_count() && deg_[v] >= 2) ++v;
        if (v == g_.vertex_count()) return true;

        std::vector<EdgeId> cands;
        for (auto inc : g_.incident(v))
            if (usable(inc.edge, v)) cands.push_back(inc.edge);
        std::size_t need = 2 - deg_[v];

        auto attempt = [&](std::initializer_list<EdgeId> chosen) {
            std::size_t mark = trail_.size(), smark = state_trail_.size();
            bool ok = true;
            for (auto e : chosen)
                if (!(ok = add(e))) break;
            if (ok) {
                for (auto inc : g_.incident(v))
                    if (state_[inc.edge] == kUndecided) set_state(inc.edge, kOut);
                if (feasible() && search()) return true;
            }
            undo(mark, smark);
            return false;
        };

        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (need == 1) {
                if (attempt({cands[i]})) return true;
            } else {
                for (std::size_t j = i + 1; j < cands.size(); ++j) {
                    if (attempt({cands[i], cands[j]})) return true;
                    if (budget_hit_) return false;
                }
            }
            if (budget_hit_) return false;
        }
        return false;
    }

    const Graph& g_;
    SearchBudget& budget_;
    std::vector<std::uint32_t> deg_;
    std::vector<std::uint32_t> end_;  // other end of the path, valid at path ends
    std::vector<std::uint32_t> len_;  // path length, valid at path ends
    std::vector<std::uint8_t> state_;
    std::vector<Undo> trail_;
    std::vector<std::pair<EdgeId, std::uint8_t>> state_trail_;
    bool budget_hit_ = false;
};

}  // namespace

SearchOutcome<EvenTwoFactorCertificate> find_even_2factor(const Graph& g, SearchBudget& budget) {
    return EvenFactorSearch(g, budget).run();
}

std::vector<std::vector<EdgeId>> factor_cycles(const Graph& g, const EdgeSet& factor) {
    if (factor.universe() != g.edge_count()) throw std::invalid_argument("factor: wrong universe");
    auto deg = g.degrees_within(factor);
    for (auto d : deg)
        if (d != 2) throw std::invalid_argument("not a 2-factor");

    std::vector<std::vector<EdgeId>> cycles;
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        EdgeId e = 0;
        for (auto inc : g.incident(s))
            if (factor.contains(inc.edge)) {
                e = inc.edge;
                break;
            }
        std::vector<EdgeId> cycle;
        VertexId at = s;
        while (true) {
            seen[at] = true;
            cycle.push_back(e);
            at = g.edge(e).other(at);
            if (at == s) break;
            for (auto inc : g.incident(at))
                if (factor.contains(inc.edge) && inc.edge != e) {
                    e = inc.edge;
                    break;
                }
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

TripleCertificate triple_from_even_2factor(const Graph& g, const EvenTwoFactorCertificate& c) {
    std::vector<std::vector<EdgeId>> cycles;
    try {
        cycles = factor_cycles(g, c.factor);
    } catch (const std::invalid_argument& e) {
        throw MalformedCertificate(e.what());
    }
    TripleCertificate t{g.empty_edge_set(), g.empty_edge_set(), g.empty_edge_set()};
    for (const auto& cycle : cycles) {
        if (cycle.size() % 2) throw MalformedCertificate("2-factor has an odd cycle");
        for (std::size_t i = 0; i < cycle.size(); ++i) (i % 2 ? t.m2 : t.m1).insert(cycle[i]);
    }
    t.m3 = t.m2;
    return t;
}

}  // namespace tripm
