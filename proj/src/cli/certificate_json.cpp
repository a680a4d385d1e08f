#include "tripm/certificate_json.hpp"

#include <map>

#include "tripm/io.hpp"
#include "tripm/matching.hpp"
#include "tripm/skeleton.hpp"
#include "tripm/two_factor.hpp"

namespace tripm {

namespace {

Json pair_array(const Graph& g, const std::vector<EdgeId>& ids) {
    Json a = Json::array();
    for (auto e : ids) a.push_back({g.edge(e).u, g.edge(e).v});
    return a;
}

Json id_array(const std::vector<EdgeId>& ids) {
    Json a = Json::array();
    for (auto e : ids) a.push_back(e);
    return a;
}

Json colour_array(ColorSet s) {
    Json a = Json::array();
    for (int c = 1; c <= 3; ++c)
        if (s & color_bit(c)) a.push_back(c);
    return a;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw SchemaError("expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
    return a;
}

std::uint32_t as_id(const Json& v, const char* what) {
    // documents built in memory hold signed integers; parsed ones unsigned
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw SchemaError(std::string(what) + " must be a non-negative integer");
    auto x = v.get<std::uint64_t>();
    if (x > 0xffffffffu) throw SchemaError(std::string(what) + " is too large");
    return static_cast<std::uint32_t>(x);
}

std::pair<VertexId, VertexId> as_pair(const Json& v) {
    if (!v.is_array() || v.size() != 2) throw SchemaError("edge pair must be [u, v]");
    return {as_id(v[0], "vertex"), as_id(v[1], "vertex")};
}

std::vector<EdgeId> id_list(const Json& a) {
    if (!a.is_array()) throw SchemaError("expected an array of edge ids");
    std::vector<EdgeId> out;
    for (const auto& v : a) out.push_back(as_id(v, "edge id"));
    return out;
}

// Resolves an edge-set object to edge ids of g. Out-of-range ids, unknown
// pairs and id/pair disagreements are recorded as violations; the returned
// ids are the usable ones.
std::vector<EdgeId> resolve_edges(const Graph& g, const Json& j, const std::string& name,
                                  VerificationReport& report) {
    if (!j.is_object()) throw SchemaError(name + " must be an object");
    bool has_ids = j.contains("ids"), has_pairs = j.contains("edges");
    if (!has_ids && !has_pairs) throw SchemaError(name + " needs \"ids\" or \"edges\"");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (has_pairs)
        for (const auto& p : array_field(j, "edges")) pairs.push_back(as_pair(p));

    std::vector<EdgeId> out;
    if (has_ids) {
        auto ids = id_list(j.at("ids"));
        if (has_pairs && pairs.size() != ids.size()) {
            report.violations.push_back({name + ": ids and edges differ in length", {}, {}});
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            EdgeId e = ids[i];
            if (e >= g.edge_count()) {
                report.violations.push_back({name + ": edge id out of range", {e}, {}});
                continue;
            }
            if (has_pairs && i < pairs.size()) {
                auto [a, b] = pairs[i];
                const Edge& ed = g.edge(e);
                if (std::min(a, b) != ed.u || std::max(a, b) != ed.v) {
                    report.violations.push_back(
                        {name + ": edge id does not join the listed pair", {e}, {a, b}});
                    continue;
                }
            }
            out.push_back(e);
        }
        return out;
    }

    // Pairs only: parallel edges are taken in id order.
    std::map<std::pair<VertexId, VertexId>, std::size_t> used;
    for (auto [a, b] : pairs) {
        auto key = std::minmax(a, b);
        std::size_t skip = used[key]++;
        bool found = false;
        for (EdgeId e = 0; e < g.edge_count() && !found; ++e) {
            if (g.edge(e).u == key.first && g.edge(e).v == key.second) {
                if (skip == 0) {
                    out.push_back(e);
                    found = true;
                } else {
                    --skip;
                }
            }
        }
        if (!found) report.violations.push_back({name + ": no such edge in the graph", {}, {a, b}});
    }
    return out;
}

EdgeSet to_set(const Graph& g, const std::vector<EdgeId>& ids) {
    return EdgeSet::of(g.edge_count(), ids);
}

std::vector<std::vector<EdgeId>> id_lists(const Json& a, const Graph& g, const std::string& name,
                                          VerificationReport& report) {
    if (!a.is_array()) throw SchemaError(name + " must be an array");
    std::vector<std::vector<EdgeId>> out;
    for (const auto& item : a) {
        auto ids = id_list(item);
        for (auto e : ids)
            if (e >= g.edge_count()) report.violations.push_back({name + ": edge id out of range", {e}, {}});
        out.push_back(std::move(ids));
    }
    return out;
}

void append(VerificationReport& into, const VerificationReport& from, const std::string& prefix) {
    for (auto v : from.violations) {
        v.condition = prefix + v.condition;
        into.violations.push_back(std::move(v));
    }
}

void verify_triple_doc(const Graph& g, const Json& doc, VerificationReport& report) {
    const Json& ms = array_field(doc, "matchings");
    if (ms.size() != 3) throw SchemaError("\"matchings\" must hold three edge sets");
    TripleCertificate t;
    EdgeSet* slots[3] = {&t.m1, &t.m2, &t.m3};
    for (int i = 0; i < 3; ++i)
        *slots[i] = to_set(g, resolve_edges(g, ms[i], "m" + std::to_string(i + 1), report));
    if (!report.ok()) return;
    append(report, verify_triple(g, t), "");
}

void verify_factor_doc(const Graph& g, const Json& doc, VerificationReport& report) {
    EvenTwoFactorCertificate c{to_set(g, resolve_edges(g, field(doc, "factor"), "factor", report))};
    if (!report.ok()) return;
    auto r = verify_even_two_factor(g, c);
    append(report, r, "");
    if (!r.ok()) return;
    append(report, verify_triple(g, triple_from_even_2factor(g, c)), "alternated triple: ");
}

void verify_skeleton_doc(const Graph& g, const Json& doc, VerificationReport& report) {
    SkeletonCertificate c;
    c.spanning = to_set(g, resolve_edges(g, field(doc, "spanning"), "spanning", report));
    for (const auto& v : array_field(doc, "branch_vertices")) c.branch_vertices.push_back(as_id(v, "vertex"));

    const Json& sk = field(doc, "skeleton");
    std::size_t k = as_id(field(sk, "n"), "skeleton order");
    std::vector<std::pair<VertexId, VertexId>> sk_edges;
    for (const auto& p : array_field(sk, "edges")) {
        auto e = as_pair(p);
        if (e.first == e.second || e.first >= k || e.second >= k)
            throw SchemaError("skeleton edge is a loop or out of range");
        sk_edges.push_back(e);
    }
    c.skeleton = Graph(k, sk_edges);
    for (std::size_t i = 0; i < sk_edges.size(); ++i) {
        auto [a, b] = std::minmax(sk_edges[i].first, sk_edges[i].second);
        if (c.skeleton.edge(static_cast<EdgeId>(i)) != Edge{a, b}) {
            report.violations.push_back({"skeleton edges are not listed in canonical order", {}, {}});
            return;
        }
    }

    c.chain_map = id_lists(field(doc, "chain_map"), g, "chain_map", report);
    c.even_cycles = doc.contains("even_cycles") ? id_lists(doc.at("even_cycles"), g, "even_cycles", report)
                                                : std::vector<std::vector<EdgeId>>{};

    const Json& col = field(doc, "coloring");
    if (!col.is_object()) throw SchemaError("\"coloring\" must map skeleton edge ids to colour lists");
    c.coloring.assign(c.skeleton.edge_count(), 0);
    for (auto it = col.begin(); it != col.end(); ++it) {
        std::size_t pos = 0;
        unsigned long id = 0;
        try {
            id = std::stoul(it.key(), &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != it.key().size()) throw SchemaError("colouring key is not an edge id");
        if (id >= c.coloring.size()) {
            report.violations.push_back({"colouring names a skeleton edge that does not exist", {}, {}});
            continue;
        }
        if (!it.value().is_array()) throw SchemaError("colour set must be an array");
        for (const auto& cv : it.value()) {
            auto x = as_id(cv, "colour");
            if (x < 1 || x > 3) throw SchemaError("colours are 1, 2 or 3");
            c.coloring[id] |= color_bit(static_cast<int>(x));
        }
    }
    if (!report.ok()) return;

    auto r = verify_skeleton(g, c);
    append(report, r, "");
    if (!r.ok()) return;
    append(report, verify_triple(g, lift_triple(g, c)), "lifted triple: ");
}

}  // namespace

Json graph_to_json(const Graph& g) {
    if (g.is_simple()) return Json{{"format", "graph6"}, {"data", write_graph6(g)}};
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"format", "edgelist"}, {"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
    const Json& format = field(j, "format");
    if (format == "graph6") {
        const Json& data = field(j, "data");
        if (!data.is_string()) throw SchemaError("graph6 data must be a string");
        return parse_graph6(data.get<std::string>());
    }
    if (format == "edgelist") {
        std::size_t n = as_id(field(j, "n"), "vertex count");
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto& p : array_field(j, "edges")) edges.push_back(as_pair(p));
        try {
            return Graph(n, edges);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("graph echo: ") + e.what());
        }
    }
    throw SchemaError("graph format must be \"graph6\" or \"edgelist\"");
}

Json edge_set_to_json(const Graph& g, const EdgeSet& s) {
    auto ids = s.ids();
    return Json{{"edges", pair_array(g, ids)}, {"ids", id_array(ids)}};
}

Json triple_to_json(const Graph& g, const TripleCertificate& t) {
    return Json{{"type", "triple"},
                {"graph", graph_to_json(g)},
                {"matchings", {edge_set_to_json(g, t.m1), edge_set_to_json(g, t.m2), edge_set_to_json(g, t.m3)}}};
}

Json structural_to_json(const Graph& g, const StructuralCertificate& c) {
    if (auto* f = std::get_if<EvenTwoFactorCertificate>(&c.witness)) {
        Json cycles = Json::array();
        for (const auto& cyc : factor_cycles(g, f->factor)) cycles.push_back(id_array(cyc));
        return Json{{"type", "even2factor"},
                    {"graph", graph_to_json(g)},
                    {"clause", to_string(c.clause())},
                    {"factor", edge_set_to_json(g, f->factor)},
                    {"cycles", std::move(cycles)}};
    }
    const auto& s = std::get<SkeletonCertificate>(c.witness);
    Json sk_edges = Json::array();
    for (const auto& e : s.skeleton.edges()) sk_edges.push_back({e.u, e.v});
    Json chains = Json::array();
    for (const auto& ch : s.chain_map) chains.push_back(id_array(ch));
    Json coloring = Json::object();
    for (std::size_t i = 0; i < s.coloring.size(); ++i) coloring[std::to_string(i)] = colour_array(s.coloring[i]);
    Json cycles = Json::array();
    for (const auto& cyc : s.even_cycles) cycles.push_back(id_array(cyc));
    return Json{{"type", "skeleton"},
                {"graph", graph_to_json(g)},
                {"clause", to_string(c.clause())},
                {"spanning", edge_set_to_json(g, s.spanning)},
                {"branch_vertices", s.branch_vertices},
                {"skeleton", {{"n", s.skeleton.vertex_count()}, {"edges", std::move(sk_edges)}}},
                {"chain_map", std::move(chains)},
                {"coloring", std::move(coloring)},
                {"even_cycles", std::move(cycles)}};
}

Json check_report(const Graph& g, const CheckResult& r, std::uint64_t budget) {
    const Verdict& v = r.verdict;
    Json stages = Json::array();
    for (const auto& s : r.stages) stages.push_back({{"stage", s.stage}, {"outcome", s.outcome}, {"nodes", s.nodes}});
    Json out{{"verdict", to_string(v.kind)},
             {"stage", v.stage},
             {"exhausted", v.exhausted},
             {"nodes", v.nodes},
             {"budget", budget},
             {"detail", v.detail},
             {"graph", graph_to_json(g)},
             {"stages", std::move(stages)},
             {"disagreement", r.disagreement},
             {"certificate", v.triple ? triple_to_json(g, *v.triple) : Json(nullptr)}};
    if (v.structural) out["structural_certificate"] = structural_to_json(g, *v.structural);
    return out;
}

Json cross_validation_to_json(const CrossValidation& cv) {
    return Json{{"direct", to_string(cv.direct.kind)},
                {"direct_nodes", cv.direct.nodes},
                {"structural", to_string(cv.structural.kind)},
                {"structural_nodes", cv.structural.nodes},
                {"disagree", !cv.agree()}};
}

Json decomposition_to_json(const Graph& g, const GallaiEdmondsDecomposition& d,
                           const GallaiEdmondsReport& r) {
    Json comps = Json::array();
    for (const auto& c : d.components)
        comps.push_back({{"vertices", c.vertices.ids()},
                         {"size", c.vertices.count()},
                         {"t", c.t},
                         {"factor_critical", is_factor_critical(g, c.vertices)}});
    return Json{{"graph", graph_to_json(g)},
                {"matching_number", d.matching_number},
                {"deficiency", g.vertex_count() - 2 * d.matching_number},
                {"D", d.d.ids()},
                {"A", d.a.ids()},
                {"C", d.c.ids()},
                {"omega", d.omega()},
                {"omega_one", d.omega_one()},
                {"components", std::move(comps)},
                {"properties",
                 {{"partition", r.partition},
                  {"components_factor_critical", r.components_factor_critical},
                  {"c_has_perfect_matching", r.c_has_perfect_matching},
                  {"a_matched_to_distinct_components", r.a_matches_distinct_components},
                  {"deficiency_identity", r.deficiency_identity},
                  {"t_parity", r.t_parity},
                  {"all", r.all()}}}};
}

namespace {

const Json& certificate_part(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("certificate must be a JSON object");
    if (!doc.contains("type") && doc.contains("certificate")) {
        const Json& c = doc.at("certificate");
        if (c.is_null()) throw SchemaError("report carries no certificate");
        return c;
    }
    return doc;
}

}  // namespace

Graph echoed_graph(const Json& doc) {
    const Json& c = certificate_part(doc);
    if (c.contains("graph")) return graph_from_json(c.at("graph"));
    if (doc.contains("graph")) return graph_from_json(doc.at("graph"));
    throw SchemaError("document carries no graph echo");
}

VerificationReport verify_certificate_json(const Graph& g, const Json& doc) {
    try {
        const Json& c = certificate_part(doc);
        VerificationReport report;
        if (c.contains("graph")) {
            Graph echo = graph_from_json(c.at("graph"));
            if (!(echo == g)) {
                report.violations.push_back({"graph echo does not match the input graph", {}, {}});
                return report;
            }
        }
        const Json& type = field(c, "type");
        if (type == "triple") {
            verify_triple_doc(g, c, report);
        } else if (type == "even2factor") {
            verify_factor_doc(g, c, report);
        } else if (type == "skeleton") {
            verify_skeleton_doc(g, c, report);
        } else {
            throw SchemaError("unknown certificate type");
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(e.what());
    } catch (const ParseError& e) {
        throw SchemaError(std::string("graph echo: ") + e.what());
    }
}

}  // namespace tripm
