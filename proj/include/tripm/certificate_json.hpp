#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tripm/certificates.hpp"
#include "tripm/check.hpp"
#include "tripm/gallai_edmonds.hpp"
#include "tripm/verify.hpp"

namespace tripm {

using Json = nlohmann::ordered_json;

/// The JSON document does not have the expected shape.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"format": "graph6", "data": ...} for simple graphs, otherwise
/// {"format": "edgelist", "n": ..., "edges": [[u, v], ...]}.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"edges": [[u, v], ...], "ids": [...]}, both in edge-id order.
Json edge_set_to_json(const Graph& g, const EdgeSet& s);

Json triple_to_json(const Graph& g, const TripleCertificate& t);
Json structural_to_json(const Graph& g, const StructuralCertificate& c);

/// Single-graph report as printed by `check`.
Json check_report(const Graph& g, const CheckResult& r, std::uint64_t budget);
Json cross_validation_to_json(const CrossValidation& cv);

Json decomposition_to_json(const Graph& g, const GallaiEdmondsDecomposition& d,
                           const GallaiEdmondsReport& r);

/// Checks a certificate document (or a check report, whose "certificate" is
/// used) against g. Structural certificates are verified as such and then
/// lifted or alternated into a triple that is verified too. Edge references
/// may give ids, pairs or both; disagreements become violations. A graph
/// echo that differs from g is a violation. Throws SchemaError on
/// malformed documents.
VerificationReport verify_certificate_json(const Graph& g, const Json& doc);

/// The graph echoed by a certificate or report document.
Graph echoed_graph(const Json& doc);

}  // namespace tripm
