#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tripm/budget.hpp"
#include "tripm/graph.hpp"

namespace tripm {

class Matching {
public:
    Matching() = default;
    /// Throws std::invalid_argument if `edges` is not a matching of `g`.
    Matching(const Graph& g, EdgeSet edges);

    const EdgeSet& edges() const { return edges_; }
    std::size_t size() const { return edges_.count(); }
    /// Covers every vertex of the graph it was built for.
    bool perfect() const { return perfect_; }

    friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

private:
    EdgeSet edges_;
    bool perfect_ = false;
};

bool is_matching(const Graph& g, const EdgeSet& edges);
bool is_perfect_matching(const Graph& g, const EdgeSet& edges);

/// Maximum cardinality matching by augmenting paths with blossom shrinking.
/// Roots are tried in increasing vertex order and neighbours in edge-id
/// order, so the result is a deterministic function of the graph. Where
/// parallel edges join a matched pair the lowest edge id is reported.
Matching max_matching(const Graph& g);
/// Same, using only edges in `allowed`.
Matching max_matching(const Graph& g, const EdgeSet& allowed);

/// A perfect matching containing every edge of `forced` and none of
/// `forbidden`, or nullopt if none exists. Throws std::invalid_argument if
/// `forced` is not a matching or meets `forbidden`.
std::optional<Matching> perfect_matching_with_forced(const Graph& g, const EdgeSet& forced,
                                                     const EdgeSet& forbidden);

enum class EnumerationStatus { complete, budget_exhausted, stopped };

struct EnumerationResult {
    EnumerationStatus status = EnumerationStatus::complete;
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
};

/// Return false to stop the enumeration.
using MatchingVisitor = std::function<bool(const Matching&)>;

/// Streams every perfect matching exactly once. Branches on the lowest
/// uncovered vertex and tries its edges in id order; edges in `forbidden`
/// (if given) are never used. Each branch point costs one budget node.
EnumerationResult enumerate_perfect_matchings(const Graph& g, SearchBudget& budget,
                                              const MatchingVisitor& visit,
                                              const EdgeSet* forbidden = nullptr);

struct MatchingCoverReport {
    bool matching_covered = false;
    bool connected = false;
    /// Per edge: the perfect matching found when that edge is forced, if any.
    std::vector<std::optional<Matching>> witness;
    /// Edges lying in no perfect matching.
    std::vector<EdgeId> uncovered;
};

/// Connected, and every edge lies in some perfect matching.
MatchingCoverReport is_matching_covered(const Graph& g);

/// For every v in `scope`, the subgraph induced by scope - v has a perfect
/// matching. Even-size scopes are never factor-critical.
bool is_factor_critical(const Graph& g, const VertexSet& scope);

/// Size of a maximum matching using only `allowed` edges.
std::size_t matching_number(const Graph& g, const EdgeSet& allowed);

}  // namespace tripm
