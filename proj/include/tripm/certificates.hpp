#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tripm/graph.hpp"

namespace tripm {

/// Three perfect matchings with empty common intersection.
struct TripleCertificate {
    EdgeSet m1;
    EdgeSet m2;
    EdgeSet m3;

    friend bool operator==(const TripleCertificate&, const TripleCertificate&) = default;
};

/// A 2-factor whose cycles all have even length.
struct EvenTwoFactorCertificate {
    EdgeSet factor;
};

/// Colours 1..3 as bits 0..2.
using ColorSet = std::uint8_t;
inline constexpr ColorSet color_bit(int color) { return static_cast<ColorSet>(1u << (color - 1)); }
inline constexpr ColorSet kAllColors = 0b111;

/// A spanning subgraph that bicontracts to a cubic skeleton, plus even cycle
/// components handled by alternation.
struct SkeletonCertificate {
    EdgeSet spanning;
    Graph skeleton;
    /// Skeleton vertex -> vertex of the host graph (increasing).
    std::vector<VertexId> branch_vertices;
    /// Skeleton edge -> host edge ids along its chain, starting at the
    /// endpoint with the smaller skeleton id. Length is odd.
    std::vector<std::vector<EdgeId>> chain_map;
    /// Skeleton edge -> colour set. Empty until coloured.
    std::vector<ColorSet> coloring;
    /// Cycle components of the spanning subgraph with no branch vertex, each
    /// as host edge ids in traversal order.
    std::vector<std::vector<EdgeId>> even_cycles;
};

/// Which condition of the characterisation a structural witness satisfies
/// literally: an even 2-factor, a spanning bisubdivision of a cubic graph, or
/// a mix of both kinds of component.
enum class Clause { two_factor, bisubdivision, mixed };

std::string_view to_string(Clause c);

struct StructuralCertificate {
    std::variant<EvenTwoFactorCertificate, SkeletonCertificate> witness;

    Clause clause() const;
};

enum class VerdictKind { admissible, not_admissible, unknown, ineligible };

std::string_view to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::unknown;
    /// Present iff admissible.
    std::optional<TripleCertificate> triple;
    std::optional<StructuralCertificate> structural;
    /// Routine that produced the verdict.
    std::string stage;
    std::uint64_t nodes = 0;
    /// True only when the whole search space was covered.
    bool exhausted = false;
    /// Searched-space summary, budget report or ineligibility reason.
    std::string detail;
};

/// The input is not matching covered.
class NotMatchingCovered : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A certificate is structurally unusable (wrong sizes, bad chains...).
class MalformedCertificate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws NotMatchingCovered with a reason if `g` is not matching covered.
void require_matching_covered(const Graph& g);

}  // namespace tripm
