#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tripm/certificates.hpp"

namespace tripm {

enum class SkeletonReject {
    none,
    bad_degree,      // a vertex of spanning degree outside {2, 3}
    even_chain,      // a chain between branch vertices has even length
    loop_chain,      // a chain returns to the branch vertex it left
    isolated_cycle,  // a cycle component without branch vertices
    odd_cycle,       // same, of odd length, when cycle components are allowed
};

std::string_view to_string(SkeletonReject r);

struct SkeletonExtraction {
    std::optional<SkeletonCertificate> certificate;  // colouring left empty
    SkeletonReject reason = SkeletonReject::none;
    /// Vertices or edges behind the rejection, for diagnostics.
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

/// Bicontracts a spanning subgraph with degrees in {2, 3} to its cubic
/// skeleton. Without `allow_cycles` every component must contain a branch
/// vertex. With it, branch-free components must be even cycles and are
/// reported in `even_cycles`.
SkeletonExtraction extract_skeleton(const Graph& g, const EdgeSet& spanning,
                                    bool allow_cycles = false);

/// Lifts the skeleton colouring through the chains: the first and every
/// other chain edge take the skeleton edge's colour set S, the rest take the
/// complement; even cycles alternate {1} and {2, 3}. Throws
/// MalformedCertificate if sizes or colour sets are unusable. The result is
/// not verified here.
TripleCertificate lift_triple(const Graph& g, const SkeletonCertificate& c);

}  // namespace tripm
