#pragma once

#include <cstddef>
#include <vector>

#include "tripm/graph.hpp"

namespace tripm {

struct DComponent {
    VertexSet vertices;
    /// Edges joining this component to A, with multiplicity.
    std::size_t t = 0;
};

/// The canonical (D, A, C) partition. D holds the vertices some maximum
/// matching leaves exposed, A = N(D) \ D, C the rest.
struct GallaiEdmondsDecomposition {
    VertexSet d;
    VertexSet a;
    VertexSet c;
    /// One record per component of G[D], ordered by smallest vertex.
    std::vector<DComponent> components;
    std::size_t matching_number = 0;

    std::size_t omega() const { return components.size(); }
    std::size_t omega_one() const;
};

/// D is found by the deletion test: v is in D iff removing v leaves the
/// matching number unchanged.
GallaiEdmondsDecomposition gallai_edmonds(const Graph& g);

/// Structure-theorem consequences, each checked independently.
struct GallaiEdmondsReport {
    bool partition = false;             // D, A, C partition V
    bool components_factor_critical = false;
    bool c_has_perfect_matching = false;
    bool a_matches_distinct_components = false;
    bool deficiency_identity = false;   // n - 2 nu == omega - |A|
    bool t_parity = false;              // t == |D'| mod 2 when the graph is cubic; true otherwise

    bool all() const {
        return partition && components_factor_critical && c_has_perfect_matching &&
               a_matches_distinct_components && deficiency_identity && t_parity;
    }
};

GallaiEdmondsReport check_gallai_edmonds(const Graph& g, const GallaiEdmondsDecomposition& dec);

}  // namespace tripm
