#pragma once

#include <string>
#include <vector>

#include "tripm/certificates.hpp"

namespace tripm {

struct Violation {
    std::string condition;
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;
};

struct VerificationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// All three sets are perfect matchings of g and their common intersection
/// is empty. Never throws; every failure becomes a violation.
VerificationReport verify_triple(const Graph& g, const TripleCertificate& c);

/// Every vertex has factor degree 2 and every cycle is even.
VerificationReport verify_even_two_factor(const Graph& g, const EvenTwoFactorCertificate& c);

/// Chains are odd paths between the listed branch vertices, internal chain
/// vertices have spanning degree 2, the spanning set is exactly the chains
/// plus the even cycles, the skeleton is cubic, and the colouring gives
/// three perfect matchings of the skeleton covering it with no edge in all
/// three.
VerificationReport verify_skeleton(const Graph& g, const SkeletonCertificate& c);

}  // namespace tripm
