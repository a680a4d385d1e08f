#include "tripm/certificates.hpp"

#include "tripm/matching.hpp"

namespace tripm {

std::string_view to_string(Clause c) {
    switch (c) {
        case Clause::two_factor: return "two_factor";
        case Clause::bisubdivision: return "bisubdivision";
        case Clause::mixed: return "mixed";
    }
    return "?";
}

std::string_view to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::admissible: return "admissible";
        case VerdictKind::not_admissible: return "not-admissible";
        case VerdictKind::unknown: return "unknown";
        case VerdictKind::ineligible: return "ineligible";
    }
    return "?";
}

Clause StructuralCertificate::clause() const {
    if (std::holds_alternative<EvenTwoFactorCertificate>(witness)) return Clause::two_factor;
    const auto& sk = std::get<SkeletonCertificate>(witness);
    if (sk.skeleton.vertex_count() == 0) return Clause::two_factor;
    return sk.even_cycles.empty() ? Clause::bisubdivision : Clause::mixed;
}

void require_matching_covered(const Graph& g) {
    if (g.vertex_count() == 0) throw NotMatchingCovered("empty graph");
    if (g.vertex_count() % 2) throw NotMatchingCovered("odd number of vertices");
    auto report = is_matching_covered(g);
    if (!report.connected) throw NotMatchingCovered("graph is disconnected");
    if (!report.uncovered.empty())
        throw NotMatchingCovered("edge " + std::to_string(report.uncovered.front()) +
                                 " lies in no perfect matching");
}

}  // namespace tripm
