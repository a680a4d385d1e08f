#pragma once

#include <optional>
#include <string_view>

#include "tripm/budget.hpp"
#include "tripm/certificates.hpp"
#include "tripm/matching.hpp"

namespace tripm {

enum class FourRegularStep {
    disjoint_pair,          // G - M1 has a perfect matching M2; M3 = M2
    factor_critical_split,  // G - M1 has none; built from the decomposition of G - M1
    fallback,               // neither applied; direct search
};

std::string_view to_string(FourRegularStep s);

struct FourRegularResult {
    Verdict verdict;
    FourRegularStep step = FourRegularStep::fallback;
    /// The pair of M1 edges used by the split step.
    std::optional<EdgeId> e;
    std::optional<EdgeId> f;
};

/// Constructive procedure for 3-connected 4-regular simple graphs of even
/// order: pick M1, match G - M1 if possible, otherwise use the decomposition
/// of G - M1 to choose two M1 edges e, f and force M2 through e and M3
/// through f. Throws std::invalid_argument outside that class.
FourRegularResult four_regular_fastpath(const Graph& g, SearchBudget& budget);

/// Same procedure with the first matching supplied.
FourRegularResult four_regular_from_matching(const Graph& g, const Matching& m1,
                                             SearchBudget& budget);

}  // namespace tripm
