#pragma once

#include "tripm/budget.hpp"
#include "tripm/certificates.hpp"

namespace tripm {

/// Ground-truth search. Perfect matchings are streamed in enumeration
/// order; when M_j arrives it is paired with every earlier M_i, and a third
/// matching avoiding M_i & M_j is sought by a forbidden-edge matching call.
/// Equal pairs are skipped: (A, A, B) works only if A and B are disjoint, and
/// then the pair (A, B) is found with M3 = B. Each pair costs one budget
/// node on top of the enumeration.
///
/// NotAdmissible is returned only when the enumeration completes; the
/// verdict is then exhaustive. Throws NotMatchingCovered on ineligible input.
Verdict find_triple_direct(const Graph& g, SearchBudget& budget);

}  // namespace tripm
