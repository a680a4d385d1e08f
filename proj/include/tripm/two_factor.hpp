#pragma once

#include <vector>

#include "tripm/budget.hpp"
#include "tripm/certificates.hpp"

namespace tripm {

/// Backtracking search for a 2-factor with only even cycles. Branches on the
/// lowest vertex still short of degree 2; partial paths whose closing edge
/// would make an odd cycle are cut immediately. Parallel edges may form a
/// 2-cycle.
SearchOutcome<EvenTwoFactorCertificate> find_even_2factor(const Graph& g, SearchBudget& budget);

/// Cycles of a 2-factor as edge ids in traversal order. Each cycle starts at
/// its lowest vertex and leaves it along the lowest-id factor edge there.
/// Throws std::invalid_argument if `factor` is not a 2-factor.
std::vector<std::vector<EdgeId>> factor_cycles(const Graph& g, const EdgeSet& factor);

/// Alternates around every cycle: first edge into M1, second into M2, and
/// so on; M3 = M2. Throws MalformedCertificate on an odd cycle.
TripleCertificate triple_from_even_2factor(const Graph& g, const EvenTwoFactorCertificate& c);

}  // namespace tripm
