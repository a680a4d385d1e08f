#pragma once

#include "tripm/budget.hpp"
#include "tripm/certificates.hpp"

namespace tripm {

/// Decides admissibility through the structural characterisation: first an
/// even 2-factor, then spanning subgraphs with degrees in {2, 3} whose
/// chains are odd and whose skeleton is 3-edge-colourable. Even cycle
/// components may sit beside skeleton components. An admissible verdict
/// carries both the structural witness and its lifted, verified triple.
/// Throws NotMatchingCovered on ineligible input.
///
/// `bisubdivision_only` skips the 2-factor stage and accepts only spanning
/// subgraphs in which every component has a branch vertex, so the witness
/// is a literal bisubdivision even when an even 2-factor exists.
enum class StructuralMode { any, bisubdivision_only };

Verdict structural_check(const Graph& g, SearchBudget& budget,
                         StructuralMode mode = StructuralMode::any);

}  // namespace tripm
