#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tripm/certificates.hpp"

namespace tripm {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct StageRecord {
    std::string stage;
    std::string outcome;  // a verdict kind, "skipped" or "not_applicable"
    std::uint64_t nodes = 0;
};

struct CheckResult {
    Verdict verdict;
    std::vector<StageRecord> stages;
    /// The structural search claimed exhaustion but the direct search found
    /// a triple. Always a bug; surfaced rather than hidden.
    bool disagreement = false;
};

/// Full pipeline: eligibility gate, 4-regular construction, Hamilton
/// cycle, structural search, direct search. The budget is split 10% to the
/// fast paths, 45% structural, 45% direct. Never throws on graph content;
/// graphs that are not matching covered come back ineligible.
CheckResult check(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Runs the structural and direct searches independently with the full
/// budget each and reports both verdicts.
struct CrossValidation {
    Verdict direct;
    Verdict structural;
    bool agree() const;
};
CrossValidation cross_validate(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace tripm
