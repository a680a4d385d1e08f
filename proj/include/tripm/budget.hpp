#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace tripm {

/// Node allowance for an exponential search. Counted in search-tree nodes,
/// never wall time, so results are reproducible.
class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

    /// Charges `nodes`; false (and the budget is marked exhausted) if that
    /// would exceed the limit.
    bool spend(std::uint64_t nodes = 1) {
        if (nodes > limit_ - used_) {
            used_ = limit_;
            exhausted_ = true;
            return false;
        }
        used_ += nodes;
        return true;
    }

    std::uint64_t limit() const { return limit_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t remaining() const { return limit_ - used_; }
    bool exhausted() const { return exhausted_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    bool exhausted_ = false;
};

enum class SearchStatus {
    found,             // a witness was produced
    exhausted,         // the whole space was searched, nothing exists
    budget_exhausted,  // gave up; nothing is known
};

inline std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

template <typename T>
struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<T> value;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::found; }
};

}  // namespace tripm
