#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tripm::cli {

enum Exit : int {
    kAdmissible = 0,
    kNotAdmissible = 1,
    kUnknown = 2,
    kIneligible = 3,
    kInputError = 4,
};

// `verify` reuses 0 for a valid certificate and 1 for a rejected one.
inline constexpr int kVerified = 0;
inline constexpr int kRejected = 1;

enum class Format { graph6, edgelist };

/// Budget precedence: explicit flag, then TRIPM_BUDGET, then the default.
/// Throws std::invalid_argument on a malformed environment value.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag);

struct CheckArgs {
    std::string input = "-";  // path, or "-" for stdin
    Format format = Format::graph6;
    std::optional<std::uint64_t> budget;
    bool cross_validate = false;
    std::string cert_out;  // write the certificate here when admissible
};

struct SurveyArgs {
    std::string input = "-";
    std::optional<std::uint64_t> budget;
    int jobs = 0;  // 0: all available cores
    bool cross_validate = false;
    std::string cert_out;  // directory for per-line certificates; inline if empty
};

struct GenerateArgs {
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::size_t max_vertices = 16;
    std::optional<Format> format;  // default: graph6, edge list for multigraphs
};

struct VerifyArgs {
    std::string certificate;
    std::string graph;  // empty: use the graph echoed in the certificate
    Format format = Format::graph6;
};

struct DecomposeArgs {
    std::string input = "-";
    Format format = Format::graph6;
};

int run_check(const CheckArgs& args, std::istream& in, std::ostream& out, std::ostream& err);
int run_survey(const SurveyArgs& args, std::istream& in, std::ostream& out, std::ostream& err);
int run_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);
int run_verify(const VerifyArgs& args, std::istream& in, std::ostream& out, std::ostream& err);
int run_decompose(const DecomposeArgs& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tripm::cli
