#include "tripm/commands.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tripm/certificate_json.hpp"
#include "tripm/check.hpp"
#include "tripm/gallai_edmonds.hpp"
#include "tripm/generators.hpp"
#include "tripm/io.hpp"

namespace tripm::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path);
    buf << f.rdbuf();
    return buf.str();
}

void strip_eol(std::string& line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
}

std::string describe(const ParseError& e) {
    std::ostringstream msg;
    msg << "parse error: " << e.what();
    if (e.line()) msg << " (line " << e.line() << ", offset " << e.offset() << ")";
    else msg << " (offset " << e.offset() << ")";
    return msg.str();
}

Graph read_graph(const std::string& text, Format format) {
    if (format == Format::edgelist) return parse_edge_list(text);
    std::istringstream lines(text);
    std::string line, found;
    std::size_t number = 0, found_at = 0;
    while (std::getline(lines, line)) {
        ++number;
        strip_eol(line);
        if (line.empty()) continue;
        if (!found.empty()) throw InputError("expected one graph6 line, found another at line " + std::to_string(number));
        found = line;
        found_at = number;
    }
    if (found.empty()) throw InputError("no graph in input");
    try {
        return parse_graph6(found);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), found_at, e.offset());
    }
}

int exit_for(VerdictKind k) {
    switch (k) {
        case VerdictKind::admissible: return kAdmissible;
        case VerdictKind::not_admissible: return kNotAdmissible;
        case VerdictKind::unknown: return kUnknown;
        case VerdictKind::ineligible: return kIneligible;
    }
    return kInputError;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << j.dump(2) << '\n';
    if (!f) throw InputError("cannot write " + path);
}

// Runs `body`, mapping input problems to exit code 4 with a message.
template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << describe(e) << '\n';
    } catch (const SchemaError& e) {
        err << "certificate schema error: " << e.what() << '\n';
    } catch (const nlohmann::json::parse_error& e) {
        err << "invalid JSON: " << e.what() << '\n';
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const UnsupportedMultigraph& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

}  // namespace

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    const char* env = std::getenv("TRIPM_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    std::string s(env);
    if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 19)
        throw std::invalid_argument("TRIPM_BUDGET must be a non-negative integer, got \"" + s + "\"");
    return std::stoull(s);
}

int run_check(const CheckArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Graph g = read_graph(read_text(args.input, in), args.format);
        std::uint64_t budget = resolve_budget(args.budget);
        CheckResult r = check(g, budget);
        Json report = check_report(g, r, budget);
        if (args.cross_validate && r.verdict.kind != VerdictKind::ineligible)
            report["cross_validation"] = cross_validation_to_json(cross_validate(g, budget));
        if (!args.cert_out.empty() && r.verdict.triple)
            write_json_file(args.cert_out, triple_to_json(g, *r.verdict.triple));
        out << report.dump(2) << '\n';
        return exit_for(r.verdict.kind);
    });
}

namespace {

struct SurveyItem {
    std::size_t line = 0;
    std::string text;
    std::string record;
    std::string verdict;
    bool disagree = false;
};

void survey_one(SurveyItem& item, std::uint64_t budget, bool cross, const std::string& cert_dir) {
    auto start = std::chrono::steady_clock::now();
    Json rec{{"line", item.line}, {"graph6", item.text}};
    try {
        Graph g = parse_graph6(item.text);
        CheckResult r = check(g, budget);
        item.verdict = std::string(to_string(r.verdict.kind));
        rec["verdict"] = item.verdict;
        rec["stage"] = r.verdict.stage;
        rec["nodes"] = r.verdict.nodes;
        if (r.verdict.triple) {
            Json cert = triple_to_json(g, *r.verdict.triple);
            if (cert_dir.empty()) {
                rec["certificate"] = std::move(cert);
            } else {
                auto path = std::filesystem::path(cert_dir) / ("line-" + std::to_string(item.line) + ".json");
                write_json_file(path.string(), cert);
                rec["certificate_path"] = path.string();
            }
        } else {
            rec["detail"] = r.verdict.detail;
        }
        if (cross && r.verdict.kind != VerdictKind::ineligible) {
            auto cv = cross_validate(g, budget);
            item.disagree = !cv.agree() || r.disagreement;
            rec["cross_validation"] = cross_validation_to_json(cv);
        }
    } catch (const ParseError& e) {
        item.verdict = "error";
        rec["verdict"] = "error";
        rec["error"] = describe(e);
    } catch (const std::exception& e) {
        item.verdict = "error";
        rec["verdict"] = "error";
        rec["error"] = e.what();
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec["elapsed_ms"] = ms;
    item.record = rec.dump();
}

}  // namespace

int run_survey(const SurveyArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::ifstream file;
        std::istream* src = &in;
        if (args.input != "-") {
            file.open(args.input, std::ios::binary);
            if (!file) throw InputError("cannot open " + args.input);
            src = &file;
        }
        std::uint64_t budget = resolve_budget(args.budget);
        if (!args.cert_out.empty()) std::filesystem::create_directories(args.cert_out);
        const int jobs = args.jobs > 0 ? args.jobs : omp_get_max_threads();

        std::map<std::string, std::size_t> counts{
            {"admissible", 0}, {"not-admissible", 0}, {"unknown", 0}, {"ineligible", 0}, {"error", 0}};
        std::size_t total = 0, disagreements = 0, line_no = 0;
        constexpr std::size_t kChunk = 1024;
        std::vector<SurveyItem> chunk;
        std::string line;
        bool more = true;
        while (more) {
            chunk.clear();
            while (chunk.size() < kChunk && (more = static_cast<bool>(std::getline(*src, line)))) {
                ++line_no;
                strip_eol(line);
                if (line.empty()) continue;
                chunk.push_back({line_no, line, {}, {}, false});
            }
            const auto count = static_cast<std::ptrdiff_t>(chunk.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
            for (std::ptrdiff_t i = 0; i < count; ++i) survey_one(chunk[i], budget, args.cross_validate, args.cert_out);
            for (const auto& item : chunk) {
                out << item.record << '\n';
                ++counts[item.verdict];
                ++total;
                if (item.disagree) ++disagreements;
            }
        }
        Json summary{{"total", total}};
        for (const auto& [k, v] : counts) summary[k] = v;
        summary["disagreements"] = disagreements;
        out << Json{{"summary", summary}}.dump() << '\n';
        return 0;
    });
}

int run_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto families = generator_families();
        if (std::find(families.begin(), families.end(), args.family) == families.end())
            throw InputError("unknown family \"" + args.family + "\"");
        if (args.count > 1 && !family_is_seeded(args.family))
            throw InputError("family \"" + args.family + "\" is not seeded; --count must be 1");
        for (std::size_t i = 0; i < args.count; ++i) {
            GeneratorParams p{args.n, args.k, args.seed + i, args.max_vertices};
            Graph g = generate(args.family, p);
            Format f = args.format.value_or(g.is_simple() ? Format::graph6 : Format::edgelist);
            if (f == Format::graph6) {
                out << write_graph6(g) << '\n';
            } else {
                if (i) out << '\n';
                out << write_edge_list(g);
            }
        }
        return 0;
    });
}

int run_verify(const VerifyArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (args.certificate == "-" && args.graph == "-")
            throw InputError("certificate and graph cannot both come from stdin");
        Json doc = Json::parse(read_text(args.certificate, in));
        Graph g = args.graph.empty() ? echoed_graph(doc) : read_graph(read_text(args.graph, in), args.format);
        auto report = verify_certificate_json(g, doc);
        Json violations = Json::array();
        for (const auto& v : report.violations)
            violations.push_back({{"condition", v.condition}, {"edges", v.edges}, {"vertices", v.vertices}});
        out << Json{{"valid", report.ok()}, {"violations", std::move(violations)}}.dump(2) << '\n';
        return report.ok() ? kVerified : kRejected;
    });
}

int run_decompose(const DecomposeArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Graph g = read_graph(read_text(args.input, in), args.format);
        auto d = gallai_edmonds(g);
        out << decomposition_to_json(g, d, check_gallai_edmonds(g, d)).dump(2) << '\n';
        return 0;
    });
}

}  // namespace tripm::cli
