#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tripm/certificate_json.hpp"
#include "tripm/commands.hpp"
#include "tripm/generators.hpp"
#include "tripm/io.hpp"
#include "tripm/structural.hpp"

using namespace tripm;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = TRIPM_FIXTURE_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run check_text(const std::string& text, cli::CheckArgs args = {}) {
    std::istringstream in(text);
    std::ostringstream out, err;
    int code = cli::run_check(args, in, out, err);
    return {code, out.str(), err.str()};
}

Run verify_text(const std::string& cert, const std::string& graph_path = "") {
    std::istringstream in(cert);
    std::ostringstream out, err;
    int code = cli::run_verify({"-", graph_path, cli::Format::graph6}, in, out, err);
    return {code, out.str(), err.str()};
}

Run survey_text(const std::string& text, int jobs) {
    std::istringstream in(text);
    std::ostringstream out, err;
    cli::SurveyArgs args;
    args.jobs = jobs;
    int code = cli::run_survey(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> jsonl(const std::string& text) {
    std::vector<Json> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

std::vector<Graph> named_suite() {
    std::vector<Graph> out;
    for (const char* f : {"k4", "k33", "prism", "b8", "petersen", "octahedron", "cube", "dodecahedron",
                          "icosahedron", "carvalho10"})
        out.push_back(generate(f));
    for (std::size_t n : {3, 5, 7, 9}) out.push_back(wheel_graph(n));
    for (std::size_t n : {4, 6, 8}) out.push_back(double_wheel_graph(n));
    return out;
}

}  // namespace

TEST_CASE("check output verifies for every named graph") {
    for (const Graph& g : named_suite()) {
        Run r = check_text(write_graph6(g));
        INFO(write_graph6(g));
        REQUIRE(r.code == cli::kAdmissible);
        Json report = Json::parse(r.out);
        CHECK(report["verdict"] == "admissible");
        CHECK(verify_certificate_json(g, report).ok());
        CHECK(verify_certificate_json(g, report["certificate"]).ok());
        // graph echo alone is enough to verify
        Run v = verify_text(report.dump());
        CHECK(v.code == cli::kVerified);
    }
}

TEST_CASE("tampered certificates are rejected with a named violation") {
    Graph g = generate("petersen");
    Json cert = Json::parse(check_text(write_graph6(g)).out)["certificate"];
    REQUIRE(verify_certificate_json(g, cert).ok());

    SUBCASE("dropped edge") {
        auto& m1 = cert["matchings"][0];
        m1["edges"].erase(m1["edges"].begin());
        m1["ids"].erase(m1["ids"].begin());
        Run v = verify_text(cert.dump());
        CHECK(v.code == cli::kRejected);
        CHECK(v.out.find("m1 is not a perfect matching") != std::string::npos);
    }
    SUBCASE("three copies of one matching") {
        cert["matchings"][1] = cert["matchings"][0];
        cert["matchings"][2] = cert["matchings"][0];
        auto r = verify_certificate_json(g, cert);
        REQUIRE_FALSE(r.ok());
        CHECK(r.violations[0].condition == "common intersection is not empty");
    }
    SUBCASE("ids disagree with pairs") {
        auto& ids = cert["matchings"][0]["ids"];
        ids[0] = ids[0].get<unsigned>() == 0 ? 1u : 0u;
        CHECK_FALSE(verify_certificate_json(g, cert).ok());
    }
    SUBCASE("echo of another graph") {
        cert["graph"] = graph_to_json(generate("cube"));
        CHECK_FALSE(verify_certificate_json(g, cert).ok());
    }
}

TEST_CASE("malformed documents are input errors") {
    CHECK(verify_text("{").code == cli::kInputError);
    CHECK(verify_text(R"({"type":"triple"})").code == cli::kInputError);
    CHECK(verify_text(R"({"type":"triple","graph":{"format":"graph6","data":"Cs"},"matchings":[]})").code ==
          cli::kInputError);
    CHECK(verify_text(R"({"type":"bogus","graph":{"format":"graph6","data":"Cs"}})").code == cli::kInputError);

    Run bad = check_text("C~\nC~\n");
    CHECK(bad.code == cli::kInputError);
    Run garbage = check_text("C\x7f\n");
    CHECK(garbage.code == cli::kInputError);
    CHECK(garbage.err.find("parse error") != std::string::npos);
}

TEST_CASE("check exit codes") {
    CHECK(check_text("A_").code == cli::kNotAdmissible);
    CHECK(check_text(write_graph6(generate("no_pm_cubic16"))).code == cli::kIneligible);
    CHECK(check_text(write_graph6(cycle_graph(5))).code == cli::kIneligible);
    cli::CheckArgs tiny;
    tiny.budget = 1;
    CHECK(check_text(write_graph6(generate("dodecahedron")), tiny).code == cli::kUnknown);

    cli::CheckArgs edges;
    edges.format = cli::Format::edgelist;
    CHECK(check_text(write_edge_list(generate("theta")), edges).code == cli::kAdmissible);
}

TEST_CASE("structural certificates verify and lift") {
    std::ifstream f(kFixtures / "wheel5_skeleton.json");
    Json doc = Json::parse(f);
    Graph w5 = wheel_graph(5);
    CHECK(verify_certificate_json(w5, doc).ok());

    Json broken = doc;
    broken["coloring"]["0"] = {2};
    CHECK_FALSE(verify_certificate_json(w5, broken).ok());

    SearchBudget budget(1'000'000);
    Verdict v = structural_check(w5, budget, StructuralMode::bisubdivision_only);
    REQUIRE(v.structural);
    Json emitted = structural_to_json(w5, *v.structural);
    CHECK(emitted["type"] == "skeleton");
    CHECK(verify_certificate_json(w5, emitted).ok());

    SearchBudget b2(1'000'000);
    Graph cube = generate("cube");
    Verdict c = structural_check(cube, b2);
    REQUIRE(c.structural);
    CHECK(verify_certificate_json(cube, structural_to_json(cube, *c.structural)).ok());
}

TEST_CASE("labelled fixtures verify") {
    for (const char* name : {"wheel7_labelled", "double_wheel8_labelled", "octahedron_labelled",
                             "icosahedron_labelled", "carvalho10_labelled"}) {
        INFO(name);
        std::ostringstream out, err;
        std::istringstream in;
        cli::VerifyArgs args{(kFixtures / (std::string(name) + ".json")).string(),
                             (kFixtures / (std::string(name) + ".g6")).string(), cli::Format::graph6};
        CHECK(cli::run_verify(args, in, out, err) == cli::kVerified);
    }
}

TEST_CASE("survey keeps input order regardless of jobs") {
    std::string input;
    for (const char* f : {"petersen", "cube", "k4", "no_pm_cubic16", "octahedron"})
        input += write_graph6(generate(f)) + "\n";
    input += "A_\n\nnot-a-graph\n" + write_graph6(wheel_graph(7)) + "\n";

    Run one = survey_text(input, 1);
    Run many = survey_text(input, 4);
    REQUIRE(one.code == 0);
    auto a = jsonl(one.out), b = jsonl(many.out);
    REQUIRE(a.size() == 9);
    REQUIRE(b.size() == a.size());
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        CHECK(a[i]["line"] == b[i]["line"]);
        CHECK(a[i]["verdict"] == b[i]["verdict"]);
    }
    CHECK(a[5]["verdict"] == "not-admissible");
    CHECK(a[6]["line"] == 8);
    CHECK(a[6]["verdict"] == "error");
    const Json& s = a.back()["summary"];
    CHECK(s["total"] == 8);
    CHECK(s["admissible"] == 5);
    CHECK(s["ineligible"] == 1);
    CHECK(s["not-admissible"] == 1);
    CHECK(s["error"] == 1);
    CHECK(s["disagreements"] == 0);
}

TEST_CASE("survey of an empty stream") {
    Run r = survey_text("", 1);
    CHECK(r.code == 0);
    auto recs = jsonl(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["summary"]["total"] == 0);
    CHECK(recs[0]["summary"]["admissible"] == 0);
}

TEST_CASE("generate is deterministic") {
    auto run = [](cli::GenerateArgs a) {
        std::ostringstream out, err;
        REQUIRE(cli::run_generate(a, out, err) == 0);
        return out.str();
    };
    cli::GenerateArgs h;
    h.family = "halin";
    h.seed = 11;
    h.count = 4;
    CHECK(run(h) == run(h));
    cli::GenerateArgs r;
    r.family = "random_regular";
    r.k = 4;
    r.n = 12;
    r.seed = 3;
    CHECK(run(r) == run(r));
    CHECK(run(r) == write_graph6(random_regular_graph(4, 12, 3)) + "\n");

    cli::GenerateArgs bad;
    bad.family = "petersen";
    bad.count = 2;
    std::ostringstream out, err;
    CHECK(cli::run_generate(bad, out, err) == cli::kInputError);
}

TEST_CASE("decompose") {
    auto decompose = [](const Graph& g) {
        std::istringstream in(write_graph6(g));
        std::ostringstream out, err;
        REQUIRE(cli::run_decompose({}, in, out, err) == 0);
        return Json::parse(out.str());
    };
    Json p = decompose(generate("petersen"));
    CHECK(p["D"].empty());
    CHECK(p["A"].empty());
    CHECK(p["C"].size() == 10);

    Json c5 = decompose(cycle_graph(5));
    CHECK(c5["D"].size() == 5);
    CHECK(c5["A"].empty());
}

TEST_CASE("budget resolution") {
    CHECK(cli::resolve_budget(42) == 42);
    ::setenv("TRIPM_BUDGET", "1234", 1);
    CHECK(cli::resolve_budget(std::nullopt) == 1234);
    ::setenv("TRIPM_BUDGET", "1e6", 1);
    CHECK_THROWS_AS(cli::resolve_budget(std::nullopt), std::invalid_argument);
    ::unsetenv("TRIPM_BUDGET");
    CHECK(cli::resolve_budget(std::nullopt) == kDefaultBudget);
}
