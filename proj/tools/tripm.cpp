#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "tripm/commands.hpp"

using namespace tripm::cli;

int main(int argc, char** argv) {
    CLI::App app{"Three-perfect-matching admissibility: check, survey, verify, generate, decompose"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"graph6", Format::graph6}, {"edgelist", Format::edgelist}};
    auto add_format = [&](CLI::App* cmd, Format& target) {
        cmd->add_option("--format", target, "Input format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    CheckArgs check;
    std::uint64_t check_budget = 0;
    auto* c = app.add_subcommand("check", "Decide one graph and print a JSON report");
    c->add_option("input", check.input, "Graph file, - for stdin");
    add_format(c, check.format);
    auto* cb = c->add_option("--budget", check_budget, "Search-node budget (overrides TRIPM_BUDGET)");
    c->add_flag("--cross-validate", check.cross_validate, "Also run direct and structural searches separately");
    c->add_option("--cert-out", check.cert_out, "Write the triple certificate to this file");

    SurveyArgs survey;
    std::uint64_t survey_budget = 0;
    auto* s = app.add_subcommand("survey", "Decide a graph6 stream, one JSON record per line");
    s->add_option("input", survey.input, "graph6 file, - for stdin");
    auto* sb = s->add_option("--budget", survey_budget, "Search-node budget per graph");
    s->add_option("--jobs", survey.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    s->add_flag("--cross-validate", survey.cross_validate, "Compare direct and structural verdicts per graph");
    s->add_option("--cert-out", survey.cert_out, "Directory for certificates instead of inline JSON");

    GenerateArgs gen;
    std::string gen_format;
    auto* g = app.add_subcommand("generate", "Emit named or seeded graphs");
    g->add_option("family", gen.family, "Family name")->required();
    g->add_option("--n", gen.n, "Order or rim size");
    g->add_option("--k", gen.k, "Degree for random_regular");
    g->add_option("--seed", gen.seed, "Seed of the first graph; graph i uses seed + i");
    g->add_option("--count", gen.count, "Number of graphs")->check(CLI::PositiveNumber);
    g->add_option("--max-vertices", gen.max_vertices, "Size cap for halin");
    g->add_option("--format", gen_format, "Output format (default: graph6, edgelist for multigraphs)")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check a certificate against a graph");
    v->add_option("certificate", verify.certificate, "Certificate or check report JSON, - for stdin")->required();
    v->add_option("--graph", verify.graph, "Graph file (default: the graph echoed in the certificate)");
    add_format(v, verify.format);

    DecomposeArgs dec;
    auto* d = app.add_subcommand("decompose", "Print the Gallai-Edmonds decomposition as JSON");
    d->add_option("input", dec.input, "Graph file, - for stdin");
    add_format(d, dec.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    if (*c) {
        if (*cb) check.budget = check_budget;
        return run_check(check, std::cin, std::cout, std::cerr);
    }
    if (*s) {
        if (*sb) survey.budget = survey_budget;
        return run_survey(survey, std::cin, std::cout, std::cerr);
    }
    if (*g) {
        if (!gen_format.empty()) gen.format = gen_format == "graph6" ? Format::graph6 : Format::edgelist;
        return run_generate(gen, std::cout, std::cerr);
    }
    if (*v) return run_verify(verify, std::cin, std::cout, std::cerr);
    return run_decompose(dec, std::cin, std::cout, std::cerr);
}
