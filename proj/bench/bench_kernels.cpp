// Serial reference vs OpenMP timings for the matching-engine kernels, plus
// the survey loop over a seeded graph stream.
//
//   bench_kernels [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>

#include "tripm/commands.hpp"
#include "tripm/generators.hpp"
#include "tripm/io.hpp"
#include "tripm/kernels.hpp"

using namespace tripm;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const char* name, const std::function<void(Exec)>& kernel, int reps) {
    double s = time_ms([&] { kernel(Exec::serial); }, reps);
    double p = time_ms([&] { kernel(Exec::parallel); }, reps);
    std::printf("%-28s %10.2f %10.2f %8.2fx\n", name, s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
    std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);
    std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

    Graph g = random_regular_graph(5, 400, 1);
    EdgeSet all = EdgeSet::full(g.edge_count());
    VertexSet scope = VertexSet::full(g.vertex_count());
    row("deletion_matching_numbers", [&](Exec e) { deletion_matching_numbers(g, all, e); }, reps);
    row("forced_edge_matchings", [&](Exec e) { forced_edge_matchings(g, e); }, reps);
    row("deletion_perfect_flags", [&](Exec e) { deletion_perfect_flags(g, scope, e); }, reps);

    std::string stream;
    for (std::uint64_t seed = 0; seed < 200; ++seed) stream += write_graph6(random_regular_graph(3, 20, seed)) + "\n";
    auto survey = [&](int jobs) {
        std::istringstream in(stream);
        std::ostringstream out, err;
        cli::SurveyArgs args;
        args.jobs = jobs;
        cli::run_survey(args, in, out, err);
    };
    double s = time_ms([&] { survey(1); }, 1);
    double p = time_ms([&] { survey(0); }, 1);
    std::printf("%-28s %10.2f %10.2f %8.2fx\n", "survey (200 cubic, n=20)", s, p, s / p);
}
