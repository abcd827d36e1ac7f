// bench: experiment runner and instance plumbing over the tessera C API.
//
//   bench run --experiment mst --family gnp --sizes 100,200 --reps 10 --seed 1 --out results.csv
//   bench generate rmat scale=10 --format dimacs-sp --out rmat10.gr
//   bench convert --from csv --to graph6 --in g.csv --out g.g6
//
// Exit status: 0 ok, 2 usage error, 1 runtime error.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tessera/tessera.h"

namespace {

constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kUsage = 2;

int report(tsr_status s, const char* what) {
    if (s == TSR_OK) return kOk;
    std::fprintf(stderr, "bench %s: %s: %s\n", what, tsr_status_string(s), tsr_last_error());
    return s == TSR_ERR_INVALID_ARGUMENT ? kUsage : kRuntime;
}

const std::vector<std::string> kFormats{"dimacs-sp", "dimacs-color", "csv", "graph6", "sparse6", "dot"};

struct GraphHandle {
    tsr_graph* g = nullptr;
    ~GraphHandle() { tsr_graph_destroy(g); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tessera benchmark harness"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "time algorithms over an instance family and write CSV");
    std::string experiment, family, backend = "adjacency", out = "-", input;
    std::vector<std::size_t> sizes;
    std::size_t reps = 10, sources = 10;
    std::uint64_t seed = 0;
    run->add_option("--experiment", experiment, "dijkstra|pagerank|mst|maxflow|backend_bundle|memory|noop")
        ->required()
        ->check(CLI::IsMember({"dijkstra", "pagerank", "mst", "maxflow", "backend_bundle", "memory", "noop"}));
    run->add_option("--family", family, "gnp|barabasi-albert|rmat|washington-wide|washington-long|"
                                        "genrmf-long|genrmf-flat|genrmf-square|dimacs")
        ->required();
    run->add_option("--sizes", sizes, "comma-separated instance sizes")->delimiter(',');
    run->add_option("--reps", reps, "instances per size")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "first instance seed");
    run->add_option("--backend", backend, "adjacency|csr|all")->check(CLI::IsMember({"adjacency", "csr", "all"}));
    run->add_option("--input", input, "DIMACS sp file for --family dimacs");
    run->add_option("--sources", sources, "random Dijkstra sources on file input")->check(CLI::PositiveNumber);
    run->add_option("--out", out, "output CSV path, - for stdout");

    // generate
    auto* gen = app.add_subcommand("generate", "write a generated instance");
    std::string model, gen_format = "dimacs-sp", gen_out = "-";
    std::vector<std::string> params;
    std::uint64_t gen_seed = 0;
    gen->add_option("model", model, "generator model, e.g. rmat, gnp, rmfgen")->required();
    gen->add_option("params", params, "key=value generator parameters");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--format", gen_format, "output format")->check(CLI::IsMember(kFormats));
    gen->add_option("--out", gen_out, "output path, - for stdout");

    // convert
    auto* conv = app.add_subcommand("convert", "transcode between formats");
    std::string from, to, conv_in = "-", conv_out = "-";
    bool directed = false, multi = false;
    conv->add_option("--from", from, "input format")->required()->check(CLI::IsMember(kFormats));
    conv->add_option("--to", to, "output format")->required()->check(CLI::IsMember(kFormats));
    conv->add_option("--in", conv_in, "input path, - for stdin");
    conv->add_option("--out", conv_out, "output path, - for stdout");
    conv->add_flag("--directed", directed, "csv input rows are arcs");
    conv->add_flag("--multi", multi, "dimacs-color input may repeat edges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (*run) {
        std::vector<const char*> backends;
        if (backend == "all" || backend == "adjacency") backends.push_back("adjacency");
        if (backend == "all" || backend == "csr") backends.push_back("csr");
        if (family != "dimacs" && sizes.empty()) {
            std::fprintf(stderr, "bench run: --sizes is required\n");
            return kUsage;
        }
        tsr_bench_plan plan{};
        plan.experiment = experiment.c_str();
        plan.family = family.c_str();
        plan.sizes = sizes.data();
        plan.size_count = sizes.size();
        plan.repetitions = reps;
        plan.seed = seed;
        plan.backends = backends.data();
        plan.backend_count = backends.size();
        plan.input = input.empty() ? nullptr : input.c_str();
        plan.sources = sources;
        if (int rc = report(tsr_bench_validate(&plan), "run")) return rc;
        tsr_pin_single_core();
        return report(tsr_bench_run(&plan, out.c_str()), "run");
    }

    if (*gen) {
        std::vector<const char*> argv_params;
        for (const auto& p : params) argv_params.push_back(p.c_str());
        GraphHandle h;
        if (int rc = report(tsr_generate(model.c_str(), argv_params.data(), argv_params.size(), gen_seed, &h.g), "generate"))
            return rc;
        return report(tsr_write(h.g, gen_out.c_str(), gen_format.c_str()), "generate");
    }

    if (from == "dot") {
        std::fprintf(stderr, "bench convert: dot is export-only\n");
        return kUsage;
    }
    unsigned flags = (directed ? TSR_READ_CSV_DIRECTED : 0u) | (multi ? TSR_READ_ALLOW_MULTI : 0u);
    GraphHandle h;
    tsr_status s = tsr_read(conv_in.c_str(), from.c_str(), flags, &h.g);
    if (s == TSR_ERR_PARSE) {
        std::size_t line = 0, column = 0;
        tsr_last_error_position(&line, &column);
        std::fprintf(stderr, "bench convert: %s:%zu:%zu: %s\n", conv_in.c_str(), line, column, tsr_last_error());
        return kRuntime;
    }
    if (int rc = report(s, "convert")) return rc;
    s = tsr_write(h.g, conv_out.c_str(), to.c_str());
    // a format that cannot hold the graph is a runtime failure, not a usage error
    if (s == TSR_ERR_INVALID_ARGUMENT || s == TSR_ERR_UNSUPPORTED) {
        std::fprintf(stderr, "bench convert: %s\n", tsr_last_error());
        return kRuntime;
    }
    return report(s, "convert");
}
