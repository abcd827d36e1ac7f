#include "tessera/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

#include "tessera/adjacency_store.hpp"
#include "tessera/centrality.hpp"
#include "tessera/csr_store.hpp"
#include "tessera/flow.hpp"
#include "tessera/io.hpp"
#include "tessera/memory.hpp"
#include "tessera/random.hpp"
#include "tessera/shortest_paths.hpp"
#include "tessera/spanning.hpp"
#include "tessera/traversal.hpp"

#if defined(__linux__)
#include <sched.h>
#endif

namespace tessera {

namespace {

struct Named {
    const char* name;
    Experiment experiment;
};

constexpr Named kExperiments[] = {
    {"dijkstra", Experiment::Dijkstra},   {"pagerank", Experiment::PageRank},
    {"mst", Experiment::Mst},             {"maxflow", Experiment::MaxFlow},
    {"backend_bundle", Experiment::BackendBundle}, {"memory", Experiment::Memory},
    {"noop", Experiment::Noop},
};

bool is_flow_family(const std::string& f) {
    return f.rfind("washington-", 0) == 0 || f.rfind("genrmf-", 0) == 0;
}

bool known_family(const std::string& f) {
    static const char* names[] = {"gnp", "barabasi-albert", "rmat", "washington-wide", "washington-long",
                                  "genrmf-long", "genrmf-flat", "genrmf-square", "dimacs"};
    return std::find_if(std::begin(names), std::end(names), [&](const char* n) { return f == n; }) != std::end(names);
}

struct Instance {
    EdgeList graph;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> terminals;
};

// Integer weights 1..100 for families generated without weights.
void assign_weights(EdgeList& g, std::uint64_t seed) {
    if (g.kind.weighted) return;
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (auto& e : g.edges) e.weight = static_cast<double>(rng.between(1, 100));
    g.kind.weighted = true;
}

Instance make_instance(const ExperimentPlan& plan, std::size_t size, std::uint64_t seed) {
    const std::string& f = plan.family;
    Instance inst;
    if (f == "gnp") {
        inst.graph = gnp(size, 0.1, seed);
    } else if (f == "barabasi-albert") {
        inst.graph = barabasi_albert(20, 10, size, seed);
    } else if (f == "rmat") {
        std::size_t scale = 0;
        while ((std::size_t{1} << scale) < size) ++scale;
        RmatParams p;
        p.scale = scale;
        inst.graph = rmat(p, seed);
    } else if (f == "dimacs") {
        std::ifstream in(*plan.input);
        if (!in) throw GraphError(ErrorCode::Io, "cannot open " + *plan.input);
        inst.graph = read_dimacs_sp(in);
    } else {
        FlowInstance fi;
        if (f == "washington-wide") fi = washington_shaped(WashingtonShape::Wide, size, seed);
        else if (f == "washington-long") fi = washington_shaped(WashingtonShape::Long, size, seed);
        else if (f == "genrmf-long") fi = rmfgen_shaped(RmfgenShape::Long, size, 1, 10000, seed);
        else if (f == "genrmf-flat") fi = rmfgen_shaped(RmfgenShape::Flat, size, 1, 10000, seed);
        else fi = rmfgen_shaped(RmfgenShape::Wide, size, 1, 10000, seed);
        inst.graph = std::move(fi.graph);
        inst.terminals = std::pair{fi.source, fi.sink};
    }
    return inst;
}

std::vector<std::string> algorithms_for(Experiment e) {
    switch (e) {
    case Experiment::Dijkstra: return {"dijkstra"};
    case Experiment::PageRank: return {"pagerank"};
    case Experiment::Mst: return {"prim", "kruskal", "boruvka"};
    case Experiment::MaxFlow: return {"edmonds-karp", "dinic", "push-relabel"};
    case Experiment::BackendBundle: return {"bfs", "dfs", "connected-components", "dijkstra", "pagerank", "prim"};
    case Experiment::Memory: return {"memory"};
    case Experiment::Noop: return {"noop"};
    }
    return {};
}

GraphPtr build_backend(const EdgeList& g, BackendKind backend) {
    if (backend == BackendKind::Csr) return to_csr(g);
    return to_adjacency(g);
}

volatile double g_sink = 0;

template <class F>
double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    {
        double r = f();
        g_sink = g_sink + r;
    }
    auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

// Runs one algorithm; returns a value derived from the result so the call
// cannot be optimized away.
double run_algorithm(const std::string& alg, const Graph& g, const Instance& inst, VertexId source) {
    if (alg == "noop") return 0.0;
    if (alg == "dijkstra") return static_cast<double>(dijkstra(g, source).distance.keys().size());
    if (alg == "pagerank") return pagerank(g, 0.85, 20, 1e-16).scores.at(source);
    if (alg == "prim") return minimum_spanning_forest(g, MstAlgorithm::Prim).weight;
    if (alg == "kruskal") return minimum_spanning_forest(g, MstAlgorithm::Kruskal).weight;
    if (alg == "boruvka") return minimum_spanning_forest(g, MstAlgorithm::Boruvka).weight;
    if (alg == "bfs") return static_cast<double>(bfs_order(g, source).size());
    if (alg == "dfs") return static_cast<double>(dfs_order(g, source).size());
    if (alg == "connected-components") return static_cast<double>(connected_components(g).count);
    FlowAlgorithm fa = alg == "edmonds-karp" ? FlowAlgorithm::EdmondsKarp
                       : alg == "dinic"      ? FlowAlgorithm::Dinic
                                             : FlowAlgorithm::PushRelabel;
    return max_flow(g, vid(inst.terminals->first), vid(inst.terminals->second), fa).value;
}

std::string fixed(double x, int precision) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, precision);
    return std::string(buf, end);
}

std::string shortest(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

} // namespace

std::optional<Experiment> parse_experiment(std::string_view name) {
    for (const auto& e : kExperiments)
        if (name == e.name) return e.experiment;
    return std::nullopt;
}

std::optional<BackendKind> parse_backend(std::string_view name) {
    if (name == "adjacency") return BackendKind::Adjacency;
    if (name == "csr") return BackendKind::Csr;
    return std::nullopt;
}

const char* backend_name(BackendKind backend) {
    return backend == BackendKind::Csr ? "csr" : "adjacency";
}

double Measurement::mean_ms() const {
    if (samples_ms.empty()) return 0.0;
    double s = 0;
    for (double x : samples_ms) s += x;
    return s / static_cast<double>(samples_ms.size());
}

double Measurement::stddev_ms() const {
    if (samples_ms.size() < 2) return 0.0;
    double mean = mean_ms(), s = 0;
    for (double x : samples_ms) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(samples_ms.size() - 1));
}

void validate(const ExperimentPlan& plan) {
    auto bad = [](const std::string& m) { throw GraphError(ErrorCode::InvalidArgument, m); };
    if (!known_family(plan.family)) bad("unknown family '" + plan.family + "'");
    if (plan.repetitions == 0) bad("repetitions must be at least 1");
    if (plan.backends.empty()) bad("no backend selected");
    bool flow = is_flow_family(plan.family);
    if (plan.experiment == Experiment::MaxFlow && !flow) bad("maxflow needs a washington-* or genrmf-* family");
    if (plan.family == "dimacs") {
        if (!plan.input) bad("the dimacs family needs an input file");
        if (plan.sources == 0) bad("sources must be at least 1");
    } else if (plan.input) {
        bad("an input file is only used by the dimacs family");
    }
    if (plan.family == "rmat")
        for (std::size_t n : plan.sizes)
            if (n == 0 || (n & (n - 1)) != 0) bad("rmat sizes must be powers of two");
    for (std::size_t n : plan.sizes)
        if (n == 0) bad("sizes must be positive");
}

std::vector<Measurement> run_experiment(const ExperimentPlan& plan) {
    validate(plan);
    std::vector<Measurement> rows;
    const auto algorithms = algorithms_for(plan.experiment);
    const bool file_input = plan.family == "dimacs";
    std::vector<std::size_t> sizes = file_input ? std::vector<std::size_t>{0} : plan.sizes;

    for (std::size_t size : sizes) {
        // cells indexed by backend then algorithm
        std::vector<Measurement> cells;
        for (BackendKind b : plan.backends)
            for (const auto& alg : algorithms) {
                Measurement m;
                m.family = plan.family;
                m.algorithm = alg;
                m.backend = backend_name(b);
                cells.push_back(std::move(m));
            }
        double edge_sum = 0;
        std::size_t nodes = 0;
        std::size_t reps = file_input ? 1 : plan.repetitions;
        std::vector<double> bytes(plan.backends.size(), 0.0);

        for (std::size_t r = 0; r < reps; ++r) {
            std::uint64_t seed = plan.seed + r;
            Instance inst = make_instance(plan, size, seed);
            if (plan.experiment == Experiment::Mst || plan.experiment == Experiment::BackendBundle)
                inst.graph.kind.directed = false;
            if (plan.experiment != Experiment::MaxFlow && plan.experiment != Experiment::Memory)
                assign_weights(inst.graph, seed);
            nodes = inst.graph.vertex_count;
            edge_sum += static_cast<double>(inst.graph.edges.size());

            std::vector<std::uint64_t> sources{0};
            if (file_input) {
                Rng rng(plan.seed);
                sources.clear();
                for (std::size_t i = 0; i < plan.sources && nodes > 0; ++i) sources.push_back(rng.below(nodes));
            }
            for (std::size_t bi = 0; bi < plan.backends.size(); ++bi) {
                GraphPtr g = build_backend(inst.graph, plan.backends[bi]);
                if (plan.experiment == Experiment::Memory) {
                    bytes[bi] += bytes_per_edge(memory_footprint(*g), g->edge_count());
                    continue;
                }
                if (nodes == 0) continue;
                for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
                    auto& cell = cells[bi * algorithms.size() + ai];
                    // sources only vary for Dijkstra on file input
                    bool per_source = file_input && algorithms[ai] == "dijkstra";
                    for (std::size_t si = 0; si < (per_source ? sources.size() : 1); ++si) {
                        VertexId s = vid(sources[si]);
                        cell.samples_ms.push_back(timed([&] { return run_algorithm(algorithms[ai], *g, inst, s); }));
                    }
                }
            }
        }
        for (std::size_t bi = 0; bi < plan.backends.size(); ++bi)
            for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
                auto& cell = cells[bi * algorithms.size() + ai];
                cell.nodes = nodes;
                cell.edges = static_cast<std::size_t>(std::llround(edge_sum / static_cast<double>(reps)));
                if (plan.experiment == Experiment::Memory) cell.bytes_per_edge = bytes[bi] / static_cast<double>(reps);
                rows.push_back(std::move(cell));
            }
    }
    return rows;
}

void write_measurements(const std::vector<Measurement>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& m : rows) {
        out << m.family << ';' << m.nodes << ';' << m.edges << ';' << m.algorithm << ';' << m.backend << ';';
        if (!m.samples_ms.empty()) out << fixed(m.mean_ms(), 6) << ';' << fixed(m.stddev_ms(), 6);
        else out << ';';
        out << ';';
        if (m.bytes_per_edge) out << shortest(*m.bytes_per_edge);
        out << '\n';
    }
}

// ---- generator argument parsing ----

namespace {

class Args {
public:
    Args(std::string_view model, const std::vector<std::string>& args) : model_(model) {
        for (const auto& a : args) {
            auto eq = a.find('=');
            if (eq == std::string::npos || eq == 0)
                throw GraphError(ErrorCode::InvalidArgument, "expected key=value, got '" + a + "'");
            values_[a.substr(0, eq)] = a.substr(eq + 1);
        }
    }

    std::size_t size(const std::string& key, std::optional<std::size_t> fallback = std::nullopt) {
        auto s = raw(key, fallback.has_value());
        if (!s) return *fallback;
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
        if (ec != std::errc() || p != s->data() + s->size()) bad(key, *s);
        return v;
    }
    std::int64_t integer(const std::string& key, std::optional<std::int64_t> fallback = std::nullopt) {
        auto s = raw(key, fallback.has_value());
        if (!s) return *fallback;
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
        if (ec != std::errc() || p != s->data() + s->size()) bad(key, *s);
        return v;
    }
    double real(const std::string& key, std::optional<double> fallback = std::nullopt) {
        auto s = raw(key, fallback.has_value());
        if (!s) return *fallback;
        double v = 0;
        auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
        if (ec != std::errc() || p != s->data() + s->size()) bad(key, *s);
        return v;
    }
    bool flag(const std::string& key) {
        auto s = raw(key, true);
        if (!s) return false;
        if (*s == "1" || *s == "true") return true;
        if (*s == "0" || *s == "false") return false;
        bad(key, *s);
        return false;
    }
    bool has(const std::string& key) const { return values_.count(key) > 0; }
    void done() const {
        for (const auto& [k, v] : values_)
            if (!used_.count(k)) throw GraphError(ErrorCode::InvalidArgument, model_ + ": unknown parameter '" + k + "'");
    }

private:
    std::optional<std::string> raw(const std::string& key, bool optional) {
        auto it = values_.find(key);
        if (it == values_.end()) {
            if (optional) return std::nullopt;
            throw GraphError(ErrorCode::InvalidArgument, model_ + ": missing parameter '" + key + "'");
        }
        used_[key] = true;
        return it->second;
    }
    [[noreturn]] void bad(const std::string& key, const std::string& v) const {
        throw GraphError(ErrorCode::InvalidArgument, model_ + ": bad value '" + v + "' for '" + key + "'");
    }

    std::string model_;
    std::map<std::string, std::string> values_;
    std::map<std::string, bool> used_;
};

} // namespace

GeneratorParams parse_generator(std::string_view model, const std::vector<std::string>& args, std::uint64_t seed) {
    Args a(model, args);
    GeneratorParams p;
    p.seed = seed;
    auto det = [&](Family f) { p.model = model::Deterministic{f, a.size("n")}; };
    if (model == "complete") det(Family::Complete);
    else if (model == "ring") det(Family::Ring);
    else if (model == "star") det(Family::Star);
    else if (model == "wheel") det(Family::Wheel);
    else if (model == "hypercube") p.model = model::Deterministic{Family::Hypercube, a.size("d")};
    else if (model == "grid") p.model = model::Deterministic{Family::Grid, a.size("rows"), a.size("cols")};
    else if (model == "gnp") p.model = model::Gnp{a.size("n"), a.real("p"), a.flag("directed")};
    else if (model == "gnm") p.model = model::Gnm{a.size("n"), a.size("m")};
    else if (model == "barabasi-albert") p.model = model::BarabasiAlbert{a.size("m0", 20), a.size("m", 10), a.size("n")};
    else if (model == "watts-strogatz") p.model = model::WattsStrogatz{a.size("n"), a.size("k"), a.real("p"), a.flag("add")};
    else if (model == "kleinberg") p.model = model::Kleinberg{a.size("n"), a.size("p", 1), a.size("q", 1), a.real("r", 2.0)};
    else if (model == "rmat") {
        RmatParams r;
        r.scale = a.size("scale");
        r.edge_factor = a.size("edge_factor", r.edge_factor);
        r.a = a.real("a", r.a);
        r.b = a.real("b", r.b);
        r.c = a.real("c", r.c);
        r.d = a.real("d", r.d);
        r.directed = a.flag("directed");
        r.dedupe = a.flag("dedupe");
        p.model = model::Rmat{r};
    } else if (model == "random-regular") p.model = model::RandomRegular{a.size("n"), a.size("d")};
    else if (model == "random-bipartite") {
        model::RandomBipartite b{a.size("n1"), a.size("n2"), std::nullopt, std::nullopt};
        if (a.has("p")) b.p = a.real("p");
        if (a.has("m")) b.m = a.size("m");
        if (b.p.has_value() == b.m.has_value())
            throw GraphError(ErrorCode::InvalidArgument, "random-bipartite: give exactly one of p and m");
        p.model = b;
    } else if (model == "rmfgen") p.model = model::Rmfgen{a.size("a"), a.size("b"), a.integer("cmin", 1), a.integer("cmax", 10000)};
    else if (model == "washington") p.model = model::Washington{a.size("rows"), a.size("cols"), a.integer("cmax", 1000)};
    else throw GraphError(ErrorCode::InvalidArgument, "unknown generator '" + std::string(model) + "'");
    a.done();
    return p;
}

bool pin_to_single_core() {
#if defined(__linux__)
    cpu_set_t current;
    CPU_ZERO(&current);
    if (sched_getaffinity(0, sizeof current, &current) != 0) return false;
    for (int cpu = 0; cpu < CPU_SETSIZE; ++cpu)
        if (CPU_ISSET(cpu, &current)) {
            cpu_set_t one;
            CPU_ZERO(&one);
            CPU_SET(cpu, &one);
            return sched_setaffinity(0, sizeof one, &one) == 0;
        }
    return false;
#else
    return false;
#endif
}

} // namespace tessera
