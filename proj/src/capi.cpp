#include "tessera/tessera.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <new>
#include <sstream>

#include "tessera/bench.hpp"
#include "tessera/centrality.hpp"
#include "tessera/csr_store.hpp"
#include "tessera/edge_list.hpp"
#include "tessera/flow.hpp"
#include "tessera/generators.hpp"
#include "tessera/io.hpp"
#include "tessera/memory.hpp"
#include "tessera/shortest_paths.hpp"
#include "tessera/spanning.hpp"

using namespace tessera;

struct tsr_graph {
    GraphPtr graph;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> terminals;
    mutable std::optional<std::vector<EdgeId>> edge_order;  // cached for edge_at, dropped on mutation
};

namespace {

thread_local std::string t_error;
thread_local std::size_t t_line = 0;
thread_local std::size_t t_column = 0;

tsr_status map_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::MissingVertex: return TSR_ERR_MISSING_VERTEX;
    case ErrorCode::MissingEdge: return TSR_ERR_MISSING_EDGE;
    case ErrorCode::CapabilityViolation: return TSR_ERR_CAPABILITY;
    case ErrorCode::Immutable: return TSR_ERR_IMMUTABLE;
    case ErrorCode::Unsupported: return TSR_ERR_UNSUPPORTED;
    case ErrorCode::InvalidArgument: return TSR_ERR_INVALID_ARGUMENT;
    case ErrorCode::NegativeWeight: return TSR_ERR_NEGATIVE_WEIGHT;
    case ErrorCode::NegativeCycle: return TSR_ERR_NEGATIVE_CYCLE;
    case ErrorCode::NotATree: return TSR_ERR_NOT_A_TREE;
    case ErrorCode::NotEulerian: return TSR_ERR_NOT_EULERIAN;
    case ErrorCode::Parse: return TSR_ERR_PARSE;
    case ErrorCode::Io: return TSR_ERR_IO;
    }
    return TSR_ERR_INTERNAL;
}

tsr_status fail(tsr_status s, const std::string& message) {
    t_error = message;
    return s;
}

template <class F>
tsr_status guard(F&& f) {
    t_error.clear();
    t_line = t_column = 0;
    try {
        f();
        return TSR_OK;
    } catch (const ParseError& e) {
        t_line = e.line();
        t_column = e.column();
        return fail(TSR_ERR_PARSE, e.what());
    } catch (const GraphError& e) {
        return fail(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(TSR_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(TSR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TSR_ERR_INTERNAL, "unknown error");
    }
}

void need(const void* p, const char* what) {
    if (!p) throw GraphError(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

Format format_of(const char* name) {
    need(name, "format");
    auto f = parse_format(name);
    if (!f) throw GraphError(ErrorCode::InvalidArgument, std::string("unknown format '") + name + "'");
    return *f;
}

tsr_graph* wrap(GraphPtr g) {
    auto* h = new tsr_graph;
    h->graph = std::move(g);
    return h;
}

ExperimentPlan to_plan(const tsr_bench_plan* p) {
    need(p, "plan");
    need(p->experiment, "experiment");
    need(p->family, "family");
    ExperimentPlan plan;
    auto e = parse_experiment(p->experiment);
    if (!e) throw GraphError(ErrorCode::InvalidArgument, std::string("unknown experiment '") + p->experiment + "'");
    plan.experiment = *e;
    plan.family = p->family;
    if (p->size_count) need(p->sizes, "sizes");
    plan.sizes.assign(p->sizes, p->sizes + p->size_count);
    plan.repetitions = p->repetitions;
    plan.seed = p->seed;
    if (p->backend_count) {
        need(p->backends, "backends");
        plan.backends.clear();
        for (std::size_t i = 0; i < p->backend_count; ++i) {
            need(p->backends[i], "backend");
            auto b = parse_backend(p->backends[i]);
            if (!b) throw GraphError(ErrorCode::InvalidArgument, std::string("unknown backend '") + p->backends[i] + "'");
            plan.backends.push_back(*b);
        }
    }
    if (p->input) plan.input = std::string(p->input);
    if (p->sources) plan.sources = p->sources;
    validate(plan);
    return plan;
}

template <class F>
void with_output(const char* path, F&& f) {
    need(path, "path");
    if (std::string_view(path) == "-") {
        f(std::cout);
        std::cout.flush();
        return;
    }
    std::ostringstream buf;
    f(buf);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError(ErrorCode::Io, std::string("cannot open ") + path + " for writing");
    out << buf.str();
    if (!out) throw GraphError(ErrorCode::Io, std::string("write failed: ") + path);
}

} // namespace

extern "C" {

const char* tsr_status_string(tsr_status status) {
    switch (status) {
    case TSR_OK: return "ok";
    case TSR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TSR_ERR_MISSING_VERTEX: return "missing vertex";
    case TSR_ERR_MISSING_EDGE: return "missing edge";
    case TSR_ERR_CAPABILITY: return "capability violation";
    case TSR_ERR_IMMUTABLE: return "immutable graph";
    case TSR_ERR_UNSUPPORTED: return "unsupported";
    case TSR_ERR_NEGATIVE_WEIGHT: return "negative weight";
    case TSR_ERR_NEGATIVE_CYCLE: return "negative cycle";
    case TSR_ERR_NOT_A_TREE: return "not a tree";
    case TSR_ERR_NOT_EULERIAN: return "not eulerian";
    case TSR_ERR_PARSE: return "parse error";
    case TSR_ERR_IO: return "i/o error";
    case TSR_ERR_OUT_OF_MEMORY: return "out of memory";
    case TSR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tsr_last_error(void) { return t_error.c_str(); }

void tsr_last_error_position(size_t* line, size_t* column) {
    if (line) *line = t_line;
    if (column) *column = t_column;
}

tsr_status tsr_graph_create(int directed, int self_loops, int multi_edges, int weighted, tsr_graph** out) {
    return guard([&] {
        need(out, "out");
        *out = wrap(build_graph(GraphBuilderSpec{directed != 0, self_loops != 0, multi_edges != 0, weighted != 0}));
    });
}

void tsr_graph_destroy(tsr_graph* graph) { delete graph; }

tsr_status tsr_graph_add_vertex(tsr_graph* graph, uint64_t vertex) {
    return guard([&] {
        need(graph, "graph");
        graph->edge_order.reset();
        graph->graph->add_vertex(vid(vertex));
    });
}

tsr_status tsr_graph_add_edge(tsr_graph* graph, uint64_t u, uint64_t v, double weight, uint64_t* edge) {
    return guard([&] {
        need(graph, "graph");
        graph->edge_order.reset();
        Graph& g = *graph->graph;
        g.add_vertex(vid(u));
        g.add_vertex(vid(v));
        EdgeId e = g.add_edge(vid(u), vid(v), weight);
        if (edge) *edge = raw(e);
    });
}

tsr_status tsr_graph_counts(const tsr_graph* graph, size_t* vertices, size_t* edges) {
    return guard([&] {
        need(graph, "graph");
        if (vertices) *vertices = graph->graph->vertex_count();
        if (edges) *edges = graph->graph->edge_count();
    });
}

tsr_status tsr_graph_is_directed(const tsr_graph* graph, int* directed) {
    return guard([&] {
        need(graph, "graph");
        need(directed, "directed");
        *directed = graph->graph->is_directed() ? 1 : 0;
    });
}

tsr_status tsr_graph_vertices(const tsr_graph* graph, uint64_t* out, size_t capacity) {
    return guard([&] {
        need(graph, "graph");
        auto vs = graph->graph->vertices();
        if (capacity < vs.size()) throw GraphError(ErrorCode::InvalidArgument, "capacity too small");
        if (!vs.empty()) need(out, "out");
        for (std::size_t i = 0; i < vs.size(); ++i) out[i] = raw(vs[i]);
    });
}

tsr_status tsr_graph_edge_at(const tsr_graph* graph, size_t index, uint64_t* u, uint64_t* v, double* weight) {
    return guard([&] {
        need(graph, "graph");
        if (!graph->edge_order) graph->edge_order = graph->graph->edges();
        if (index >= graph->edge_order->size()) throw GraphError(ErrorCode::MissingEdge, "edge index out of range");
        EdgeId e = (*graph->edge_order)[index];
        if (u) *u = raw(graph->graph->source(e));
        if (v) *v = raw(graph->graph->target(e));
        if (weight) *weight = graph->graph->weight(e);
    });
}

tsr_status tsr_graph_convert(const tsr_graph* graph, tsr_backend backend, tsr_graph** out) {
    return guard([&] {
        need(graph, "graph");
        need(out, "out");
        EdgeList list = to_edge_list(*graph->graph);
        GraphPtr g;
        if (backend == TSR_BACKEND_CSR) g = to_csr(list);
        else if (backend == TSR_BACKEND_ADJACENCY) g = to_adjacency(list);
        else throw GraphError(ErrorCode::InvalidArgument, "unknown backend");
        *out = wrap(std::move(g));
    });
}

tsr_status tsr_graph_memory_bytes(const tsr_graph* graph, size_t* bytes) {
    return guard([&] {
        need(graph, "graph");
        need(bytes, "bytes");
        *bytes = memory_footprint(*graph->graph);
    });
}

tsr_status tsr_graph_terminals(const tsr_graph* graph, uint64_t* source, uint64_t* sink) {
    return guard([&] {
        need(graph, "graph");
        if (!graph->terminals) throw GraphError(ErrorCode::Unsupported, "graph has no flow terminals");
        if (source) *source = graph->terminals->first;
        if (sink) *sink = graph->terminals->second;
    });
}

tsr_status tsr_generate(const char* model, const char* const* params, size_t param_count, uint64_t seed,
                        tsr_graph** out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        std::vector<std::string> args;
        if (param_count) need(params, "params");
        for (std::size_t i = 0; i < param_count; ++i) {
            need(params[i], "param");
            args.emplace_back(params[i]);
        }
        GeneratedGraph gen = generate(parse_generator(model, args, seed));
        auto* h = wrap(to_adjacency(gen.graph));
        h->terminals = gen.terminals;
        *out = h;
    });
}

tsr_status tsr_read(const char* path, const char* format, unsigned flags, tsr_graph** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        Format f = format_of(format);
        std::ifstream file;
        std::istream* in = &std::cin;
        if (std::string_view(path) != "-") {
            file.open(path, std::ios::binary);
            if (!file) throw GraphError(ErrorCode::Io, std::string("cannot open ") + path);
            in = &file;
        }
        EdgeList list;
        if (f == Format::Csv) list = read_csv(*in, (flags & TSR_READ_CSV_DIRECTED) != 0);
        else if (f == Format::DimacsColor) list = read_dimacs_color(*in, (flags & TSR_READ_ALLOW_MULTI) == 0);
        else list = read_graph(*in, f);
        *out = wrap(to_adjacency(list));
    });
}

tsr_status tsr_write(const tsr_graph* graph, const char* path, const char* format) {
    return guard([&] {
        need(graph, "graph");
        Format f = format_of(format);
        EdgeList list = to_edge_list(*graph->graph);
        with_output(path, [&](std::ostream& os) { write_graph(list, os, f); });
    });
}

tsr_status tsr_encode(const tsr_graph* graph, const char* format, char* buffer, size_t capacity, size_t* length) {
    return guard([&] {
        need(graph, "graph");
        Format f = format_of(format);
        std::ostringstream os;
        write_graph(to_edge_list(*graph->graph), os, f);
        std::string s = os.str();
        if (length) *length = s.size();
        if (buffer && capacity > 0) {
            std::size_t n = std::min(capacity - 1, s.size());
            std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n), buffer);
            buffer[n] = '\0';
        }
    });
}

tsr_status tsr_shortest_distance(const tsr_graph* graph, uint64_t source, uint64_t target, double* distance) {
    return guard([&] {
        need(graph, "graph");
        need(distance, "distance");
        const Graph& g = *graph->graph;
        if (!g.contains_vertex(vid(target))) throw GraphError(ErrorCode::MissingVertex, "target not in graph");
        auto path = dijkstra_path(g, vid(source), vid(target));
        *distance = path ? path->weight : std::numeric_limits<double>::infinity();
    });
}

tsr_status tsr_mst_weight(const tsr_graph* graph, tsr_mst_algorithm algorithm, double* weight) {
    return guard([&] {
        need(graph, "graph");
        need(weight, "weight");
        MstAlgorithm a = algorithm == TSR_MST_KRUSKAL   ? MstAlgorithm::Kruskal
                         : algorithm == TSR_MST_BORUVKA ? MstAlgorithm::Boruvka
                                                        : MstAlgorithm::Prim;
        *weight = minimum_spanning_forest(*graph->graph, a).weight;
    });
}

tsr_status tsr_max_flow(const tsr_graph* graph, uint64_t source, uint64_t sink, tsr_flow_algorithm algorithm,
                        double* value) {
    return guard([&] {
        need(graph, "graph");
        need(value, "value");
        FlowAlgorithm a = algorithm == TSR_FLOW_EDMONDS_KARP ? FlowAlgorithm::EdmondsKarp
                          : algorithm == TSR_FLOW_DINIC      ? FlowAlgorithm::Dinic
                                                             : FlowAlgorithm::PushRelabel;
        *value = max_flow(*graph->graph, vid(source), vid(sink), a).value;
    });
}

tsr_status tsr_pagerank(const tsr_graph* graph, double damping, size_t iterations, double tolerance, double* scores,
                        size_t capacity) {
    return guard([&] {
        need(graph, "graph");
        const Graph& g = *graph->graph;
        if (capacity < g.vertex_count()) throw GraphError(ErrorCode::InvalidArgument, "capacity too small");
        ScoreMap r = pagerank(g, damping, iterations, tolerance);
        auto vs = g.vertices();
        if (!vs.empty()) need(scores, "scores");
        for (std::size_t i = 0; i < vs.size(); ++i) scores[i] = r.at(vs[i]);
    });
}

tsr_status tsr_bench_validate(const tsr_bench_plan* plan) {
    return guard([&] { to_plan(plan); });
}

tsr_status tsr_bench_run(const tsr_bench_plan* plan, const char* out_path) {
    return guard([&] {
        ExperimentPlan p = to_plan(plan);
        auto rows = run_experiment(p);
        with_output(out_path, [&](std::ostream& os) { write_measurements(rows, os); });
    });
}

int tsr_pin_single_core(void) { return pin_to_single_core() ? 1 : 0; }

} // extern "C"
