/* C interface to the tessera graph library. All handles are opaque; every
 * fallible call returns a tsr_status and leaves a message retrievable with
 * tsr_last_error() on the calling thread. */
#ifndef TESSERA_H
#define TESSERA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TSR_API __declspec(dllexport)
#else
#define TSR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tsr_graph tsr_graph;

typedef enum tsr_status {
    TSR_OK = 0,
    TSR_ERR_INVALID_ARGUMENT = 1,
    TSR_ERR_MISSING_VERTEX = 2,
    TSR_ERR_MISSING_EDGE = 3,
    TSR_ERR_CAPABILITY = 4,
    TSR_ERR_IMMUTABLE = 5,
    TSR_ERR_UNSUPPORTED = 6,
    TSR_ERR_NEGATIVE_WEIGHT = 7,
    TSR_ERR_NEGATIVE_CYCLE = 8,
    TSR_ERR_NOT_A_TREE = 9,
    TSR_ERR_NOT_EULERIAN = 10,
    TSR_ERR_PARSE = 11,
    TSR_ERR_IO = 12,
    TSR_ERR_OUT_OF_MEMORY = 13,
    TSR_ERR_INTERNAL = 14
} tsr_status;

typedef enum tsr_backend { TSR_BACKEND_ADJACENCY = 0, TSR_BACKEND_CSR = 1 } tsr_backend;
typedef enum tsr_mst_algorithm { TSR_MST_PRIM = 0, TSR_MST_KRUSKAL = 1, TSR_MST_BORUVKA = 2 } tsr_mst_algorithm;
typedef enum tsr_flow_algorithm {
    TSR_FLOW_EDMONDS_KARP = 0,
    TSR_FLOW_DINIC = 1,
    TSR_FLOW_PUSH_RELABEL = 2
} tsr_flow_algorithm;

/* tsr_read flags */
#define TSR_READ_CSV_DIRECTED 1u   /* csv rows are arcs */
#define TSR_READ_ALLOW_MULTI 2u    /* dimacs-color: accept loops and repeated edges */

TSR_API const char* tsr_status_string(tsr_status status);
/* Message of the last failure on this thread; "" after success. */
TSR_API const char* tsr_last_error(void);
/* Line/column of the last parse error, 0 when the failure was not a parse error. */
TSR_API void tsr_last_error_position(size_t* line, size_t* column);

/* ---- graphs ---- */

TSR_API tsr_status tsr_graph_create(int directed, int self_loops, int multi_edges, int weighted, tsr_graph** out);
TSR_API void tsr_graph_destroy(tsr_graph* graph);

TSR_API tsr_status tsr_graph_add_vertex(tsr_graph* graph, uint64_t vertex);
/* Adds missing endpoints. `edge` may be NULL. */
TSR_API tsr_status tsr_graph_add_edge(tsr_graph* graph, uint64_t u, uint64_t v, double weight, uint64_t* edge);
TSR_API tsr_status tsr_graph_counts(const tsr_graph* graph, size_t* vertices, size_t* edges);
TSR_API tsr_status tsr_graph_is_directed(const tsr_graph* graph, int* directed);
/* Vertex ids in iteration order; `capacity` must be at least the vertex count. */
TSR_API tsr_status tsr_graph_vertices(const tsr_graph* graph, uint64_t* out, size_t capacity);
/* Endpoints and weight of the index-th edge in iteration order. */
TSR_API tsr_status tsr_graph_edge_at(const tsr_graph* graph, size_t index, uint64_t* u, uint64_t* v, double* weight);
/* Copy into the requested backend. Vertices are relabelled 0..n-1 in
 * iteration order. CSR graphs are immutable. */
TSR_API tsr_status tsr_graph_convert(const tsr_graph* graph, tsr_backend backend, tsr_graph** out);
/* Analytic storage estimate in bytes. */
TSR_API tsr_status tsr_graph_memory_bytes(const tsr_graph* graph, size_t* bytes);
/* Source and sink of generated flow instances; TSR_ERR_UNSUPPORTED otherwise. */
TSR_API tsr_status tsr_graph_terminals(const tsr_graph* graph, uint64_t* source, uint64_t* sink);

/* ---- generators and formats ---- */

/* `params` are "key=value" strings, e.g. {"scale=10"} for model "rmat". */
TSR_API tsr_status tsr_generate(const char* model, const char* const* params, size_t param_count, uint64_t seed,
                                tsr_graph** out);
/* Formats: dimacs-sp, dimacs-color, csv, graph6, sparse6 (read and write),
 * dot (write only). Path "-" means stdin/stdout. */
TSR_API tsr_status tsr_read(const char* path, const char* format, unsigned flags, tsr_graph** out);
TSR_API tsr_status tsr_write(const tsr_graph* graph, const char* path, const char* format);
/* Writes into `buffer` (NUL-terminated when it fits); `length` receives the
 * full length without the terminator. */
TSR_API tsr_status tsr_encode(const tsr_graph* graph, const char* format, char* buffer, size_t capacity,
                              size_t* length);

/* ---- algorithms ---- */

/* Distance from source to target, INFINITY when unreachable. */
TSR_API tsr_status tsr_shortest_distance(const tsr_graph* graph, uint64_t source, uint64_t target, double* distance);
TSR_API tsr_status tsr_mst_weight(const tsr_graph* graph, tsr_mst_algorithm algorithm, double* weight);
TSR_API tsr_status tsr_max_flow(const tsr_graph* graph, uint64_t source, uint64_t sink, tsr_flow_algorithm algorithm,
                                double* value);
/* Scores in vertex iteration order. */
TSR_API tsr_status tsr_pagerank(const tsr_graph* graph, double damping, size_t iterations, double tolerance,
                                double* scores, size_t capacity);

/* ---- benchmarks ---- */

typedef struct tsr_bench_plan {
    const char* experiment; /* dijkstra, pagerank, mst, maxflow, backend_bundle, memory, noop */
    const char* family;
    const size_t* sizes;
    size_t size_count;
    size_t repetitions;
    uint64_t seed;
    const char* const* backends; /* "adjacency" / "csr" */
    size_t backend_count;
    const char* input;  /* DIMACS sp file for the dimacs family, or NULL */
    size_t sources;     /* random Dijkstra sources on file input; 0 means 10 */
} tsr_bench_plan;

/* TSR_ERR_INVALID_ARGUMENT for plans that cannot run. */
TSR_API tsr_status tsr_bench_validate(const tsr_bench_plan* plan);
/* Runs the plan and writes the semicolon-separated CSV to `out_path`. */
TSR_API tsr_status tsr_bench_run(const tsr_bench_plan* plan, const char* out_path);
/* Restricts the process to one CPU; returns 1 on success. */
TSR_API int tsr_pin_single_core(void);

#ifdef __cplusplus
}
#endif

#endif
