// Exercises the shared library through its C header only.
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tessera/tessera.h"

namespace {

struct Handle {
    tsr_graph* g = nullptr;
    ~Handle() { tsr_graph_destroy(g); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("graph handle lifecycle") {
    Handle h;
    REQUIRE(tsr_graph_create(0, 0, 0, 1, &h.g) == TSR_OK);
    uint64_t e = 99;
    CHECK(tsr_graph_add_edge(h.g, 10, 20, 2.5, &e) == TSR_OK);
    CHECK(tsr_graph_add_edge(h.g, 20, 30, 1.0, nullptr) == TSR_OK);
    CHECK(tsr_graph_add_vertex(h.g, 40) == TSR_OK);
    size_t n = 0, m = 0;
    CHECK(tsr_graph_counts(h.g, &n, &m) == TSR_OK);
    CHECK(n == 4);
    CHECK(m == 2);
    int directed = -1;
    CHECK(tsr_graph_is_directed(h.g, &directed) == TSR_OK);
    CHECK(directed == 0);

    std::vector<uint64_t> vs(4);
    CHECK(tsr_graph_vertices(h.g, vs.data(), vs.size()) == TSR_OK);
    CHECK(vs == std::vector<uint64_t>{10, 20, 30, 40});
    CHECK(tsr_graph_vertices(h.g, vs.data(), 2) == TSR_ERR_INVALID_ARGUMENT);

    uint64_t u = 0, v = 0;
    double w = 0;
    CHECK(tsr_graph_edge_at(h.g, 0, &u, &v, &w) == TSR_OK);
    CHECK(u == 10);
    CHECK(v == 20);
    CHECK(w == 2.5);
    CHECK(tsr_graph_edge_at(h.g, 5, &u, &v, &w) == TSR_ERR_MISSING_EDGE);

    // simple graph: a loop is a capability violation
    CHECK(tsr_graph_add_edge(h.g, 10, 10, 1.0, nullptr) == TSR_ERR_CAPABILITY);
    CHECK(std::string(tsr_last_error()).size() > 0);
    CHECK(tsr_graph_counts(h.g, &n, &m) == TSR_OK);
    CHECK(std::string(tsr_last_error()).empty());

    double d = 0;
    CHECK(tsr_shortest_distance(h.g, 10, 30, &d) == TSR_OK);
    CHECK(d == 3.5);
    CHECK(tsr_shortest_distance(h.g, 10, 40, &d) == TSR_OK);
    CHECK(std::isinf(d));
    CHECK(tsr_shortest_distance(h.g, 10, 77, &d) == TSR_ERR_MISSING_VERTEX);

    double mst = 0;
    CHECK(tsr_mst_weight(h.g, TSR_MST_KRUSKAL, &mst) == TSR_OK);
    CHECK(mst == 3.5);

    CHECK(tsr_graph_create(0, 0, 0, 0, nullptr) == TSR_ERR_INVALID_ARGUMENT);
    CHECK(tsr_graph_counts(nullptr, &n, &m) == TSR_ERR_INVALID_ARGUMENT);
    tsr_graph_destroy(nullptr);
    CHECK(std::string(tsr_status_string(TSR_ERR_PARSE)) == "parse error");
}

TEST_CASE("backends behind the handle") {
    Handle gen, csr;
    const char* params[] = {"n=300", "p=0.1"};
    REQUIRE(tsr_generate("gnp", params, 2, 5, &gen.g) == TSR_OK);
    REQUIRE(tsr_graph_convert(gen.g, TSR_BACKEND_CSR, &csr.g) == TSR_OK);
    size_t a = 0, c = 0, m = 0;
    CHECK(tsr_graph_memory_bytes(gen.g, &a) == TSR_OK);
    CHECK(tsr_graph_memory_bytes(csr.g, &c) == TSR_OK);
    CHECK(c < a);
    CHECK(tsr_graph_add_edge(csr.g, 0, 1, 1.0, nullptr) == TSR_ERR_IMMUTABLE);
    tsr_graph_counts(csr.g, nullptr, &m);

    std::vector<double> s1(300), s2(300);
    CHECK(tsr_pagerank(gen.g, 0.85, 20, 1e-16, s1.data(), s1.size()) == TSR_OK);
    CHECK(tsr_pagerank(csr.g, 0.85, 20, 1e-16, s2.data(), s2.size()) == TSR_OK);
    double sum = 0;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        sum += s1[i];
        CHECK(s1[i] == doctest::Approx(s2[i]).epsilon(1e-12));
    }
    CHECK(std::fabs(sum - 1.0) < 1e-9);
    CHECK(tsr_pagerank(gen.g, 1.5, 20, 1e-16, s1.data(), s1.size()) == TSR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("flow instances keep their terminals") {
    Handle h;
    const char* params[] = {"a=3", "b=3"};
    REQUIRE(tsr_generate("rmfgen", params, 2, 9, &h.g) == TSR_OK);
    uint64_t s = 0, t = 0;
    REQUIRE(tsr_graph_terminals(h.g, &s, &t) == TSR_OK);
    double v[3];
    CHECK(tsr_max_flow(h.g, s, t, TSR_FLOW_EDMONDS_KARP, &v[0]) == TSR_OK);
    CHECK(tsr_max_flow(h.g, s, t, TSR_FLOW_DINIC, &v[1]) == TSR_OK);
    CHECK(tsr_max_flow(h.g, s, t, TSR_FLOW_PUSH_RELABEL, &v[2]) == TSR_OK);
    CHECK(v[0] > 0);
    CHECK(v[0] == v[1]);
    CHECK(v[1] == v[2]);

    Handle plain;
    tsr_graph_create(1, 0, 0, 0, &plain.g);
    CHECK(tsr_graph_terminals(plain.g, &s, &t) == TSR_ERR_UNSUPPORTED);
    CHECK(tsr_generate("nope", nullptr, 0, 0, &plain.g) == TSR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("formats through the C API") {
    Handle k3;
    const char* params[] = {"n=3"};
    REQUIRE(tsr_generate("complete", params, 1, 0, &k3.g) == TSR_OK);
    char buf[16];
    size_t len = 0;
    CHECK(tsr_encode(k3.g, "graph6", buf, sizeof buf, &len) == TSR_OK);
    CHECK(std::string(buf) == "Bw\n");
    CHECK(len == 3);
    CHECK(tsr_encode(k3.g, "graph6", buf, 2, &len) == TSR_OK);
    CHECK(std::string(buf) == "B");
    CHECK(tsr_encode(k3.g, "gml", buf, sizeof buf, &len) == TSR_ERR_INVALID_ARGUMENT);

    const char* path = "test_capi_k3.gr";
    CHECK(tsr_write(k3.g, path, "dimacs-sp") == TSR_OK);
    Handle back;
    REQUIRE(tsr_read(path, "dimacs-sp", 0, &back.g) == TSR_OK);
    size_t n = 0, m = 0;
    tsr_graph_counts(back.g, &n, &m);
    CHECK(n == 3);
    CHECK(m == 6);

    {
        std::ofstream bad("test_capi_bad.csv");
        bad << "0,1\n1,2\n2,3,4\n";
    }
    Handle none;
    CHECK(tsr_read("test_capi_bad.csv", "csv", 0, &none.g) == TSR_ERR_PARSE);
    size_t line = 0, col = 0;
    tsr_last_error_position(&line, &col);
    CHECK(line == 3);
    CHECK(col == 5);
    CHECK(tsr_read("missing-file.csv", "csv", 0, &none.g) == TSR_ERR_IO);

    Handle directed;
    tsr_graph_create(1, 0, 0, 0, &directed.g);
    tsr_graph_add_edge(directed.g, 0, 1, 1.0, nullptr);
    CHECK(tsr_encode(directed.g, "graph6", buf, sizeof buf, &len) == TSR_ERR_UNSUPPORTED);
}

TEST_CASE("bench plans") {
    size_t sizes[] = {40, 80};
    const char* backends[] = {"adjacency", "csr"};
    tsr_bench_plan plan{};
    plan.experiment = "memory";
    plan.family = "gnp";
    plan.sizes = sizes;
    plan.size_count = 2;
    plan.repetitions = 2;
    plan.seed = 3;
    plan.backends = backends;
    plan.backend_count = 2;
    CHECK(tsr_bench_validate(&plan) == TSR_OK);
    CHECK(tsr_bench_run(&plan, "test_capi_mem1.csv") == TSR_OK);
    CHECK(tsr_bench_run(&plan, "test_capi_mem2.csv") == TSR_OK);
    std::string a = slurp("test_capi_mem1.csv");
    CHECK(a == slurp("test_capi_mem2.csv"));
    CHECK(a.rfind("family;nodes;edges;algorithm;backend;time_ms", 0) == 0);

    plan.experiment = "sorting";
    CHECK(tsr_bench_validate(&plan) == TSR_ERR_INVALID_ARGUMENT);
    plan.experiment = "mst";
    plan.repetitions = 0;
    CHECK(tsr_bench_validate(&plan) == TSR_ERR_INVALID_ARGUMENT);
    plan.repetitions = 1;
    const char* bad_backend[] = {"matrix"};
    plan.backends = bad_backend;
    plan.backend_count = 1;
    CHECK(tsr_bench_validate(&plan) == TSR_ERR_INVALID_ARGUMENT);
    CHECK(tsr_bench_validate(nullptr) == TSR_ERR_INVALID_ARGUMENT);
}
