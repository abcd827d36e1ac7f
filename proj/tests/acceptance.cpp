// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from the brute-force oracles.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tessera/adjacency_store.hpp"
#include "tessera/centrality.hpp"
#include "tessera/csr_store.hpp"
#include "tessera/flow.hpp"
#include "tessera/generators.hpp"
#include "tessera/hard_problems.hpp"
#include "tessera/io.hpp"
#include "tessera/matching.hpp"
#include "tessera/memory.hpp"
#include "tessera/random.hpp"
#include "tessera/shortest_paths.hpp"
#include "tessera/spanning.hpp"

using namespace tessera;

namespace {

class Criterion {
public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    std::size_t checks() const { return checks_; }
    const std::string& failure() const { return failure_; }

private:
    std::size_t checks_ = 0;
    std::string failure_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// ---- 1. shortest paths ----

std::string shortest_paths(Criterion& c) {
    auto start = Clock::now();
    for (std::uint64_t i = 0; i < 200; ++i) {
        std::size_t n = i + 1;
        bool directed = i % 2 == 0;
        auto list = oracle::random_simple(n, 0.1, 1000 + i, directed, true, 1, 100);
        auto g = to_adjacency(list);
        auto expect = oracle::all_pairs_distances(list);
        auto johnson = johnson_apsp(*g);
        auto fw = floyd_warshall(*g);
        bool same = true;
        for (std::size_t s = 0; s < n && same; ++s) {
            auto dj = dijkstra(*g, vid(s));
            auto bf = bellman_ford(*g, vid(s));
            for (std::size_t t = 0; t < n; ++t) {
                double want = expect[s][t];
                auto as_double = [](std::optional<double> d) { return d ? *d : oracle::kInf; };
                double a = as_double(dj.distance.at(vid(t)));
                double b = as_double(bf.distance.at(vid(t)));
                double j = as_double(johnson.at(vid(s), vid(t)));
                double f = as_double(fw.at(vid(s), vid(t)));
                if (a != want || b != want || j != want || f != want) {
                    same = false;
                    break;
                }
            }
        }
        c.require(same, "distance mismatch on graph " + std::to_string(i) + " (n=" + std::to_string(n) + ")");
    }
    double secs = seconds_since(start);
    c.require(secs < 60.0, "took " + num(secs) + " s");
    return "200 Gnp graphs n<=200, all-pairs exact, " + num(secs) + " s";
}

// ---- 2. minimum spanning trees ----

EdgeList with_distinct_weights(EdgeList g, std::uint64_t seed) {
    std::vector<double> ws(g.edges.size());
    for (std::size_t i = 0; i < ws.size(); ++i) ws[i] = static_cast<double>(i + 1);
    Rng rng(seed);
    rng.shuffle(ws);
    for (std::size_t i = 0; i < ws.size(); ++i) g.edges[i].weight = ws[i];
    g.kind.weighted = true;
    return g;
}

std::string spanning(Criterion& c) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto list = oracle::random_simple(2 + i % 60, 0.15, 2000 + i, false, true, 1, 20);
        auto g = to_adjacency(list);
        double p = minimum_spanning_forest(*g, MstAlgorithm::Prim).weight;
        double k = minimum_spanning_forest(*g, MstAlgorithm::Kruskal).weight;
        double b = minimum_spanning_forest(*g, MstAlgorithm::Boruvka).weight;
        c.require(p == k && k == b, "weights differ on instance " + std::to_string(i));
    }
    std::size_t exhaustive = 0;
    for (std::uint64_t i = 0; i < 80; ++i) {
        auto list = with_distinct_weights(oracle::random_simple(2 + i % 11, 0.35, 3000 + i), i);
        auto best = oracle::exhaustive_msf(list);
        std::set<std::uint64_t> expect(best.begin(), best.end());
        for (auto alg : {MstAlgorithm::Prim, MstAlgorithm::Kruskal, MstAlgorithm::Boruvka}) {
            std::set<std::uint64_t> got;
            for (auto e : minimum_spanning_forest(*to_adjacency(list), alg).edges) got.insert(raw(e));
            c.require(got == expect, "edge set differs from enumeration on instance " + std::to_string(i));
        }
        ++exhaustive;
    }
    return "200 weight comparisons, " + std::to_string(exhaustive) + " exhaustive edge sets n<=12";
}

// ---- 3. maximum flow ----

std::string flows(Criterion& c) {
    std::size_t instances = 0;
    auto agree = [&](const FlowInstance& fi, const std::string& name) {
        auto g = to_adjacency(fi.graph);
        double ek = max_flow(*g, vid(fi.source), vid(fi.sink), FlowAlgorithm::EdmondsKarp).value;
        double di = max_flow(*g, vid(fi.source), vid(fi.sink), FlowAlgorithm::Dinic).value;
        double pr = max_flow(*g, vid(fi.source), vid(fi.sink), FlowAlgorithm::PushRelabel).value;
        c.require(ek == di && di == pr && ek > 0, name + ": EK " + num(ek) + ", Dinic " + num(di) + ", PR " + num(pr));
        ++instances;
    };
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        for (std::size_t a : {2, 3, 4}) agree(rmfgen_shaped(RmfgenShape::Long, a, 1, 1000, seed), "genrmf long");
        for (std::size_t b : {2, 3}) agree(rmfgen_shaped(RmfgenShape::Flat, b, 1, 1000, seed), "genrmf flat");
        for (std::size_t a : {2, 4, 6}) agree(rmfgen_shaped(RmfgenShape::Wide, a, 1, 1000, seed), "genrmf wide");
        for (std::size_t s : {4, 16, 32}) {
            agree(washington_shaped(WashingtonShape::Wide, s, seed), "washington wide");
            agree(washington_shaped(WashingtonShape::Long, s, seed), "washington long");
        }
    }
    std::size_t dags = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
        std::size_t n = 2 + i % 9;
        auto list = oracle::random_dag(n, 0.4, 4000 + i);
        auto g = to_adjacency(list);
        double want = oracle::min_cut_enumeration(list, 0, n - 1);
        for (auto alg : {FlowAlgorithm::EdmondsKarp, FlowAlgorithm::Dinic, FlowAlgorithm::PushRelabel}) {
            double got = max_flow(*g, vid(0), vid(n - 1), alg).value;
            c.require(got == want, "DAG " + std::to_string(i) + ": flow " + num(got) + " vs cut " + num(want));
        }
        ++dags;
    }
    return std::to_string(instances) + " RMFGEN/washington instances agree, " + std::to_string(dags) +
           " DAGs n<=10 match min-cut enumeration";
}

// ---- 4. matching ----

std::string matchings(Criterion& c) {
    std::size_t general = 0;
    for (std::uint64_t i = 0; i < 520; ++i) {
        auto list = oracle::random_simple(1 + i % 14, 0.1 + 0.05 * static_cast<double>(i % 9), 5000 + i);
        auto got = edmonds_max_cardinality(*to_adjacency(list)).cardinality;
        c.require(got == oracle::max_matching_size(list), "Edmonds differs from brute force on instance " + std::to_string(i));
        ++general;
    }
    for (std::uint64_t i = 0; i < 200; ++i) {
        std::size_t n1 = 1 + i % 20, n2 = 1 + (i * 7) % 23;
        auto list = random_bipartite_p(n1, n2, 0.15, 6000 + i);
        auto g = to_adjacency(list);
        std::vector<VertexId> left;
        for (std::size_t v = 0; v < n1; ++v) left.push_back(vid(v));
        auto hk = hopcroft_karp(*g, left).cardinality;
        auto hk_auto = hopcroft_karp(*g).cardinality;
        auto ed = edmonds_max_cardinality(*g).cardinality;
        c.require(hk == ed && hk_auto == ed, "Hopcroft-Karp differs from Edmonds on bipartite instance " + std::to_string(i));
    }
    Rng rng(77);
    for (int i = 0; i < 60; ++i) {
        oracle::Matrix cost(7, std::vector<double>(7));
        for (auto& row : cost)
            for (auto& x : row) x = static_cast<double>(rng.between(0, 100));
        c.require(hungarian(cost).cost == oracle::assignment_by_permutation(cost),
                  "Hungarian differs from the permutation optimum");
    }
    double worst = 1.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto list = oracle::random_simple(2 + i % 11, 0.4, 7000 + i, false, true, 1, 50);
        double opt = oracle::max_weight_matching(list);
        auto g = to_adjacency(list);
        for (auto m : {ApproxMatching::Greedy, ApproxMatching::PathGrowing}) {
            double w = approx_matching(*g, m).weight;
            c.require(w >= 0.5 * opt && w <= opt, "approximation ratio violated on instance " + std::to_string(i));
            if (opt > 0) worst = std::min(worst, w / opt);
        }
    }
    return std::to_string(general) + " general instances n<=14, HK on 200 bipartite, 60 Hungarian 7x7, "
           "worst approximation ratio " + num(worst);
}

// ---- 5. PageRank ----

std::string pageranks(Criterion& c) {
    double worst_sum = 0, worst_sym = 0;
    auto sum_check = [&](const EdgeList& list) {
        auto r = pagerank(*to_adjacency(list), 0.85, 20, 1e-16);
        double s = 0;
        for (double x : r.scores.values()) s += x;
        worst_sum = std::max(worst_sum, std::fabs(s - 1.0));
        c.require(std::fabs(s - 1.0) <= 1e-9, "scores sum to " + num(s));
    };
    for (std::uint64_t i = 0; i < 50; ++i) {
        sum_check(oracle::random_simple(1 + i * 4, 0.05, 8000 + i, true));  // dangling vertices included
        sum_check(oracle::random_simple(1 + i * 4, 0.1, 8100 + i, false));
    }
    sum_check(barabasi_albert(20, 10, 500, 1));
    RmatParams rp;
    rp.scale = 9;
    rp.directed = true;
    sum_check(rmat(rp, 2));

    auto directed_ring = [](std::size_t n) {
        EdgeList l;
        l.kind = {true, false, false, false};
        l.vertex_count = n;
        for (std::size_t i = 0; i < n; ++i) l.edges.push_back({i, (i + 1) % n, 1.0});
        return l;
    };
    EdgeList empty;
    empty.vertex_count = 9;
    std::vector<EdgeList> symmetric{ring_graph(17), complete_graph(12), hypercube_graph(5), directed_ring(31),
                                    complete_bipartite_graph(6, 6), grid_graph(1, 2), empty};
    for (const auto& list : symmetric) {
        auto r = pagerank(*to_adjacency(list), 0.85, 20, 1e-16);
        double expect = 1.0 / static_cast<double>(list.vertex_count);
        for (double x : r.scores.values()) {
            worst_sym = std::max(worst_sym, std::fabs(x - expect));
            c.require(std::fabs(x - expect) <= 1e-12, "symmetric graph score off by " + num(x - expect));
        }
    }
    return "max |sum-1| = " + num(worst_sum) + ", max symmetric deviation = " + num(worst_sym);
}

// ---- 6. backends ----

EdgeList random_multigraph(std::uint64_t seed) {
    Rng rng(seed);
    EdgeList list;
    list.kind = {seed % 2 == 0, seed % 3 != 0, seed % 5 != 0, seed % 7 != 0};
    list.vertex_count = 1 + rng.below(40);
    std::size_t m = rng.below(120);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t u = rng.below(list.vertex_count), v = rng.below(list.vertex_count);
        if (u == v && !list.kind.allows_self_loops) continue;
        auto key = list.kind.directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
        if (!list.kind.allows_multiple_edges && !seen.insert(key).second) continue;
        list.edges.push_back({u, v, list.kind.weighted ? static_cast<double>(rng.between(1, 9)) : 1.0});
    }
    return list;
}

// CSR always admits loops and multi-edges, so only direction and weighting are compared.
bool same_reads(const Graph& a, const Graph& b) {
    if (a.kind().directed != b.kind().directed || a.kind().weighted != b.kind().weighted || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.vertices() != b.vertices() || a.edges() != b.edges()) return false;
    for (auto e : a.edges())
        if (a.source(e) != b.source(e) || a.target(e) != b.target(e) || a.weight(e) != b.weight(e) ||
            !b.contains_edge(e))
            return false;
    for (auto v : a.vertices()) {
        if (!b.contains_vertex(v)) return false;
        if (a.degree(v) != b.degree(v) || a.in_degree(v) != b.in_degree(v) || a.out_degree(v) != b.out_degree(v))
            return false;
        if (a.out_edges(v) != b.out_edges(v) || a.in_edges(v) != b.in_edges(v) || a.edges_of(v) != b.edges_of(v))
            return false;
        for (auto w : a.vertices())
            if (a.edge_between(v, w) != b.edge_between(v, w) || a.all_edges_between(v, w) != b.all_edges_between(v, w))
                return false;
    }
    VertexId absent = vid(a.vertex_count() + 5);
    return a.contains_vertex(absent) == b.contains_vertex(absent);
}

std::string backends(Criterion& c) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto list = random_multigraph(seed);
        c.require(same_reads(*to_adjacency(list), *to_csr(list)), "read queries differ on fuzzed graph " + std::to_string(seed));
    }
    auto list = gnp(10000, 0.1, 42);
    double adj_bpe, csr_bpe;
    {
        auto a = to_adjacency(list);
        adj_bpe = bytes_per_edge(memory_footprint(*a), a->edge_count());
    }
    {
        auto s = to_csr(list);
        csr_bpe = bytes_per_edge(memory_footprint(*s), s->edge_count());
    }
    double ratio = adj_bpe / csr_bpe;
    c.require(ratio >= 4.0, "bytes/edge ratio " + num(ratio));
    return "100 fuzzed graphs agree; Gnp(10^4,0.1) m=" + std::to_string(list.edges.size()) + ": adjacency " +
           num(adj_bpe) + " B/edge, CSR " + num(csr_bpe) + " B/edge, ratio " + num(ratio);
}

// ---- 7. formats ----

std::vector<std::pair<std::uint64_t, std::uint64_t>> canonical(const EdgeList& g) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const auto& e : g.edges) out.emplace_back(std::min(e.source, e.target), std::max(e.source, e.target));
    std::sort(out.begin(), out.end());
    return out;
}

std::string formats(Criterion& c) {
    c.require(encode_graph6(complete_graph(3)) == "Bw", "K3 does not encode to Bw");
    for (std::uint64_t i = 0; i < 1000; ++i) {
        std::size_t n = i % 100;
        auto list = oracle::random_simple(n, static_cast<double>(i % 11) / 10.0, 9000 + i);
        auto back = decode_graph6(encode_graph6(list));
        c.require(back.vertex_count == n && canonical(back) == canonical(list),
                  "graph6 round trip failed on graph " + std::to_string(i));
    }
    std::size_t files = 0;
    auto idempotent = [&](const EdgeList& list) {
        std::ostringstream first;
        write_dimacs_sp(list, first);
        std::istringstream in(first.str());
        EdgeList read = read_dimacs_sp(in);
        std::ostringstream second;
        write_dimacs_sp(read, second);
        std::istringstream in2(second.str());
        c.require(first.str() == second.str() && read_dimacs_sp(in2) == read, "DIMACS read/write not idempotent");
        ++files;
    };
    for (std::uint64_t i = 0; i < 50; ++i) idempotent(oracle::random_simple(1 + i, 0.2, 9500 + i, true, true, 1, 1000));
    RmatParams rp;
    rp.scale = 8;
    rp.directed = true;
    idempotent(rmat(rp, 3));
    idempotent(washington_shaped(WashingtonShape::Wide, 8, 1).graph);
    return "1000 graph6 round trips, K3 -> Bw, " + std::to_string(files) + " DIMACS sp files idempotent";
}

// ---- 8. generators ----

std::string generator_formulas(Criterion& c) {
    for (std::size_t n : {20, 21, 100, 1000, 5000}) {
        auto g = barabasi_albert(20, 10, n, n);
        c.require(g.vertex_count == n && g.edges.size() == 190 + (n - 20) * 10,
                  "Barabasi-Albert n=" + std::to_string(n) + " has " + std::to_string(g.edges.size()) + " edges");
        std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
        for (const auto& e : g.edges) seen.insert({std::min(e.source, e.target), std::max(e.source, e.target)});
        c.require(seen.size() == g.edges.size(), "Barabasi-Albert produced a parallel edge");
    }
    for (std::size_t scale : {4, 8, 12}) {
        RmatParams p;
        p.scale = scale;
        auto g = rmat(p, scale);
        std::size_t n = std::size_t{1} << scale;
        c.require(g.vertex_count == n && g.edges.size() == 16 * n, "R-MAT scale " + std::to_string(scale));
    }
    for (std::size_t a : {2, 3, 5})
        for (std::size_t b : {1, 2, 4, 7}) {
            auto f = rmfgen(a, b, 1, 100, a * 10 + b);
            c.require(f.graph.vertex_count == a * a * b && f.graph.edges.size() == 4 * a * (a - 1) * b + a * (b - 1),
                      "RMFGEN a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    for (double p : {0.0, 0.1, 0.5, 1.0})
        for (std::size_t k : {2, 4, 6}) {
            std::size_t n = 60;
            auto g = watts_strogatz(n, k, p, false, 11);
            c.require(g.edges.size() == n * k / 2, "Watts-Strogatz n=60 k=" + std::to_string(k) + " p=" + num(p));
        }
    return "BA, R-MAT, RMFGEN and Watts-Strogatz counts match their formulas";
}

// ---- 9. NP-hard toolkit ----

oracle::Matrix matrix_of(const EdgeList& list) {
    oracle::Matrix w(list.vertex_count, std::vector<double>(list.vertex_count, 0));
    for (const auto& e : list.edges) w[e.source][e.target] = w[e.target][e.source] = e.weight;
    return w;
}

EdgeList permuted(const EdgeList& g, std::uint64_t seed) {
    std::vector<std::uint64_t> perm(g.vertex_count);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    Rng rng(seed);
    rng.shuffle(perm);
    EdgeList out = g;
    for (auto& e : out.edges) {
        e.source = perm[e.source];
        e.target = perm[e.target];
    }
    return out;
}

std::string np_toolkit(Criterion& c) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto list = oracle::random_simple(1 + i % 10, 0.2 + 0.1 * static_cast<double>(i % 7), 10000 + i);
        auto expect = oracle::maximal_cliques(list);
        auto g = to_adjacency(list);
        for (auto variant : {CliqueVariant::Pivot, CliqueVariant::DegeneracyOrdering}) {
            std::set<std::set<std::size_t>> got;
            for (const auto& clique : maximal_cliques(*g, variant)) {
                std::set<std::size_t> s;
                for (auto v : clique) s.insert(raw(v));
                got.insert(s);
            }
            c.require(got == expect, "Bron-Kerbosch differs from brute force on instance " + std::to_string(i));
        }
    }
    for (std::uint64_t i = 0; i < 200; ++i) {
        bool directed = i % 3 == 0;
        std::size_t n = 1 + i % 7;
        auto g1 = oracle::random_simple(n, 0.4, 11000 + i, directed);
        auto g2 = i % 2 ? permuted(g1, i) : oracle::random_simple(n, 0.4, 11500 + i, directed);
        c.require(isomorphic(*to_adjacency(g1), *to_adjacency(g2)) == oracle::embeds(g1, g2, false),
                  "VF2 isomorphism differs from permutation search on instance " + std::to_string(i));
        auto small = oracle::random_simple(1 + i % 4, 0.5, 12000 + i, directed);
        bool found = !vf2(*to_adjacency(small), *to_adjacency(g1), IsoMode::InducedSubgraph, 1).empty();
        c.require(found == oracle::embeds(small, g1, true),
                  "VF2 induced subgraph differs from permutation search on instance " + std::to_string(i));
    }
    for (std::uint64_t i = 0; i < 60; ++i) {
        std::size_t n = 1 + i % 9;
        auto list = complete_graph(n);
        list.kind.weighted = true;
        Rng rng(13000 + i);
        for (auto& e : list.edges) e.weight = static_cast<double>(rng.between(1, 100));
        double got = tsp(*to_adjacency(list), TspMethod::HeldKarp).weight;
        c.require(got == oracle::tsp_by_permutation(matrix_of(list)), "Held-Karp differs on instance " + std::to_string(i));
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        EdgeList list = i % 4 == 0   ? grid_graph(2 + i % 5, 3 + i % 4)
                        : i % 4 == 1 ? ring_graph(2 * (2 + i % 10))
                        : i % 4 == 2 ? oracle::random_k_tree(2 + i % 30, 1, 14000 + i)
                                     : random_bipartite_p(1 + i % 12, 1 + i % 9, 0.3, 14000 + i);
        auto col = color(*to_adjacency(list), ColoringStrategy::Saturation);
        bool proper = true;
        for (const auto& e : list.edges) proper = proper && col.color.at(vid(e.source)) != col.color.at(vid(e.target));
        c.require(proper && col.count <= 2, "DSatur used " + std::to_string(col.count) + " colours on a bipartite graph");
    }
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto list = oracle::random_simple(1 + i % 14, 0.25, 15000 + i);
        auto cover = vertex_cover(*to_adjacency(list), VertexCoverMethod::TwoApprox);
        std::set<std::uint64_t> in;
        for (auto v : cover) in.insert(raw(v));
        bool covers = true;
        for (const auto& e : list.edges) covers = covers && (in.count(e.source) || in.count(e.target));
        std::size_t opt = oracle::min_vertex_cover(list);
        c.require(covers && cover.size() >= opt && cover.size() <= 2 * opt,
                  "vertex cover of size " + std::to_string(cover.size()) + " vs OPT " + std::to_string(opt));
    }
    return "Bron-Kerbosch x2, VF2, Held-Karp, DSatur and 2-approx vertex cover match their oracles";
}

// ---- 10. determinism ----

std::string fingerprint() {
    std::ostringstream out;
    auto emit = [&](const EdgeList& g) { write_csv(g, out); };
    emit(gnp(300, 0.05, 1));
    emit(barabasi_albert(20, 10, 300, 2));
    RmatParams rp;
    rp.scale = 8;
    emit(rmat(rp, 3));
    emit(watts_strogatz(100, 4, 0.3, false, 4));
    auto flow = rmfgen_shaped(RmfgenShape::Long, 3, 1, 1000, 5);
    emit(flow.graph);
    auto wg = oracle::random_simple(120, 0.1, 6, true, true);
    auto g = to_adjacency(wg);
    auto d = dijkstra(*g, vid(0));
    for (const auto& x : d.distance.values()) out << (x ? *x : -1.0) << ',';
    auto pr = pagerank(*g, 0.85, 20, 1e-16);
    char buf[32];
    for (double x : pr.scores.values()) {
        std::snprintf(buf, sizeof buf, "%a,", x);
        out << buf;
    }
    auto u = oracle::random_simple(120, 0.1, 7, false, true);
    auto mst = minimum_spanning_forest(*to_adjacency(u), MstAlgorithm::Prim);
    for (auto e : mst.edges) out << raw(e) << ',';
    auto f = max_flow(*to_adjacency(flow.graph), vid(flow.source), vid(flow.sink));
    for (double x : f.flow) out << x << ',';
    return out.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(BENCH_EXE) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string determinism(Criterion& c) {
    std::string a = fingerprint(), b = fingerprint();
    c.require(a == b, "in-process outputs differ");
    const char* cmds[] = {
        "generate rmat scale=10 --seed 3 --format dimacs-sp --out ",
        "generate rmfgen a=4 b=16 --seed 3 --format dimacs-sp --out ",
        "run --experiment memory --family gnp --sizes 100,200 --reps 3 --seed 5 --backend all --out ",
    };
    std::size_t files = 0;
    for (const char* cmd : cmds) {
        std::string p1 = "acceptance_det_1.out", p2 = "acceptance_det_2.out";
        c.require(run(cmd + p1) == 0 && run(cmd + p2) == 0, std::string("bench failed: ") + cmd);
        std::string x = slurp(p1), y = slurp(p2);
        c.require(!x.empty() && x == y, std::string("outputs differ: ") + cmd);
        ++files;
        std::remove(p1.c_str());
        std::remove(p2.c_str());
    }
    return "in-process fingerprint (" + std::to_string(a.size()) + " bytes) and " + std::to_string(files) +
           " CLI outputs byte-identical across two runs";
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<std::string(Criterion&)> body;
    };
    const Entry entries[] = {
        {1, "shortest paths", shortest_paths},  {2, "minimum spanning trees", spanning},
        {3, "maximum flow", flows},             {4, "matching", matchings},
        {5, "PageRank", pageranks},             {6, "backends", backends},
        {7, "formats", formats},                {8, "generators", generator_formulas},
        {9, "NP-hard toolkit", np_toolkit},     {10, "determinism", determinism},
    };
    int failed = 0;
    for (const auto& e : entries) {
        Criterion c;
        std::string detail;
        auto start = Clock::now();
        try {
            detail = e.body(c);
        } catch (const std::exception& ex) {
            c.require(false, std::string("exception: ") + ex.what());
        }
        double secs = seconds_since(start);
        std::printf("%s %2d %s: %s (%zu checks, %.1f s)\n", c.ok() ? "PASS" : "FAIL", e.id, e.name,
                    c.ok() ? detail.c_str() : c.failure().c_str(), c.checks(), secs);
        std::fflush(stdout);
        failed += c.ok() ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
