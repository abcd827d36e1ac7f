#include "doctest.h"

#include <map>
#include <set>

#include "oracles.hpp"
#include "tessera/cycles.hpp"
#include "tessera/generators.hpp"
#include "tessera/lca.hpp"

using namespace tessera;

namespace {

EdgeList digraph(std::size_t n, std::vector<EdgeRecord> edges) {
    EdgeList g;
    g.kind = {true, true, true, false};
    g.vertex_count = n;
    g.edges = std::move(edges);
    return g;
}

// Cycles as vertex sequences starting at their smallest vertex, by DFS over
// larger vertices only.
std::set<std::vector<std::uint64_t>> brute_cycles(const EdgeList& g) {
    const auto adj = oracle::adjacency(g);
    const std::size_t n = g.vertex_count;
    std::set<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> path;
    std::vector<char> on(n, 0);
    auto rec = [&](auto&& self, std::size_t u, std::size_t s) -> void {
        for (std::size_t w = 0; w < n; ++w) {
            if (!adj[u][w])
                continue;
            if (w == s)
                out.insert(path);
            else if (w > s && !on[w]) {
                on[w] = 1;
                path.push_back(w);
                self(self, w, s);
                path.pop_back();
                on[w] = 0;
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        path = {s};
        on[s] = 1;
        rec(rec, s, s);
        on[s] = 0;
    }
    return out;
}

std::set<std::vector<std::uint64_t>> as_set(const std::vector<std::vector<VertexId>>& cycles) {
    std::set<std::vector<std::uint64_t>> s;
    for (const auto& c : cycles) {
        std::vector<std::uint64_t> raw_ids;
        for (auto v : c)
            raw_ids.push_back(raw(v));
        s.insert(raw_ids);
    }
    return s;
}

using Bits = std::vector<char>;

Bits to_bits(const Graph& g, const std::vector<EdgeId>& cycle, const std::map<EdgeId, std::size_t>& pos) {
    Bits b(pos.size(), 0);
    for (auto e : cycle)
        b[pos.at(e)] ^= 1;
    (void)g;
    return b;
}

bool eulerian(const Graph& g, const Bits& bits, const std::vector<EdgeId>& edges) {
    std::map<VertexId, int> deg;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) {
            deg[g.source(edges[i])] += 1;
            deg[g.target(edges[i])] += 1;
        }
    for (auto [v, d] : deg)
        if (d % 2)
            return false;
    return true;
}

std::size_t gf2_rank(std::vector<Bits> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c])
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = 0; k < cols; ++k)
                    rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

void check_basis(const Graph& g, const CycleBasis& basis, std::size_t expect_dim) {
    CHECK(basis.dimension == expect_dim);
    REQUIRE(basis.cycles.size() == expect_dim);
    std::vector<EdgeId> edges = g.edges();
    std::map<EdgeId, std::size_t> pos;
    for (std::size_t i = 0; i < edges.size(); ++i)
        pos[edges[i]] = i;
    std::vector<Bits> rows;
    for (const auto& c : basis.cycles) {
        std::set<EdgeId> distinct(c.begin(), c.end());
        CHECK(distinct.size() == c.size());
        rows.push_back(to_bits(g, c, pos));
        CHECK(eulerian(g, rows.back(), edges));
    }
    CHECK(gf2_rank(rows) == expect_dim);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        Bits sum = rows[i];
        for (std::size_t k = 0; k < sum.size(); ++k)
            sum[k] ^= rows[i + 1][k];
        CHECK(eulerian(g, sum, edges));
    }
}

// Parent pointers from a BFS over the edge list, then walk up.
struct NaiveTree {
    std::vector<std::size_t> parent, depth;
    NaiveTree(const EdgeList& t, std::size_t root) : parent(t.vertex_count), depth(t.vertex_count) {
        auto adj = oracle::adjacency(t);
        std::vector<char> seen(t.vertex_count, 0);
        std::vector<std::size_t> queue{root};
        seen[root] = 1;
        parent[root] = root;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (std::size_t w = 0; w < t.vertex_count; ++w)
                if (adj[queue[i]][w] && !seen[w]) {
                    seen[w] = 1;
                    parent[w] = queue[i];
                    depth[w] = depth[queue[i]] + 1;
                    queue.push_back(w);
                }
    }
    std::size_t lca(std::size_t a, std::size_t b) const {
        std::set<std::size_t> up;
        for (;; a = parent[a]) {
            up.insert(a);
            if (parent[a] == a)
                break;
        }
        while (!up.count(b))
            b = parent[b];
        return b;
    }
};

constexpr LcaMethod kMethods[] = {LcaMethod::Naive, LcaMethod::TarjanOffline, LcaMethod::BinaryLifting,
                                  LcaMethod::EulerRmq};

} // namespace

TEST_CASE("johnson simple cycles") {
    CHECK(enumerate_simple_cycles(*to_adjacency(digraph(3, {{0, 1}, {1, 2}, {2, 0}}))).size() == 1);
    CHECK(enumerate_simple_cycles(*to_adjacency(digraph(2, {{0, 1}, {1, 0}, {1, 0}}))).size() == 1);
    auto loops = enumerate_simple_cycles(*to_adjacency(digraph(2, {{0, 0}, {0, 1}})));
    REQUIRE(loops.size() == 1);
    CHECK(loops[0] == std::vector<VertexId>{vid(0)});
    EdgeList k4 = digraph(4, {});
    for (std::uint64_t u = 0; u < 4; ++u)
        for (std::uint64_t v = 0; v < 4; ++v)
            if (u != v)
                k4.edges.push_back({u, v});
    auto all = enumerate_simple_cycles(*to_adjacency(k4));
    CHECK(all.size() == 20);
    CHECK(as_set(all) == brute_cycles(k4));
    CHECK_THROWS_AS(enumerate_simple_cycles(*to_adjacency(ring_graph(4))), GraphError);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto list = oracle::random_simple(1 + seed % 7, 0.2 + 0.1 * static_cast<double>(seed % 5), seed, true);
        auto cycles = enumerate_simple_cycles(*to_adjacency(list));
        auto set = as_set(cycles);
        CHECK(set.size() == cycles.size());
        CHECK(set == brute_cycles(list));
    }
}

TEST_CASE("cycle bases") {
    constexpr CycleBasisMethod kAll[] = {CycleBasisMethod::Paton, CycleBasisMethod::FundamentalBfs,
                                         CycleBasisMethod::FundamentalDfs};
    for (auto method : kAll) {
        auto tree = to_adjacency(oracle::random_k_tree(20, 1, 3));
        CHECK(cycle_basis(*tree, method).cycles.empty());
        auto k3 = to_adjacency(complete_graph(3));
        check_basis(*k3, cycle_basis(*k3, method), 1);
        auto k4 = to_adjacency(complete_graph(4));
        check_basis(*k4, cycle_basis(*k4, method), 3);
        // loops and parallel edges are cycles too
        EdgeList multi;
        multi.kind = {false, true, true, false};
        multi.vertex_count = 3;
        multi.edges = {{0, 1}, {0, 1}, {1, 1}, {1, 2}};
        auto mg = to_adjacency(multi);
        check_basis(*mg, cycle_basis(*mg, method), 2);
    }
    CHECK_THROWS_AS(cycle_basis(*to_adjacency(digraph(2, {{0, 1}})), CycleBasisMethod::Paton), GraphError);

    for (std::uint64_t seed = 0; seed < 90; ++seed) {
        auto list = oracle::random_simple(2 + seed % 15, 0.3, seed);
        auto g = to_adjacency(list);
        const auto c = oracle::component_count(list.vertex_count, list.edges);
        const auto dim = list.edges.size() + c - list.vertex_count;
        for (auto method : kAll)
            check_basis(*g, cycle_basis(*g, method), dim);
    }
}

TEST_CASE("lca small trees") {
    EdgeList path;
    path.vertex_count = 3;
    path.edges = {{0, 1}, {1, 2}};
    auto p = to_adjacency(path);
    auto star = to_adjacency(star_graph(6));
    for (auto method : kMethods) {
        CHECK(lca_query(lca_preprocess(*p, vid(0), method), vid(2), vid(1)) == vid(1));
        LcaIndex s(*star, vid(0), method);
        CHECK(s.query(vid(3), vid(5)) == vid(0));
        CHECK(s.query(vid(4), vid(4)) == vid(4));
        CHECK_THROWS_AS(s.query(vid(4), vid(40)), GraphError);
        try {
            LcaIndex bad(*to_adjacency(ring_graph(4)), vid(0), method);
            FAIL("ring accepted as a tree");
        } catch (const GraphError& e) {
            CHECK(e.code() == ErrorCode::NotATree);
        }
        EdgeList forest;
        forest.vertex_count = 4;
        forest.edges = {{0, 1}, {2, 3}, {2, 3}};
        CHECK_THROWS_AS(LcaIndex(*to_adjacency(forest), vid(0), method), GraphError);
    }
    CHECK(lca_batch_tarjan(*star, vid(0), {}).empty());
    CHECK(lca_batch_tarjan(*star, vid(0), {{vid(2), vid(2)}}) == std::vector<VertexId>{vid(2)});

    // a tree given as parent -> child arcs
    auto arcs = digraph(4, {{0, 1}, {0, 2}, {2, 3}});
    CHECK(LcaIndex(*to_adjacency(arcs), vid(0), LcaMethod::EulerRmq).query(vid(1), vid(3)) == vid(0));
}

TEST_CASE("lca methods agree with naive walk-up") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const std::size_t n = 500;
        auto list = oracle::random_k_tree(n, 1, seed);
        auto g = to_adjacency(list);
        Rng rng(seed);
        const std::size_t root = rng.below(n);
        NaiveTree naive(list, root);
        std::vector<std::pair<VertexId, VertexId>> queries;
        for (int i = 0; i < 1000; ++i)
            queries.push_back({vid(rng.below(n)), vid(rng.below(n))});
        auto batch = lca_batch_tarjan(*g, vid(root), queries);
        for (auto method : kMethods) {
            LcaIndex idx(*g, vid(root), method);
            for (std::size_t i = 0; i < queries.size(); ++i) {
                auto [u, v] = queries[i];
                const auto expect = vid(naive.lca(raw(u), raw(v)));
                CHECK(idx.query(u, v) == expect);
                CHECK(idx.query(v, u) == expect);
                CHECK(batch[i] == expect);
            }
            for (std::size_t v = 0; v < n; v += 7) {
                CHECK(idx.query(vid(v), vid(v)) == vid(v));
                CHECK(idx.query(vid(root), vid(v)) == vid(root));
                CHECK(idx.depth(vid(v)) == naive.depth[v]);
            }
        }
        LcaIndex lift(*g, vid(root), LcaMethod::BinaryLifting);
        const auto& up = lift.jump_table();
        for (std::size_t j = 1; j < up.size(); ++j)
            for (std::size_t v = 0; v < n; ++v)
                CHECK(up[j][v] == up[j - 1][up[j - 1][v]]);
        LcaIndex euler(*g, vid(root), LcaMethod::EulerRmq);
        CHECK(euler.euler_tour().size() == 2 * n - 1);
        const auto& sp = euler.sparse_table();
        for (std::size_t k = 1; k < sp.size(); ++k)
            for (std::size_t i = 0; i < sp[k].size(); ++i) {
                const auto a = sp[k - 1][i], b = sp[k - 1][i + (std::size_t{1} << (k - 1))];
                CHECK(euler.tour_depth(sp[k][i]) == std::min(euler.tour_depth(a), euler.tour_depth(b)));
            }
    }
}

TEST_CASE("dag lca") {
    auto diamond = to_adjacency(digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    CHECK(dag_lca(*diamond, vid(1), vid(2)) == std::vector<VertexId>{vid(0)});
    CHECK(dag_lca(*diamond, vid(3), vid(1)) == std::vector<VertexId>{vid(1)});
    auto crossed = to_adjacency(digraph(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}}));
    CHECK(dag_lca(*crossed, vid(2), vid(3)) == std::vector<VertexId>{vid(0), vid(1)});
    auto apart = to_adjacency(digraph(2, {}));
    CHECK(dag_lca(*apart, vid(0), vid(1)).empty());
    CHECK_THROWS_AS(dag_lca(*to_adjacency(digraph(2, {{0, 1}, {1, 0}})), vid(0), vid(1)), GraphError);
}
