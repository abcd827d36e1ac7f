#include "doctest.h"

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "tessera/csr_store.hpp"
#include "tessera/flow.hpp"
#include "tessera/generators.hpp"

using namespace tessera;

namespace {

constexpr FlowAlgorithm kAll[] = {FlowAlgorithm::EdmondsKarp, FlowAlgorithm::Dinic, FlowAlgorithm::PushRelabel};

// Capacity and conservation checked straight from the edge list.
void check_feasible(const EdgeList& list, const FlowResult& f) {
    REQUIRE(f.flow.size() == list.edges.size());
    std::vector<double> net(list.vertex_count, 0.0);
    for (std::size_t j = 0; j < list.edges.size(); ++j) {
        const auto& e = list.edges[j];
        const double x = f.flow[j];
        if (list.kind.directed)
            CHECK(x >= -1e-9);
        CHECK(std::abs(x) <= e.weight + 1e-9);
        net[e.source] -= x;
        net[e.target] += x;
    }
    for (std::size_t v = 0; v < list.vertex_count; ++v) {
        if (vid(v) == f.source)
            CHECK(-net[v] == doctest::Approx(f.value));
        else if (vid(v) == f.sink)
            CHECK(net[v] == doctest::Approx(f.value));
        else
            CHECK(std::abs(net[v]) < 1e-9);
    }
}

EdgeList weighted(bool directed, std::size_t n, std::vector<EdgeRecord> edges) {
    EdgeList g;
    g.kind = {directed, false, true, true};
    g.vertex_count = n;
    g.edges = std::move(edges);
    return g;
}

} // namespace

TEST_CASE("small flows") {
    auto path = weighted(true, 3, {{0, 1, 1}, {1, 2, 1}});
    auto diamond = weighted(true, 4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    for (auto alg : kAll) {
        CHECK(max_flow(*to_adjacency(path), vid(0), vid(2), alg).value == 1);
        auto f = max_flow(*to_adjacency(diamond), vid(0), vid(3), alg);
        CHECK(f.value == 2);
        check_feasible(diamond, f);
        CHECK(min_st_cut(*to_adjacency(path), vid(0), vid(2), alg).weight == 1);
    }
    auto g = to_adjacency(path);
    CHECK_THROWS_AS(max_flow(*g, vid(1), vid(1)), GraphError);
    auto neg = weighted(true, 2, {{0, 1, -1}});
    CHECK_THROWS_AS(max_flow(*to_adjacency(neg), vid(0), vid(1)), NegativeWeightError);
    CHECK_THROWS_AS(max_flow(*g, vid(0), vid(9)), GraphError);

    // Flow into the source does not count toward the value.
    auto back = weighted(true, 3, {{0, 1, 5}, {1, 0, 5}, {1, 2, 3}});
    for (auto alg : kAll) {
        auto f = max_flow(*to_adjacency(back), vid(0), vid(2), alg);
        CHECK(f.value == 3);
        check_feasible(back, f);
    }
}

TEST_CASE("bridge is the minimum cut") {
    auto list = weighted(false, 6, {{0, 1, 5}, {1, 2, 5}, {0, 2, 5}, {2, 3, 2}, {3, 4, 5}, {4, 5, 5}, {3, 5, 5}});
    auto g = to_adjacency(list);
    for (auto alg : kAll) {
        auto cut = min_st_cut(*g, vid(0), vid(5), alg);
        CHECK(cut.weight == 2);
        REQUIRE(cut.cut_edges.size() == 1);
        CHECK(g->source(cut.cut_edges[0]) == vid(2));
        CHECK(cut.source_side == std::vector<VertexId>{vid(0), vid(1), vid(2)});
    }
}

TEST_CASE("max flow equals min cut enumeration") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 2 + seed % 9;
        auto list = oracle::random_dag(n, 0.5, seed);
        auto g = to_adjacency(list);
        const double expect = oracle::min_cut_enumeration(list, 0, n - 1);
        for (auto alg : kAll) {
            auto f = max_flow(*g, vid(0), vid(n - 1), alg);
            CHECK(f.value == expect);
            check_feasible(list, f);
            CHECK(min_st_cut(*g, vid(0), vid(n - 1), alg).weight == expect);
        }
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 2 + seed % 9;
        auto list = oracle::random_simple(n, 0.5, seed, seed % 2 == 0, true, 1, 15);
        auto g = to_adjacency(list);
        const std::size_t s = seed % n, t = (s + 1 + seed / 3 % (n - 1)) % n;
        const double expect = oracle::min_cut_enumeration(list, s, t);
        for (auto alg : kAll) {
            auto f = max_flow(*g, vid(s), vid(t), alg);
            CHECK(f.value == expect);
            check_feasible(list, f);
        }
    }
}

TEST_CASE("real capacities") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto list = oracle::random_dag(9, 0.5, seed);
        Rng rng(seed);
        for (auto& e : list.edges)
            e.weight = rng.unit() * 10;
        auto g = to_adjacency(list);
        const double expect = oracle::min_cut_enumeration(list, 0, 8);
        for (auto alg : kAll) {
            auto f = max_flow(*g, vid(0), vid(8), alg);
            CHECK(std::abs(f.value - expect) < 1e-9);
            check_feasible(list, f);
        }
    }
}

TEST_CASE("generated flow networks agree") {
    auto agree = [](const FlowInstance& inst) {
        auto g = to_csr(inst.graph);
        double values[3];
        int i = 0;
        for (auto alg : kAll) {
            auto f = max_flow(*g, vid(inst.source), vid(inst.sink), alg);
            check_feasible(inst.graph, f);
            values[i++] = f.value;
        }
        CHECK(values[0] == values[1]);
        CHECK(values[1] == values[2]);
        CHECK(values[0] > 0);
    };
    for (auto shape : {RmfgenShape::Long, RmfgenShape::Flat, RmfgenShape::Wide})
        for (std::size_t size = 2; size <= 4; ++size)
            agree(rmfgen_shaped(shape, size, 1, 100, size * 31));
    for (auto shape : {WashingtonShape::Wide, WashingtonShape::Long})
        for (std::size_t size : {4, 16})
            agree(washington_shaped(shape, size, size));
}

TEST_CASE("stoer wagner") {
    auto two = weighted(false, 6, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {3, 4, 3}, {4, 5, 3}, {3, 5, 3}, {2, 3, 1}});
    auto cut = stoer_wagner_min_cut(*to_adjacency(two));
    CHECK(cut.weight == 1);
    CHECK(cut.source_side == std::vector<VertexId>{vid(0), vid(1), vid(2)});
    CHECK(stoer_wagner_min_cut(*to_adjacency(complete_graph(4))).weight == 3);

    auto split = weighted(false, 4, {{0, 1, 2}, {2, 3, 2}});
    auto zero = stoer_wagner_min_cut(*to_adjacency(split));
    CHECK(zero.weight == 0);
    CHECK(zero.cut_edges.empty());
    CHECK(zero.source_side.size() < 4);

    auto single = build_graph({});
    single->add_vertex(vid(0));
    CHECK_THROWS_AS(stoer_wagner_min_cut(*single), GraphError);

    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto list = oracle::random_simple(2 + seed % 9, 0.5, seed, false, true, 1, 20);
        auto c = stoer_wagner_min_cut(*to_adjacency(list));
        CHECK(c.weight == oracle::global_min_cut(list));
        double crossing = 0;
        std::set<VertexId> side(c.source_side.begin(), c.source_side.end());
        for (const auto& e : list.edges)
            if (side.count(vid(e.source)) != side.count(vid(e.target)))
                crossing += e.weight;
        CHECK(crossing == c.weight);
    }
}

TEST_CASE("gomory hu") {
    auto star = weighted(false, 5, {{0, 1, 4}, {0, 2, 7}, {0, 3, 1}, {0, 4, 9}});
    auto t = gomory_hu(*to_adjacency(star));
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> got;
    for (const auto& e : t.edges)
        got[std::minmax(raw(e.u), raw(e.v))] = e.weight;
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> want{
        {{0, 1}, 4}, {{0, 2}, 7}, {{0, 3}, 1}, {{0, 4}, 9}};
    CHECK(got == want);

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 8;
        auto list = oracle::random_simple(n, 0.5, seed, false, true, 1, 20);
        auto g = to_adjacency(list);
        auto tree = gomory_hu(*g, kAll[seed % 3]);
        CHECK(tree.edges.size() == n - 1);
        double tree_min = oracle::kInf;
        for (const auto& e : tree.edges)
            tree_min = std::min(tree_min, e.weight);
        CHECK(tree_min == stoer_wagner_min_cut(*g).weight);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t u = s + 1; u < n; ++u)
                CHECK(tree.min_cut(vid(s), vid(u)) == max_flow(*g, vid(s), vid(u)).value);
    }
}
