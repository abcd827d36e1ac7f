#include "doctest.h"

#include <algorithm>
#include <unordered_map>

#include "oracles.hpp"
#include "tessera/adjacency_store.hpp"
#include "tessera/generators.hpp"
#include "tessera/random.hpp"
#include "tessera/traversal.hpp"
#include "tessera/views.hpp"

using namespace tessera;

namespace {

// Compares every read query of `view` against an eager copy. Edge ids differ
// between the two, so they are matched by iteration position.
void check_against_copy(const Graph& view) {
    auto copy = materialize(view);
    REQUIRE(copy->vertex_count() == view.vertex_count());
    REQUIRE(copy->edge_count() == view.edge_count());
    CHECK(copy->vertices() == view.vertices());
    std::unordered_map<EdgeId, EdgeId> to_copy;
    auto ve = view.edges(), ce = copy->edges();
    for (std::size_t i = 0; i < ve.size(); ++i)
        to_copy[ve[i]] = ce[i];
    // Incidence order may legitimately differ (an undirected view lists the
    // backing's out-edges first), so incidence lists compare as multisets.
    auto mapped = [&](std::vector<EdgeId> es) {
        for (auto& e : es)
            e = to_copy.at(e);
        std::sort(es.begin(), es.end());
        return es;
    };
    auto sorted = [](std::vector<EdgeId> es) {
        std::sort(es.begin(), es.end());
        return es;
    };
    for (auto e : ve) {
        CHECK(view.source(e) == copy->source(to_copy[e]));
        CHECK(view.target(e) == copy->target(to_copy[e]));
        CHECK(view.weight(e) == copy->weight(to_copy[e]));
        CHECK(view.contains_edge(e));
    }
    for (auto v : view.vertices()) {
        CHECK(view.degree(v) == copy->degree(v));
        CHECK(view.out_degree(v) == copy->out_degree(v));
        CHECK(view.in_degree(v) == copy->in_degree(v));
        CHECK(mapped(view.out_edges(v)) == sorted(copy->out_edges(v)));
        CHECK(mapped(view.in_edges(v)) == sorted(copy->in_edges(v)));
        for (auto w : view.vertices()) {
            auto a = view.edge_between(v, w);
            auto b = copy->edge_between(v, w);
            REQUIRE(a.has_value() == b.has_value());
            if (a)
                CHECK(to_copy.at(*a) == *b);
        }
    }
}

GraphPtr random_backing(std::uint64_t seed, bool directed) {
    Rng rng(seed);
    auto g = build_graph({directed, true, true, rng.bernoulli(0.5)});
    std::size_t n = 1 + rng.below(25);
    for (std::size_t i = 0; i < n; ++i)
        g->add_vertex(vid(i * 3));
    std::size_t m = rng.below(60);
    for (std::size_t i = 0; i < m; ++i)
        g->add_edge(vid(3 * rng.below(n)), vid(3 * rng.below(n)));
    return g;
}

} // namespace

TEST_CASE("induced subgraph") {
    auto k4 = to_adjacency(complete_graph(4));
    auto k3 = as_subgraph(*k4, [](VertexId v) { return raw(v) < 3; });
    CHECK(k3->vertex_count() == 3);
    CHECK(k3->edge_count() == 3);
    CHECK_FALSE(k3->contains_vertex(vid(3)));
    for (auto v : k3->vertices())
        CHECK(k3->degree(v) == 2);
    CHECK_THROWS_AS(k3->add_vertex(vid(9)), GraphError);

    auto all = as_subgraph(*k4, [](VertexId) { return true; }, [](EdgeId) { return true; });
    check_against_copy(*all);
}

TEST_CASE("subgraph views match their materialization") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_backing(seed, seed % 2);
        Rng rng(seed + 1000);
        std::uint64_t vmask = rng.next(), emask = rng.next();
        auto view = as_subgraph(
            *g, [=](VertexId v) { return (vmask >> (raw(v) % 64) & 1u) != 0; },
            [=](EdgeId e) { return (emask >> (raw(e) % 64) & 1u) != 0; });
        check_against_copy(*view);
    }
}

TEST_CASE("undirected view of a digraph") {
    auto g = build_graph({true, false, false, false});
    for (int i = 0; i < 3; ++i)
        g->add_vertex(vid(i));
    auto a = g->add_edge(vid(0), vid(1));
    auto b = g->add_edge(vid(1), vid(0));
    auto u = as_undirected(*g);
    CHECK_FALSE(u->is_directed());
    CHECK(u->edge_between(vid(1), vid(0)) == a);
    CHECK(u->all_edges_between(vid(0), vid(1)) == std::vector<EdgeId>{a, b});
    CHECK(u->degree(vid(0)) == 2);
    CHECK(u->edge_count() == 2);
    CHECK_THROWS_AS(u->add_edge(vid(0), vid(2)), GraphError);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto d = random_backing(seed, true);
        auto view = as_undirected(*d);
        check_against_copy(*view);
        auto weak = connected_components(*d);
        auto via_view = connected_components(*view);
        CHECK(weak.count == via_view.count);
        CHECK(weak.component.values() == via_view.component.values());
        for (auto v : d->vertices())
            CHECK(view->degree(v) == d->in_degree(v) + d->out_degree(v));
    }
}

TEST_CASE("weight overlay") {
    auto g = build_graph({});
    g->add_vertex(vid(0));
    g->add_vertex(vid(1));
    g->add_vertex(vid(2));
    auto e = g->add_edge(vid(0), vid(1));
    auto f = g->add_edge(vid(1), vid(2));
    auto w = as_weighted(*g, {{e, 3.0}});
    CHECK(w->is_weighted());
    CHECK(w->weight(e) == 3.0);
    CHECK(w->weight(f) == 1.0);
    w->set_weight(f, 0.25);
    CHECK(w->weight(f) == 0.25);
    CHECK(g->weight(f) == 1.0);
    check_against_copy(*w);
}

TEST_CASE("unmodifiable view") {
    auto g = build_graph({});
    g->add_vertex(vid(0));
    g->add_vertex(vid(1));
    auto ro = as_unmodifiable(*g);
    auto code = [&](auto fn) {
        try {
            fn();
        } catch (const GraphError& e) {
            return e.code();
        }
        return ErrorCode::Io;
    };
    CHECK(code([&] { ro->add_vertex(vid(5)); }) == ErrorCode::Immutable);
    CHECK(code([&] { ro->add_edge(vid(0), vid(1)); }) == ErrorCode::Immutable);
    CHECK(code([&] { ro->remove_vertex(vid(0)); }) == ErrorCode::Immutable);
    g->add_edge(vid(0), vid(1));
    CHECK(ro->degree(vid(0)) == 1);
    CHECK(ro->edge_count() == 1);
    check_against_copy(*ro);
}
