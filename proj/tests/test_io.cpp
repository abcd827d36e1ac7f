#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "tessera/generators.hpp"
#include "tessera/io.hpp"

using namespace tessera;

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

std::vector<Pair> canonical(const EdgeList& g) {
    std::vector<Pair> out;
    for (const auto& e : g.edges)
        out.emplace_back(std::min(e.source, e.target), std::max(e.source, e.target));
    std::sort(out.begin(), out.end());
    return out;
}

EdgeList undirected(std::size_t n, std::vector<Pair> edges) {
    EdgeList g;
    g.kind = GraphKind{false, true, true, false};
    g.vertex_count = n;
    for (auto [u, v] : edges) g.edges.push_back({u, v, kDefaultEdgeWeight});
    return g;
}

EdgeList petersen() {
    return undirected(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

template <class F>
ParseError parse_error(F f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

} // namespace

TEST_CASE("format table") {
    CHECK(parse_format("graph6") == Format::Graph6);
    CHECK(parse_format("dimacs-sp") == Format::DimacsSp);
    CHECK_FALSE(parse_format("gml"));
    CHECK(describe(Format::DimacsSp).directed);
    CHECK_FALSE(describe(Format::Dot).readable);
    std::istringstream in("x");
    CHECK_THROWS_AS(read_graph(in, Format::Dot), GraphError);
}

TEST_CASE("dimacs sp") {
    std::istringstream in("c sample\np sp 3 2\na 1 2 5\na 2 3 7\n");
    EdgeList g = read_dimacs_sp(in);
    CHECK(g.kind.directed);
    CHECK(g.vertex_count == 3);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0] == EdgeRecord{0, 1, 5});
    CHECK(g.edges[1] == EdgeRecord{1, 2, 7});

    std::istringstream empty("p sp 0 0\n");
    EdgeList e = read_dimacs_sp(empty);
    CHECK(e.vertex_count == 0);
    CHECK(e.edges.empty());

    SUBCASE("errors carry positions") {
        auto err = parse_error([] { std::istringstream s("p sp 3\n"); read_dimacs_sp(s); });
        CHECK(err.line() == 1);
        err = parse_error([] { std::istringstream s("c x\np sp 3 1\na 1 4 2\n"); read_dimacs_sp(s); });
        CHECK(err.line() == 3);
        CHECK(err.column() == 5);
        err = parse_error([] { std::istringstream s("p sp 3 2\na 1 2 2\n"); read_dimacs_sp(s); });
        CHECK(err.line() == 3);
        err = parse_error([] { std::istringstream s("p sp 3 1\na 1 2 2\na 2 3 1\n"); read_dimacs_sp(s); });
        CHECK(err.line() == 3);
        err = parse_error([] { std::istringstream s("a 1 2 2\n"); read_dimacs_sp(s); });
        CHECK(err.line() == 1);
        err = parse_error([] { std::istringstream s("p sp 2 1\na 1 2 x\n"); read_dimacs_sp(s); });
        CHECK(err.column() == 7);
    }

    SUBCASE("read after write is idempotent") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            EdgeList src = oracle::random_simple(20, 0.2, seed, true, true);
            std::ostringstream a;
            write_dimacs_sp(src, a);
            std::istringstream ia(a.str());
            EdgeList once = read_dimacs_sp(ia);
            CHECK(once.edges == src.edges);
            std::ostringstream b;
            write_dimacs_sp(once, b);
            CHECK(a.str() == b.str());
        }
    }

    SUBCASE("comments are dropped on rewrite") {
        std::string body = "p sp 4 3\na 1 2 10\na 2 3 20\na 4 1 3\n";
        std::istringstream s("c road network\nc more\n" + body);
        std::ostringstream out;
        write_dimacs_sp(read_dimacs_sp(s), out);
        CHECK(out.str() == body);
    }

    SUBCASE("undirected edges become arc pairs") {
        EdgeList u = undirected(3, {{0, 1}, {2, 2}});
        std::ostringstream out;
        write_dimacs_sp(u, out);
        CHECK(out.str() == "p sp 3 3\na 1 2 1\na 2 1 1\na 3 3 1\n");
    }
}

TEST_CASE("dimacs color") {
    std::istringstream in("c k3\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    EdgeList g = read_dimacs_color(in);
    CHECK_FALSE(g.kind.directed);
    CHECK(canonical(g) == std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}});

    auto err = parse_error([] { std::istringstream s("p edge 3 2\ne 1 2\ne 2 1\n"); read_dimacs_color(s); });
    CHECK(err.line() == 3);
    std::istringstream dup("p edge 3 2\ne 1 2\ne 2 1\n");
    CHECK(read_dimacs_color(dup, false).edges.size() == 2);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EdgeList src = oracle::random_simple(15, 0.3, seed);
        std::ostringstream out;
        write_dimacs_color(src, out);
        std::istringstream back(out.str());
        EdgeList r = read_dimacs_color(back);
        CHECK(r.vertex_count == src.vertex_count);
        CHECK(canonical(r) == canonical(src));
    }

    EdgeList d = oracle::random_simple(4, 0.5, 1, true);
    std::ostringstream out;
    CHECK_THROWS_AS(write_dimacs_color(d, out), GraphError);
}

TEST_CASE("csv") {
    std::istringstream p3("0,1\n1,2\n");
    EdgeList g = read_csv(p3);
    CHECK(g.vertex_count == 3);
    CHECK_FALSE(g.kind.weighted);
    CHECK(canonical(g) == std::vector<Pair>{{0, 1}, {1, 2}});

    std::istringstream w("0,1,2.5\n");
    EdgeList gw = read_csv(w);
    CHECK(gw.kind.weighted);
    CHECK(gw.edges.at(0).weight == 2.5);

    std::istringstream sized("0,1\n", std::ios::in);
    CHECK(read_csv(sized, false, 5).vertex_count == 5);

    auto err = parse_error([] { std::istringstream s("0,1\n\n1,2,3\n"); read_csv(s); });
    CHECK(err.line() == 3);
    CHECK(err.column() == 5);
    err = parse_error([] { std::istringstream s("0,1,4\n1,2\n"); read_csv(s); });
    CHECK(err.line() == 2);
    CHECK(err.column() == 4);
    err = parse_error([] { std::istringstream s("0,a\n"); read_csv(s); });
    CHECK(err.column() == 3);
    err = parse_error([] { std::istringstream s("0,7\n"); read_csv(s, false, 3); });
    CHECK(err.column() == 3);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        bool directed = seed % 2 == 0;
        EdgeList src = oracle::random_simple(12, 0.3, seed, directed, seed % 3 != 0);
        for (auto& e : src.edges) e.weight = e.weight / 7.0;  // non-terminating decimals
        if (!src.kind.weighted)
            for (auto& e : src.edges) e.weight = kDefaultEdgeWeight;
        std::ostringstream out;
        write_csv(src, out);
        std::istringstream back(out.str());
        EdgeList r = read_csv(back, directed, src.vertex_count);
        CHECK(r.vertex_count == src.vertex_count);
        CHECK(r.edges == src.edges);
        CHECK(r.kind.weighted == src.kind.weighted);
    }
}

TEST_CASE("graph6") {
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
    CHECK(encode_graph6(undirected(1, {})) == "@");
    CHECK(encode_graph6(undirected(0, {})) == "?");
    CHECK(encode_graph6(petersen()) == "IheA@GUAo");

    std::vector<Pair> path;
    for (std::uint64_t i = 0; i + 1 < 70; ++i) path.emplace_back(i, i + 1);
    std::string p70 = encode_graph6(undirected(70, path));
    CHECK(p70.substr(0, 10) == "~?@EhCGGC@");
    CHECK(canonical(decode_graph6(p70)) == path);

    EdgeList k3 = decode_graph6(">>graph6<<Bw");
    CHECK(k3.vertex_count == 3);
    CHECK(canonical(k3) == std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}});

    auto err = parse_error([] { decode_graph6("I he"); });
    CHECK(err.column() == 2);
    err = parse_error([] { decode_graph6("IheA", 4); });
    CHECK(err.line() == 4);
    CHECK(err.column() == 5);
    err = parse_error([] { decode_graph6("Bww"); });
    CHECK(err.column() == 3);

    CHECK_THROWS_AS(encode_graph6(undirected(2, {{0, 0}})), GraphError);
    CHECK_THROWS_AS(encode_graph6(undirected(2, {{0, 1}, {1, 0}})), GraphError);
    CHECK_THROWS_AS(encode_graph6(oracle::random_simple(3, 1.0, 0, true)), GraphError);

    std::size_t ok = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::size_t n = seed % 80;
        EdgeList src = oracle::random_simple(n, (seed % 10) / 10.0, seed);
        EdgeList back = decode_graph6(encode_graph6(src));
        ok += back.vertex_count == n && canonical(back) == canonical(src);
    }
    CHECK(ok == 1000);
}

TEST_CASE("sparse6") {
    CHECK(encode_sparse6(undirected(4, {{0, 0}, {0, 1}, {0, 1}, {2, 3}})) == ":CCFV");
    CHECK(encode_sparse6(undirected(8, {{0, 1}})) == ":Gb");
    CHECK(encode_sparse6(petersen()) == ":I`ES@obGkqegW~");

    EdgeList multi = decode_sparse6(">>sparse6<<:CCFV");
    CHECK(multi.vertex_count == 4);
    CHECK(canonical(multi) == std::vector<Pair>{{0, 0}, {0, 1}, {0, 1}, {2, 3}});

    auto err = parse_error([] { decode_sparse6("CCFV"); });
    CHECK(err.column() == 1);
    err = parse_error([] { decode_sparse6(":C\x01"); });
    CHECK(err.column() == 3);
    CHECK_THROWS_AS(encode_sparse6(oracle::random_simple(3, 1.0, 0, true)), GraphError);

    tessera::Rng rng(7);
    for (std::uint64_t round = 0; round < 300; ++round) {
        std::size_t n = 1 + rng.below(70);
        std::size_t m = rng.below(3 * n);
        std::vector<Pair> edges;
        for (std::size_t i = 0; i < m; ++i) edges.emplace_back(rng.below(n), rng.below(n));
        EdgeList src = undirected(n, edges);
        EdgeList back = decode_sparse6(encode_sparse6(src));
        CHECK(back.vertex_count == n);
        CHECK(canonical(back) == canonical(src));
    }
}

TEST_CASE("dot") {
    std::ostringstream k2;
    write_dot(complete_graph(2), k2);
    CHECK(k2.str().find("0 -- 1") != std::string::npos);
    CHECK(k2.str().rfind("graph {", 0) == 0);

    EdgeList d;
    d.kind = GraphKind{true, false, false, true};
    d.vertex_count = 2;
    d.edges.push_back({0, 1, 2.5});
    std::ostringstream out;
    write_dot(d, out, [](std::size_t v) -> std::optional<std::string> {
        if (v == 0) return std::string("say \"hi\"");
        return std::nullopt;
    });
    std::string s = out.str();
    CHECK(s.rfind("digraph {", 0) == 0);
    CHECK(s.find("0 -> 1") != std::string::npos);
    CHECK(s.find("weight=2.5") != std::string::npos);
    CHECK(s.find("0 [label=\"say \\\"hi\\\"\"]") != std::string::npos);
    CHECK(s.find("1;") != std::string::npos);
}

TEST_CASE("generic dispatch") {
    EdgeList src = oracle::random_simple(9, 0.4, 3);
    for (Format f : {Format::DimacsColor, Format::Csv, Format::Graph6, Format::Sparse6}) {
        std::stringstream io;
        write_graph(src, io, f);
        EdgeList back = read_graph(io, f);
        CHECK(canonical(back) == canonical(src));
    }
}
