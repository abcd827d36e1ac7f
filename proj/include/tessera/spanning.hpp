#pragma once

#include <unordered_map>
#include <vector>

#include "tessera/core.hpp"

namespace tessera {

struct SpanningForest {
    std::vector<EdgeId> edges;
    double weight = 0.0;
};

enum class MstAlgorithm { Prim, Kruskal, Boruvka };

/// Minimum spanning forest of an undirected graph (one tree per component).
/// Equal weights are ordered by edge iteration order. Rejects directed input.
SpanningForest minimum_spanning_forest(const Graph& g, MstAlgorithm algorithm);

// Union by rank with path compression over dense elements 0..n-1.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0);

    std::size_t make_set();
    std::size_t size() const { return parent_.size(); }
    std::size_t set_count() const { return sets_; }
    std::size_t find(std::size_t x);
    /// False when x and y were already together.
    bool unite(std::size_t x, std::size_t y);
    bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

private:
    void check(std::size_t x) const;

    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
    std::size_t sets_ = 0;
};

} // namespace tessera
