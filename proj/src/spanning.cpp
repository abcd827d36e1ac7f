#include "tessera/spanning.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tessera/dary_heap.hpp"
#include "tessera/indexed.hpp"

namespace tessera {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::make_set() {
    parent_.push_back(parent_.size());
    rank_.push_back(0);
    ++sets_;
    return parent_.size() - 1;
}

void UnionFind::check(std::size_t x) const {
    if (x >= parent_.size())
        throw GraphError(ErrorCode::InvalidArgument, "union-find: element " + std::to_string(x) + " not registered");
}

std::size_t UnionFind::find(std::size_t x) {
    check(x);
    std::size_t root = x;
    while (parent_[root] != root)
        root = parent_[root];
    while (parent_[x] != root) {
        std::size_t next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y)
        return false;
    if (rank_[x] < rank_[y])
        std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y])
        ++rank_[x];
    --sets_;
    return true;
}

namespace {

using Key = std::pair<double, std::uint32_t>;  // weight, then edge position

std::vector<std::uint32_t> prim(const IndexedGraph& ig) {
    const std::size_t n = ig.n();
    std::vector<char> in_tree(n, 0);
    std::vector<std::uint32_t> via(n, ~std::uint32_t{0});
    std::vector<std::uint32_t> chosen;
    DaryHeap<Key> heap(n);
    for (std::uint32_t root = 0; root < n; ++root) {
        if (in_tree[root])
            continue;
        heap.push(root, {0.0, 0});
        while (!heap.empty()) {
            const std::uint32_t u = heap.pop();
            in_tree[u] = 1;
            if (u != root)
                chosen.push_back(via[u]);
            for (const Arc& a : ig.out(u)) {
                if (in_tree[a.to])
                    continue;
                const Key k{ig.weight(a.edge), a.edge};
                if (!heap.contains(a.to)) {
                    via[a.to] = a.edge;
                    heap.push(a.to, k);
                } else if (k < heap.key(a.to)) {
                    via[a.to] = a.edge;
                    heap.decrease(a.to, k);
                }
            }
        }
    }
    return chosen;
}

std::vector<std::uint32_t> kruskal(const IndexedGraph& ig) {
    std::vector<std::uint32_t> order(ig.m());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return ig.weight(a) < ig.weight(b); });
    UnionFind uf(ig.n());
    std::vector<std::uint32_t> chosen;
    for (auto j : order) {
        if (uf.set_count() <= 1)
            break;
        if (uf.unite(ig.src(j), ig.dst(j)))
            chosen.push_back(j);
    }
    return chosen;
}

std::vector<std::uint32_t> boruvka(const IndexedGraph& ig) {
    const std::size_t n = ig.n(), m = ig.m();
    UnionFind uf(n);
    std::vector<std::uint32_t> chosen;
    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::vector<std::uint32_t> cheapest(n);
    auto better = [&](std::uint32_t a, std::uint32_t b) {
        return b == kNone || Key{ig.weight(a), a} < Key{ig.weight(b), b};
    };
    while (true) {
        std::fill(cheapest.begin(), cheapest.end(), kNone);
        for (std::uint32_t j = 0; j < m; ++j) {
            const auto a = uf.find(ig.src(j)), b = uf.find(ig.dst(j));
            if (a == b)
                continue;
            if (better(j, cheapest[a]))
                cheapest[a] = j;
            if (better(j, cheapest[b]))
                cheapest[b] = j;
        }
        bool merged = false;
        for (std::size_t c = 0; c < n; ++c) {
            const auto j = cheapest[c];
            if (j != kNone && uf.unite(ig.src(j), ig.dst(j))) {
                chosen.push_back(j);
                merged = true;
            }
        }
        if (!merged)
            break;
    }
    return chosen;
}

} // namespace

SpanningForest minimum_spanning_forest(const Graph& g, MstAlgorithm algorithm) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "minimum spanning forest requires an undirected graph");
    IndexedGraph ig(g);
    std::vector<std::uint32_t> chosen;
    switch (algorithm) {
    case MstAlgorithm::Prim: chosen = prim(ig); break;
    case MstAlgorithm::Kruskal: chosen = kruskal(ig); break;
    case MstAlgorithm::Boruvka: chosen = boruvka(ig); break;
    }
    SpanningForest forest;
    for (auto j : chosen)
        forest.edges.push_back(ig.edge(j));
    // Summed in edge order so equal edge sets give bit-identical totals.
    std::sort(chosen.begin(), chosen.end());
    for (auto j : chosen)
        forest.weight += ig.weight(j);
    return forest;
}

} // namespace tessera
