#pragma once

#include <utility>
#include <vector>

#include "tessera/core.hpp"
#include "tessera/indexed.hpp"

namespace tessera {

enum class LcaMethod { Naive, TarjanOffline, BinaryLifting, EulerRmq };

/// Lowest common ancestors on a rooted tree. The input's underlying
/// undirected graph must be a tree; anything else raises NotATree.
/// TarjanOffline answers each online query with a one-query sweep, so batch
/// queries through lca_batch_tarjan.
class LcaIndex {
public:
    LcaIndex(const Graph& tree, VertexId root, LcaMethod method);

    LcaMethod method() const { return method_; }
    VertexId root() const { return ig_->vertex(root_); }
    std::size_t depth(VertexId v) const { return depth_[locate(v)]; }
    VertexId query(VertexId u, VertexId v) const;

    // Jump table: row j holds the 2^j-th ancestor (root maps to itself).
    const std::vector<std::vector<std::uint32_t>>& jump_table() const { return up_; }
    // Euler tour and sparse table of tour positions with minimum depth.
    const std::vector<std::uint32_t>& euler_tour() const { return euler_; }
    const std::vector<std::vector<std::uint32_t>>& sparse_table() const { return sparse_; }
    std::uint32_t tour_depth(std::size_t i) const { return depth_[euler_[i]]; }

private:
    friend std::vector<VertexId> lca_batch_tarjan(const Graph&, VertexId,
                                                  const std::vector<std::pair<VertexId, VertexId>>&);
    std::uint32_t locate(VertexId v) const;
    std::vector<std::uint32_t> tarjan(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& queries) const;

    LcaMethod method_;
    std::shared_ptr<IndexedGraph> ig_;
    std::uint32_t root_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::vector<std::uint32_t>> children_;
    std::vector<std::vector<std::uint32_t>> up_;
    std::vector<std::uint32_t> euler_;
    std::vector<std::uint32_t> first_;
    std::vector<std::vector<std::uint32_t>> sparse_;
};

inline LcaIndex lca_preprocess(const Graph& tree, VertexId root, LcaMethod method) {
    return LcaIndex(tree, root, method);
}

inline VertexId lca_query(const LcaIndex& index, VertexId u, VertexId v) { return index.query(u, v); }

/// Offline union-find sweep over all queries at once.
std::vector<VertexId> lca_batch_tarjan(const Graph& tree, VertexId root,
                                       const std::vector<std::pair<VertexId, VertexId>>& queries);

/// Deepest common ancestors in a DAG, where depth is the longest path from a
/// source vertex. Returns every common ancestor of maximum depth, in vertex
/// order. A vertex counts as its own ancestor.
std::vector<VertexId> dag_lca(const Graph& dag, VertexId u, VertexId v);

} // namespace tessera
