#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tessera/core.hpp"

namespace tessera {

struct EdgeRecord {
    std::uint64_t source = 0;
    std::uint64_t target = 0;
    double weight = kDefaultEdgeWeight;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// Flat interchange form shared by generators, readers and the CSR builder.
// Vertices are 0..vertex_count-1.
struct EdgeList {
    GraphKind kind;
    std::size_t vertex_count = 0;
    std::vector<EdgeRecord> edges;

    friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

class CsrStore;
struct AdjacencyOptions;

/// Relabels vertices to 0..n-1 in iteration order; edges keep iteration order.
EdgeList to_edge_list(const Graph& g);

GraphPtr to_adjacency(const EdgeList& list);
GraphPtr to_adjacency(const EdgeList& list, const AdjacencyOptions& options);
std::unique_ptr<CsrStore> to_csr(const EdgeList& list);

/// Deep copy of any graph (view or backend) into a fresh adjacency store with
/// the same kind, vertex ids and edge order.
GraphPtr materialize(const Graph& g);

} // namespace tessera
