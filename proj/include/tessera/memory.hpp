#pragma once

#include <cstddef>

#include "tessera/core.hpp"

namespace tessera {

class AdjacencyStore;
class CsrStore;

// Analytic storage model, 64-bit layout. Every constant below is a byte
// count; a hash-map entry costs kHashNode + key + value plus one bucket slot.
// Record sizes match AdjacencyStore's record types (checked at compile time).
struct MemoryCostModel {
    static constexpr std::size_t kAdjacencyBase = 256;
    static constexpr std::size_t kCsrBase = 128;
    static constexpr std::size_t kHashNode = 24;  // allocator header + chain pointer
    static constexpr std::size_t kBucket = 8;
    static constexpr std::size_t kVertexKey = 8;
    static constexpr std::size_t kVertexRecord = 72;
    static constexpr std::size_t kEdgeKey = 8;
    static constexpr std::size_t kEdgeRecord = 72;
    static constexpr std::size_t kIndexKey = 16;
    static constexpr std::size_t kIndexBucketVector = 24 + 16;  // vector header + heap block header
    static constexpr std::size_t kIndexEntry = 8;               // one EdgeId in the bucket vector
    static constexpr std::size_t kCsrIndex = 4;                 // uint32 row pointer / column index
    static constexpr std::size_t kCsrEndpoint = 4;              // uint32 source or target
    static constexpr std::size_t kWeight = 8;

    static constexpr std::size_t adjacency_vertex() { return kHashNode + kVertexKey + kVertexRecord + kBucket; }
    static constexpr std::size_t adjacency_edge() { return kHashNode + kEdgeKey + kEdgeRecord + kBucket; }
    static constexpr std::size_t index_pair() { return kHashNode + kIndexKey + kIndexBucketVector + kBucket; }
};

std::size_t memory_footprint(const AdjacencyStore& g);
std::size_t memory_footprint(const CsrStore& g);
/// Dispatches on the backend; views and foreign graphs are unsupported.
std::size_t memory_footprint(const Graph& g);

inline double bytes_per_edge(std::size_t bytes, std::size_t edges) {
    return edges == 0 ? static_cast<double>(bytes) : static_cast<double>(bytes) / static_cast<double>(edges);
}

} // namespace tessera
