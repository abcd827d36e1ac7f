#include "tessera/memory.hpp"

#include "tessera/adjacency_store.hpp"
#include "tessera/csr_store.hpp"

namespace tessera {

static_assert(sizeof(AdjacencyStore::VertexRecord) == MemoryCostModel::kVertexRecord);
static_assert(sizeof(AdjacencyStore::EdgeRecordData) == MemoryCostModel::kEdgeRecord);
static_assert(sizeof(VertexId) == MemoryCostModel::kVertexKey);
static_assert(sizeof(EdgeId) == MemoryCostModel::kEdgeKey);

std::size_t memory_footprint(const AdjacencyStore& g) {
    using M = MemoryCostModel;
    std::size_t bytes = M::kAdjacencyBase;
    bytes += g.vertex_count() * M::adjacency_vertex();
    bytes += g.edge_count() * M::adjacency_edge();
    if (g.options().endpoint_index)
        bytes += g.indexed_pair_count() * M::index_pair() + g.edge_count() * M::kIndexEntry;
    return bytes;
}

std::size_t memory_footprint(const CsrStore& g) {
    using M = MemoryCostModel;
    std::size_t bytes = M::kCsrBase;
    bytes += (g.out_row_ptr().size() + g.out_col_idx().size()) * M::kCsrIndex;
    bytes += (g.in_row_ptr().size() + g.in_col_idx().size()) * M::kCsrIndex;
    bytes += (g.edge_sources().size() + g.edge_targets().size()) * M::kCsrEndpoint;
    bytes += g.weights().size() * M::kWeight;
    return bytes;
}

std::size_t memory_footprint(const Graph& g) {
    if (auto* a = dynamic_cast<const AdjacencyStore*>(&g))
        return memory_footprint(*a);
    if (auto* c = dynamic_cast<const CsrStore*>(&g))
        return memory_footprint(*c);
    throw GraphError(ErrorCode::Unsupported, "memory_footprint: only backends are accounted");
}

} // namespace tessera
