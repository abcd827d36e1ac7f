#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>

#include "tessera/core.hpp"
#include "tessera/edge_list.hpp"

namespace tessera {

struct AdjacencyOptions {
    // Index edges by their endpoint pair so edge_between is O(1) expected.
    bool endpoint_index = false;
};

// Mutable, insertion-ordered backend. Vertex and edge records live in hash
// maps; global order and per-vertex incidence lists are intrusive doubly
// linked lists threaded through the records, so add/remove are expected O(1)
// and every iteration is deterministic.
class AdjacencyStore final : public Graph {
public:
    explicit AdjacencyStore(GraphKind kind, AdjacencyOptions options = {});

    GraphKind kind() const override { return kind_; }
    std::size_t vertex_count() const override { return vertices_.size(); }
    std::size_t edge_count() const override { return edges_.size(); }
    bool contains_vertex(VertexId v) const override { return vertices_.contains(v); }
    bool contains_edge(EdgeId e) const override { return edges_.contains(e); }
    std::vector<VertexId> vertices() const override;
    std::vector<EdgeId> edges() const override;

    VertexId source(EdgeId e) const override { return edge(e).source; }
    VertexId target(EdgeId e) const override { return edge(e).target; }
    double weight(EdgeId e) const override;

    std::vector<EdgeId> out_edges(VertexId v) const override;
    std::vector<EdgeId> in_edges(VertexId v) const override;
    std::vector<EdgeId> edges_of(VertexId v) const override;
    std::size_t out_degree(VertexId v) const override;
    std::size_t in_degree(VertexId v) const override;
    std::size_t degree(VertexId v) const override;

    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const override;
    std::vector<EdgeId> all_edges_between(VertexId u, VertexId v) const override;

    AddVertexResult add_vertex(VertexId v) override;
    EdgeId add_edge(VertexId u, VertexId v) override;
    EdgeId add_edge(VertexId u, VertexId v, double weight) override;
    bool remove_vertex(VertexId v) override;
    bool remove_edge(EdgeId e) override;
    void set_weight(EdgeId e, double weight) override;

    // Same checks as add_edge, but duplicate detection is one hash pass over
    // the batch instead of an incidence scan per edge.
    void add_edges(std::span<const EdgeRecord> batch);

    const AdjacencyOptions& options() const { return options_; }
    std::size_t indexed_pair_count() const { return index_.size(); }

    static constexpr std::uint64_t kNone = ~std::uint64_t{0};

    struct Links {
        std::uint64_t prev = kNone;
        std::uint64_t next = kNone;
    };
    struct ListHead {
        std::uint64_t head = kNone;
        std::uint64_t tail = kNone;
    };
    struct VertexRecord {
        Links order;
        ListHead out;  // the single incidence list when undirected
        ListHead in;
        std::uint64_t out_count = 0;
        std::uint64_t in_count = 0;
        std::uint64_t loop_count = 0;
    };
    struct EdgeRecordData {
        VertexId source;
        VertexId target;
        double weight = kDefaultEdgeWeight;
        Links order;
        Links slot[2];  // [0] threads the source's list, [1] the target's
    };

private:
    struct PairHash {
        std::size_t operator()(const std::pair<VertexId, VertexId>& p) const noexcept {
            std::uint64_t h = raw(p.first) * 0x9e3779b97f4a7c15ULL;
            h ^= raw(p.second) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    const EdgeRecordData& edge(EdgeId e) const;
    const VertexRecord& vertex(VertexId v) const;
    VertexRecord& vertex(VertexId v);
    std::pair<VertexId, VertexId> index_key(VertexId u, VertexId v) const;
    EdgeId insert_edge(VertexId u, VertexId v, double weight);
    void link(ListHead& list, EdgeId e, int side);
    void unlink(ListHead& list, EdgeId e, int side);
    int side_at(const EdgeRecordData& rec, VertexId v) const;
    template <typename F>
    void walk(const ListHead& list, VertexId owner, bool directed_in, F&& fn) const;

    GraphKind kind_;
    AdjacencyOptions options_;
    std::unordered_map<VertexId, VertexRecord> vertices_;
    std::unordered_map<EdgeId, EdgeRecordData> edges_;
    std::unordered_map<std::pair<VertexId, VertexId>, std::vector<EdgeId>, PairHash> index_;
    ListHead vertex_order_;
    ListHead edge_order_;
    std::uint64_t next_edge_ = 0;
};

} // namespace tessera
