#pragma once

#include <functional>
#include <unordered_map>

#include "tessera/core.hpp"

namespace tessera {

// Views hold a reference to the backing graph and copy no structure, so any
// change to the backing graph is visible through them. The backing graph must
// outlive the view.
class GraphView : public Graph {
public:
    explicit GraphView(Graph& backing) : backing_(backing) {}

    GraphKind kind() const override { return backing_.kind(); }
    std::size_t vertex_count() const override { return backing_.vertex_count(); }
    std::size_t edge_count() const override { return backing_.edge_count(); }
    bool contains_vertex(VertexId v) const override { return backing_.contains_vertex(v); }
    bool contains_edge(EdgeId e) const override { return backing_.contains_edge(e); }
    std::vector<VertexId> vertices() const override { return backing_.vertices(); }
    std::vector<EdgeId> edges() const override { return backing_.edges(); }
    VertexId source(EdgeId e) const override { return backing_.source(e); }
    VertexId target(EdgeId e) const override { return backing_.target(e); }
    double weight(EdgeId e) const override { return backing_.weight(e); }
    std::vector<EdgeId> out_edges(VertexId v) const override { return backing_.out_edges(v); }
    std::vector<EdgeId> in_edges(VertexId v) const override { return backing_.in_edges(v); }
    std::vector<EdgeId> edges_of(VertexId v) const override { return backing_.edges_of(v); }
    std::size_t out_degree(VertexId v) const override { return backing_.out_degree(v); }
    std::size_t in_degree(VertexId v) const override { return backing_.in_degree(v); }
    std::size_t degree(VertexId v) const override { return backing_.degree(v); }
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const override {
        return backing_.edge_between(u, v);
    }
    std::vector<EdgeId> all_edges_between(VertexId u, VertexId v) const override {
        return backing_.all_edges_between(u, v);
    }

    AddVertexResult add_vertex(VertexId v) override { return backing_.add_vertex(v); }
    EdgeId add_edge(VertexId u, VertexId v) override { return backing_.add_edge(u, v); }
    EdgeId add_edge(VertexId u, VertexId v, double w) override { return backing_.add_edge(u, v, w); }
    bool remove_vertex(VertexId v) override { return backing_.remove_vertex(v); }
    bool remove_edge(EdgeId e) override { return backing_.remove_edge(e); }
    void set_weight(EdgeId e, double w) override { backing_.set_weight(e, w); }

    bool dense_ids() const override { return backing_.dense_ids(); }

    Graph& backing() const { return backing_; }

protected:
    Graph& backing_;
};

using VertexFilter = std::function<bool(VertexId)>;
using EdgeFilter = std::function<bool(EdgeId)>;

/// Vertices passing `vertex_filter`; an edge is present iff it passes
/// `edge_filter` and both endpoints are present. Read-only.
class SubgraphView final : public GraphView {
public:
    SubgraphView(Graph& backing, VertexFilter vertex_filter, EdgeFilter edge_filter = {});

    std::size_t vertex_count() const override;
    std::size_t edge_count() const override;
    bool contains_vertex(VertexId v) const override;
    bool contains_edge(EdgeId e) const override;
    std::vector<VertexId> vertices() const override;
    std::vector<EdgeId> edges() const override;
    VertexId source(EdgeId e) const override;
    VertexId target(EdgeId e) const override;
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
    EdgeId add_edge(VertexId u, VertexId v, double w) override;
    bool remove_vertex(VertexId v) override;
    bool remove_edge(EdgeId e) override;
    void set_weight(EdgeId e, double w) override;
    bool dense_ids() const override { return false; }

private:
    bool keeps(EdgeId e) const;
    std::vector<EdgeId> filtered(std::vector<EdgeId> edges) const;
    void require_vertex(VertexId v) const;
    void require_edge(EdgeId e) const;

    VertexFilter vertex_filter_;
    EdgeFilter edge_filter_;
};

/// Undirected reading of a directed graph. Arcs (u,v) and (v,u) stay two
/// parallel edges. Adding edges is rejected since the orientation is unknown.
class UndirectedView final : public GraphView {
public:
    explicit UndirectedView(Graph& backing);

    GraphKind kind() const override;
    std::vector<EdgeId> out_edges(VertexId v) const override { return backing_.edges_of(v); }
    std::vector<EdgeId> in_edges(VertexId v) const override { return backing_.edges_of(v); }
    std::vector<EdgeId> edges_of(VertexId v) const override { return backing_.edges_of(v); }
    std::size_t out_degree(VertexId v) const override { return degree(v); }
    std::size_t in_degree(VertexId v) const override { return degree(v); }
    std::size_t degree(VertexId v) const override { return backing_.degree(v); }
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const override;
    std::vector<EdgeId> all_edges_between(VertexId u, VertexId v) const override;

    EdgeId add_edge(VertexId u, VertexId v) override;
    EdgeId add_edge(VertexId u, VertexId v, double w) override;
};

/// Weight overlay: reads prefer the overlay and fall back to the backing
/// weight (1.0 when unweighted); writes land in the overlay.
class WeightedView final : public GraphView {
public:
    WeightedView(Graph& backing, std::unordered_map<EdgeId, double> overlay = {});

    GraphKind kind() const override;
    double weight(EdgeId e) const override;
    using GraphView::add_edge;
    EdgeId add_edge(VertexId u, VertexId v, double w) override;
    bool remove_edge(EdgeId e) override;
    void set_weight(EdgeId e, double w) override;

    const std::unordered_map<EdgeId, double>& overlay() const { return overlay_; }

private:
    std::unordered_map<EdgeId, double> overlay_;
};

class UnmodifiableView final : public GraphView {
public:
    using GraphView::GraphView;

    AddVertexResult add_vertex(VertexId v) override;
    EdgeId add_edge(VertexId u, VertexId v) override;
    EdgeId add_edge(VertexId u, VertexId v, double w) override;
    bool remove_vertex(VertexId v) override;
    bool remove_edge(EdgeId e) override;
    void set_weight(EdgeId e, double w) override;
};

GraphPtr as_subgraph(Graph& g, VertexFilter vertex_filter, EdgeFilter edge_filter = {});
GraphPtr as_undirected(Graph& g);
GraphPtr as_weighted(Graph& g, std::unordered_map<EdgeId, double> overlay = {});
GraphPtr as_unmodifiable(Graph& g);

} // namespace tessera
