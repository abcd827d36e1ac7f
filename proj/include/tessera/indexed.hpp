#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "tessera/core.hpp"

namespace tessera {

// Position of every vertex in a graph's iteration order.
class VertexIndex {
public:
    explicit VertexIndex(std::vector<VertexId> ids, bool dense);

    std::size_t size() const { return ids_.size(); }
    VertexId id(std::size_t i) const { return ids_[i]; }
    const std::vector<VertexId>& ids() const { return ids_; }
    std::optional<std::uint32_t> find(VertexId v) const;
    std::uint32_t at(VertexId v) const;  // throws MissingVertex

private:
    std::vector<VertexId> ids_;
    std::unordered_map<VertexId, std::uint32_t> pos_;
    bool dense_;
};

// Dense per-vertex values keyed by a VertexIndex; iteration follows the
// graph's vertex order.
template <typename T>
class VertexMap {
public:
    VertexMap() = default;
    VertexMap(std::shared_ptr<const VertexIndex> index, std::vector<T> values)
        : index_(std::move(index)), values_(std::move(values)) {}

    std::size_t size() const { return values_.size(); }
    bool contains(VertexId v) const { return index_ && index_->find(v).has_value(); }
    const T& at(VertexId v) const { return values_[index_->at(v)]; }
    T& at(VertexId v) { return values_[index_->at(v)]; }
    VertexId key(std::size_t i) const { return index_->id(i); }
    const std::vector<VertexId>& keys() const { return index_->ids(); }
    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }

private:
    std::shared_ptr<const VertexIndex> index_;
    std::vector<T> values_;
};

struct Arc {
    std::uint32_t to;
    std::uint32_t edge;
};

// Read-only dense snapshot used by the algorithms: vertices and edges are
// renumbered 0..n-1 / 0..m-1 in the graph's iteration order, and incidences
// are stored as CSR arc arrays in the graph's incidence order. Undirected
// graphs list every edge at both endpoints (a self-loop once) and alias in()
// to out().
class IndexedGraph {
public:
    explicit IndexedGraph(const Graph& g);

    bool directed() const { return directed_; }
    bool weighted() const { return weighted_; }
    std::size_t n() const { return index_->size(); }
    std::size_t m() const { return edge_ids_.size(); }

    VertexId vertex(std::size_t i) const { return index_->id(i); }
    std::uint32_t index(VertexId v) const { return index_->at(v); }
    EdgeId edge(std::size_t j) const { return edge_ids_[j]; }
    std::uint32_t edge_index(EdgeId e) const;
    std::uint32_t src(std::size_t j) const { return src_[j]; }
    std::uint32_t dst(std::size_t j) const { return dst_[j]; }
    double weight(std::size_t j) const { return weight_[j]; }
    std::uint32_t other(std::size_t j, std::uint32_t u) const { return src_[j] == u ? dst_[j] : src_[j]; }

    std::span<const Arc> out(std::uint32_t u) const {
        return {out_arcs_.data() + out_ptr_[u], out_arcs_.data() + out_ptr_[u + 1]};
    }
    std::span<const Arc> in(std::uint32_t u) const {
        if (!directed_)
            return out(u);
        return {in_arcs_.data() + in_ptr_[u], in_arcs_.data() + in_ptr_[u + 1]};
    }
    // Undirected: incident edges with loops counted twice. Directed: in + out.
    std::size_t degree(std::uint32_t u) const;

    const std::shared_ptr<const VertexIndex>& vertex_index() const { return index_; }

    template <typename T>
    VertexMap<T> make_map(std::vector<T> values) const {
        return VertexMap<T>(index_, std::move(values));
    }

private:
    bool directed_;
    bool weighted_;
    std::shared_ptr<const VertexIndex> index_;
    std::vector<EdgeId> edge_ids_;
    std::unordered_map<EdgeId, std::uint32_t> edge_pos_;
    bool dense_edges_ = false;
    std::vector<std::uint32_t> src_;
    std::vector<std::uint32_t> dst_;
    std::vector<double> weight_;
    std::vector<std::uint32_t> out_ptr_;
    std::vector<Arc> out_arcs_;
    std::vector<std::uint32_t> in_ptr_;
    std::vector<Arc> in_arcs_;
};

} // namespace tessera
