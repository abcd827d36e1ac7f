#include "tessera/indexed.hpp"

#include <string>

#include "tessera/csr_store.hpp"

namespace tessera {

VertexIndex::VertexIndex(std::vector<VertexId> ids, bool dense) : ids_(std::move(ids)), dense_(dense) {
    if (!dense_) {
        pos_.reserve(ids_.size());
        for (std::size_t i = 0; i < ids_.size(); ++i)
            pos_.emplace(ids_[i], static_cast<std::uint32_t>(i));
    }
}

std::optional<std::uint32_t> VertexIndex::find(VertexId v) const {
    if (dense_) {
        if (raw(v) < ids_.size())
            return static_cast<std::uint32_t>(raw(v));
        return std::nullopt;
    }
    if (auto it = pos_.find(v); it != pos_.end())
        return it->second;
    return std::nullopt;
}

std::uint32_t VertexIndex::at(VertexId v) const {
    if (auto i = find(v))
        return *i;
    throw GraphError(ErrorCode::MissingVertex, "vertex " + std::to_string(raw(v)) + " not in graph");
}

IndexedGraph::IndexedGraph(const Graph& g) {
    const GraphKind kind = g.kind();
    directed_ = kind.directed;
    weighted_ = kind.weighted;
    const bool dense = g.dense_ids();
    index_ = std::make_shared<VertexIndex>(g.vertices(), dense);
    const std::size_t n = index_->size();

    edge_ids_ = g.edges();
    const std::size_t m = edge_ids_.size();
    dense_edges_ = dense;
    if (!dense) {
        edge_pos_.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            edge_pos_.emplace(edge_ids_[j], static_cast<std::uint32_t>(j));
    }
    src_.resize(m);
    dst_.resize(m);
    weight_.resize(m);

    if (auto* csr = dynamic_cast<const CsrStore*>(&g)) {
        auto s = csr->edge_sources();
        auto t = csr->edge_targets();
        auto w = csr->weights();
        for (std::size_t j = 0; j < m; ++j) {
            src_[j] = s[j];
            dst_[j] = t[j];
            weight_[j] = weighted_ ? w[j] : kDefaultEdgeWeight;
        }
        auto fill = [&](std::span<const std::uint32_t> ptr, std::span<const std::uint32_t> idx,
                        std::vector<std::uint32_t>& out_ptr, std::vector<Arc>& arcs, bool incoming) {
            out_ptr.assign(ptr.begin(), ptr.end());
            arcs.resize(idx.size());
            for (std::size_t v = 0; v < n; ++v) {
                for (auto k = ptr[v]; k < ptr[v + 1]; ++k) {
                    auto j = idx[k];
                    std::uint32_t to;
                    if (directed_)
                        to = incoming ? s[j] : t[j];
                    else
                        to = s[j] == v ? t[j] : s[j];
                    arcs[k] = {to, j};
                }
            }
        };
        fill(csr->out_row_ptr(), csr->out_col_idx(), out_ptr_, out_arcs_, false);
        if (directed_)
            fill(csr->in_row_ptr(), csr->in_col_idx(), in_ptr_, in_arcs_, true);
        return;
    }

    for (std::size_t j = 0; j < m; ++j) {
        EdgeId e = edge_ids_[j];
        src_[j] = index_->at(g.source(e));
        dst_[j] = index_->at(g.target(e));
        weight_[j] = g.weight(e);
    }
    auto gather = [&](bool incoming, std::vector<std::uint32_t>& ptr, std::vector<Arc>& arcs) {
        ptr.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
            VertexId id = index_->id(v);
            auto list = incoming ? g.in_edges(id) : g.out_edges(id);
            for (EdgeId e : list) {
                auto j = edge_index(e);
                std::uint32_t to;
                if (directed_)
                    to = incoming ? src_[j] : dst_[j];
                else
                    to = src_[j] == v ? dst_[j] : src_[j];
                arcs.push_back({to, j});
            }
            ptr[v + 1] = static_cast<std::uint32_t>(arcs.size());
        }
    };
    gather(false, out_ptr_, out_arcs_);
    if (directed_)
        gather(true, in_ptr_, in_arcs_);
}

std::uint32_t IndexedGraph::edge_index(EdgeId e) const {
    if (dense_edges_) {
        if (raw(e) < edge_ids_.size())
            return static_cast<std::uint32_t>(raw(e));
    } else if (auto it = edge_pos_.find(e); it != edge_pos_.end()) {
        return it->second;
    }
    throw GraphError(ErrorCode::MissingEdge, "edge " + std::to_string(raw(e)) + " not in graph");
}

std::size_t IndexedGraph::degree(std::uint32_t u) const {
    if (directed_)
        return out(u).size() + in(u).size();
    std::size_t d = 0;
    for (const Arc& a : out(u))
        d += a.to == u ? 2 : 1;
    return d;
}

} // namespace tessera
