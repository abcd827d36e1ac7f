#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tessera/core.hpp"
#include "tessera/edge_list.hpp"

namespace tessera {

// Immutable integer backend. The vertex/edge incidence matrix is kept in CSR
// form: row v of `row_ptr`/`col_idx` lists the ids of edges incident to v in
// input order. Directed graphs keep one CSR pair per direction. Vertices are
// 0..n-1 and edges 0..m-1 (edge j is input position j). Only weights may be
// written after construction.
class CsrStore final : public Graph {
public:
    CsrStore(std::size_t vertex_count, std::span<const EdgeRecord> edges, bool directed,
             bool weighted);

    GraphKind kind() const override { return {directed_, true, true, weighted_}; }
    std::size_t vertex_count() const override { return n_; }
    std::size_t edge_count() const override { return sources_.size(); }
    bool contains_vertex(VertexId v) const override { return raw(v) < n_; }
    bool contains_edge(EdgeId e) const override { return raw(e) < sources_.size(); }
    std::vector<VertexId> vertices() const override;
    std::vector<EdgeId> edges() const override;

    VertexId source(EdgeId e) const override;
    VertexId target(EdgeId e) const override;
    double weight(EdgeId e) const override;

    std::vector<EdgeId> out_edges(VertexId v) const override;
    std::vector<EdgeId> in_edges(VertexId v) const override;
    std::size_t out_degree(VertexId v) const override;
    std::size_t in_degree(VertexId v) const override;
    std::size_t degree(VertexId v) const override;
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const override;

    AddVertexResult add_vertex(VertexId v) override;
    EdgeId add_edge(VertexId u, VertexId v) override;
    EdgeId add_edge(VertexId u, VertexId v, double weight) override;
    bool remove_vertex(VertexId v) override;
    bool remove_edge(EdgeId e) override;
    void set_weight(EdgeId e, double weight) override;

    bool dense_ids() const override { return true; }

    // Raw arrays; for undirected graphs the "in" pair is empty.
    std::span<const std::uint32_t> out_row_ptr() const { return out_ptr_; }
    std::span<const std::uint32_t> out_col_idx() const { return out_idx_; }
    std::span<const std::uint32_t> in_row_ptr() const { return in_ptr_; }
    std::span<const std::uint32_t> in_col_idx() const { return in_idx_; }
    std::span<const std::uint32_t> edge_sources() const { return sources_; }
    std::span<const std::uint32_t> edge_targets() const { return targets_; }
    std::span<const double> weights() const { return weights_; }

private:
    std::uint32_t check_vertex(VertexId v) const;
    std::uint32_t check_edge(EdgeId e) const;
    [[noreturn]] static void immutable(const char* op);

    std::size_t n_;
    bool directed_;
    bool weighted_;
    std::vector<std::uint32_t> out_ptr_;
    std::vector<std::uint32_t> out_idx_;
    std::vector<std::uint32_t> in_ptr_;
    std::vector<std::uint32_t> in_idx_;
    std::vector<std::uint32_t> sources_;
    std::vector<std::uint32_t> targets_;
    std::vector<double> weights_;
};

/// Bulk constructor. `kind` must permit self-loops and multiple edges; every
/// endpoint must lie in 0..n-1.
std::unique_ptr<CsrStore> csr_from_edge_list(std::size_t n, std::span<const EdgeRecord> edges,
                                             const GraphKind& kind);

} // namespace tessera
