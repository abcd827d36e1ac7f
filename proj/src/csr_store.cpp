#include "tessera/csr_store.hpp"

#include <limits>
#include <string>

#include "tessera/adjacency_store.hpp"

namespace tessera {

namespace {

// Counting sort of incidences into rows. `pick` yields the row(s) for edge j.
template <typename Pick>
void build_rows(std::size_t n, std::size_t m, Pick pick, std::vector<std::uint32_t>& ptr,
                std::vector<std::uint32_t>& idx) {
    ptr.assign(n + 1, 0);
    for (std::size_t j = 0; j < m; ++j)
        pick(j, [&](std::uint32_t row) { ++ptr[row + 1]; });
    for (std::size_t v = 0; v < n; ++v)
        ptr[v + 1] += ptr[v];
    idx.resize(ptr[n]);
    std::vector<std::uint32_t> fill(ptr.begin(), ptr.end() - 1);
    for (std::size_t j = 0; j < m; ++j)
        pick(j, [&](std::uint32_t row) { idx[fill[row]++] = static_cast<std::uint32_t>(j); });
}

} // namespace

CsrStore::CsrStore(std::size_t vertex_count, std::span<const EdgeRecord> edges, bool directed,
                   bool weighted)
    : n_(vertex_count), directed_(directed), weighted_(weighted) {
    if (vertex_count >= std::numeric_limits<std::uint32_t>::max() ||
        edges.size() >= std::numeric_limits<std::uint32_t>::max())
        throw GraphError(ErrorCode::InvalidArgument, "CSR backend is limited to 32-bit ids");
    const std::size_t m = edges.size();
    sources_.resize(m);
    targets_.resize(m);
    if (weighted)
        weights_.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& rec = edges[j];
        if (rec.source >= n_ || rec.target >= n_)
            throw GraphError(ErrorCode::MissingVertex,
                             "edge " + std::to_string(j) + " has an endpoint outside 0.." +
                                 std::to_string(n_ == 0 ? 0 : n_ - 1));
        sources_[j] = static_cast<std::uint32_t>(rec.source);
        targets_[j] = static_cast<std::uint32_t>(rec.target);
        if (weighted)
            weights_[j] = rec.weight;
    }
    if (directed) {
        build_rows(n_, m, [&](std::size_t j, auto emit) { emit(sources_[j]); }, out_ptr_, out_idx_);
        build_rows(n_, m, [&](std::size_t j, auto emit) { emit(targets_[j]); }, in_ptr_, in_idx_);
    } else {
        build_rows(
            n_, m,
            [&](std::size_t j, auto emit) {
                emit(sources_[j]);
                if (targets_[j] != sources_[j])
                    emit(targets_[j]);
            },
            out_ptr_, out_idx_);
    }
}

std::uint32_t CsrStore::check_vertex(VertexId v) const {
    if (raw(v) >= n_)
        throw GraphError(ErrorCode::MissingVertex, "vertex " + std::to_string(raw(v)) + " not in graph");
    return static_cast<std::uint32_t>(raw(v));
}

std::uint32_t CsrStore::check_edge(EdgeId e) const {
    if (raw(e) >= sources_.size())
        throw GraphError(ErrorCode::MissingEdge, "edge " + std::to_string(raw(e)) + " not in graph");
    return static_cast<std::uint32_t>(raw(e));
}

void CsrStore::immutable(const char* op) {
    throw GraphError(ErrorCode::Immutable, std::string(op) + ": CSR backend is immutable");
}

std::vector<VertexId> CsrStore::vertices() const {
    std::vector<VertexId> result(n_);
    for (std::size_t v = 0; v < n_; ++v)
        result[v] = vid(v);
    return result;
}

std::vector<EdgeId> CsrStore::edges() const {
    std::vector<EdgeId> result(sources_.size());
    for (std::size_t j = 0; j < result.size(); ++j)
        result[j] = eid(j);
    return result;
}

VertexId CsrStore::source(EdgeId e) const { return vid(sources_[check_edge(e)]); }
VertexId CsrStore::target(EdgeId e) const { return vid(targets_[check_edge(e)]); }

double CsrStore::weight(EdgeId e) const {
    auto j = check_edge(e);
    return weighted_ ? weights_[j] : kDefaultEdgeWeight;
}

std::vector<EdgeId> CsrStore::out_edges(VertexId v) const {
    auto u = check_vertex(v);
    std::vector<EdgeId> result;
    result.reserve(out_ptr_[u + 1] - out_ptr_[u]);
    for (auto k = out_ptr_[u]; k < out_ptr_[u + 1]; ++k)
        result.push_back(eid(out_idx_[k]));
    return result;
}

std::vector<EdgeId> CsrStore::in_edges(VertexId v) const {
    if (!directed_)
        return out_edges(v);
    auto u = check_vertex(v);
    std::vector<EdgeId> result;
    result.reserve(in_ptr_[u + 1] - in_ptr_[u]);
    for (auto k = in_ptr_[u]; k < in_ptr_[u + 1]; ++k)
        result.push_back(eid(in_idx_[k]));
    return result;
}

std::size_t CsrStore::out_degree(VertexId v) const {
    if (!directed_)
        return degree(v);
    auto u = check_vertex(v);
    return out_ptr_[u + 1] - out_ptr_[u];
}

std::size_t CsrStore::in_degree(VertexId v) const {
    if (!directed_)
        return degree(v);
    auto u = check_vertex(v);
    return in_ptr_[u + 1] - in_ptr_[u];
}

std::size_t CsrStore::degree(VertexId v) const {
    auto u = check_vertex(v);
    if (directed_)
        return (out_ptr_[u + 1] - out_ptr_[u]) + (in_ptr_[u + 1] - in_ptr_[u]);
    std::size_t d = 0;
    for (auto k = out_ptr_[u]; k < out_ptr_[u + 1]; ++k) {
        auto j = out_idx_[k];
        d += sources_[j] == targets_[j] ? 2 : 1;
    }
    return d;
}

std::optional<EdgeId> CsrStore::edge_between(VertexId a, VertexId b) const {
    auto u = check_vertex(a);
    auto v = check_vertex(b);
    if (directed_) {
        // Rows hold edge ids in increasing order, so the first hit is the
        // earliest edge whichever row is scanned.
        if (out_ptr_[u + 1] - out_ptr_[u] <= in_ptr_[v + 1] - in_ptr_[v]) {
            for (auto k = out_ptr_[u]; k < out_ptr_[u + 1]; ++k)
                if (targets_[out_idx_[k]] == v)
                    return eid(out_idx_[k]);
        } else {
            for (auto k = in_ptr_[v]; k < in_ptr_[v + 1]; ++k)
                if (sources_[in_idx_[k]] == u)
                    return eid(in_idx_[k]);
        }
        return std::nullopt;
    }
    if (out_ptr_[v + 1] - out_ptr_[v] < out_ptr_[u + 1] - out_ptr_[u])
        std::swap(u, v);
    for (auto k = out_ptr_[u]; k < out_ptr_[u + 1]; ++k) {
        auto j = out_idx_[k];
        auto other = sources_[j] == u ? targets_[j] : sources_[j];
        if (other == v)
            return eid(j);
    }
    return std::nullopt;
}

AddVertexResult CsrStore::add_vertex(VertexId) { immutable("add_vertex"); }
EdgeId CsrStore::add_edge(VertexId, VertexId) { immutable("add_edge"); }
EdgeId CsrStore::add_edge(VertexId, VertexId, double) { immutable("add_edge"); }
bool CsrStore::remove_vertex(VertexId) { immutable("remove_vertex"); }
bool CsrStore::remove_edge(EdgeId) { immutable("remove_edge"); }

void CsrStore::set_weight(EdgeId e, double w) {
    auto j = check_edge(e);
    if (!weighted_)
        throw GraphError(ErrorCode::CapabilityViolation, "set_weight on unweighted CSR graph");
    weights_[j] = w;
}

std::unique_ptr<CsrStore> csr_from_edge_list(std::size_t n, std::span<const EdgeRecord> edges,
                                             const GraphKind& kind) {
    if (!kind.allows_self_loops || !kind.allows_multiple_edges)
        throw GraphError(ErrorCode::InvalidArgument,
                         "CSR graphs always permit self-loops and multiple edges");
    return std::make_unique<CsrStore>(n, edges, kind.directed, kind.weighted);
}

// ---- edge list conversions -------------------------------------------------

EdgeList to_edge_list(const Graph& g) {
    EdgeList list;
    list.kind = g.kind();
    list.vertex_count = g.vertex_count();
    auto vs = g.vertices();
    std::unordered_map<VertexId, std::uint64_t> index;
    if (!g.dense_ids()) {
        index.reserve(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i)
            index.emplace(vs[i], i);
    }
    auto at = [&](VertexId v) { return g.dense_ids() ? raw(v) : index.at(v); };
    auto es = g.edges();
    list.edges.reserve(es.size());
    for (EdgeId e : es)
        list.edges.push_back({at(g.source(e)), at(g.target(e)), g.weight(e)});
    return list;
}

GraphPtr to_adjacency(const EdgeList& list) { return to_adjacency(list, AdjacencyOptions{}); }

GraphPtr to_adjacency(const EdgeList& list, const AdjacencyOptions& options) {
    auto g = std::make_unique<AdjacencyStore>(list.kind, options);
    for (std::size_t v = 0; v < list.vertex_count; ++v)
        g->add_vertex(vid(v));
    if (list.kind.weighted) {
        g->add_edges(list.edges);
    } else {
        std::vector<EdgeRecord> plain;
        plain.reserve(list.edges.size());
        for (const auto& rec : list.edges)
            plain.push_back({rec.source, rec.target, kDefaultEdgeWeight});
        g->add_edges(plain);
    }
    return g;
}

std::unique_ptr<CsrStore> to_csr(const EdgeList& list) {
    return std::make_unique<CsrStore>(list.vertex_count, list.edges, list.kind.directed,
                                      list.kind.weighted);
}

GraphPtr materialize(const Graph& g) {
    auto copy = std::make_unique<AdjacencyStore>(g.kind());
    for (VertexId v : g.vertices())
        copy->add_vertex(v);
    for (EdgeId e : g.edges())
        copy->add_edge(g.source(e), g.target(e),
                       g.is_weighted() ? g.weight(e) : kDefaultEdgeWeight);
    return copy;
}

} // namespace tessera
