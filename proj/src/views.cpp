#include "tessera/views.hpp"

#include <algorithm>

namespace tessera {

namespace {

[[noreturn]] void read_only(const char* view, const char* op) {
    throw GraphError(ErrorCode::Unsupported, std::string(op) + " is not supported by " + view);
}

[[noreturn]] void unmodifiable(const char* op) {
    throw GraphError(ErrorCode::Immutable, std::string(op) + " on an unmodifiable view");
}

} // namespace

// ---- SubgraphView ------------------------------------------------------------

SubgraphView::SubgraphView(Graph& backing, VertexFilter vertex_filter, EdgeFilter edge_filter)
    : GraphView(backing), vertex_filter_(std::move(vertex_filter)),
      edge_filter_(std::move(edge_filter)) {}

bool SubgraphView::contains_vertex(VertexId v) const {
    return backing_.contains_vertex(v) && (!vertex_filter_ || vertex_filter_(v));
}

bool SubgraphView::keeps(EdgeId e) const {
    if (edge_filter_ && !edge_filter_(e))
        return false;
    if (!vertex_filter_)
        return true;
    return vertex_filter_(backing_.source(e)) && vertex_filter_(backing_.target(e));
}

bool SubgraphView::contains_edge(EdgeId e) const {
    return backing_.contains_edge(e) && keeps(e);
}

void SubgraphView::require_vertex(VertexId v) const {
    if (!contains_vertex(v))
        throw GraphError(ErrorCode::MissingVertex, "vertex " + std::to_string(raw(v)) + " not in subgraph");
}

void SubgraphView::require_edge(EdgeId e) const {
    if (!contains_edge(e))
        throw GraphError(ErrorCode::MissingEdge, "edge " + std::to_string(raw(e)) + " not in subgraph");
}

std::vector<EdgeId> SubgraphView::filtered(std::vector<EdgeId> edges) const {
    std::erase_if(edges, [&](EdgeId e) { return !keeps(e); });
    return edges;
}

std::size_t SubgraphView::vertex_count() const { return vertices().size(); }
std::size_t SubgraphView::edge_count() const { return edges().size(); }

std::vector<VertexId> SubgraphView::vertices() const {
    auto vs = backing_.vertices();
    if (vertex_filter_)
        std::erase_if(vs, [&](VertexId v) { return !vertex_filter_(v); });
    return vs;
}

std::vector<EdgeId> SubgraphView::edges() const { return filtered(backing_.edges()); }

VertexId SubgraphView::source(EdgeId e) const {
    require_edge(e);
    return backing_.source(e);
}

VertexId SubgraphView::target(EdgeId e) const {
    require_edge(e);
    return backing_.target(e);
}

double SubgraphView::weight(EdgeId e) const {
    require_edge(e);
    return backing_.weight(e);
}

std::vector<EdgeId> SubgraphView::out_edges(VertexId v) const {
    require_vertex(v);
    return filtered(backing_.out_edges(v));
}

std::vector<EdgeId> SubgraphView::in_edges(VertexId v) const {
    require_vertex(v);
    return filtered(backing_.in_edges(v));
}

std::vector<EdgeId> SubgraphView::edges_of(VertexId v) const {
    require_vertex(v);
    return filtered(backing_.edges_of(v));
}

std::size_t SubgraphView::out_degree(VertexId v) const { return Graph::out_degree(v); }
std::size_t SubgraphView::in_degree(VertexId v) const { return Graph::in_degree(v); }
std::size_t SubgraphView::degree(VertexId v) const { return Graph::degree(v); }

std::optional<EdgeId> SubgraphView::edge_between(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    return Graph::edge_between(u, v);
}

std::vector<EdgeId> SubgraphView::all_edges_between(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    return Graph::all_edges_between(u, v);
}

AddVertexResult SubgraphView::add_vertex(VertexId) { read_only("subgraph view", "add_vertex"); }
EdgeId SubgraphView::add_edge(VertexId, VertexId) { read_only("subgraph view", "add_edge"); }
EdgeId SubgraphView::add_edge(VertexId, VertexId, double) { read_only("subgraph view", "add_edge"); }
bool SubgraphView::remove_vertex(VertexId) { read_only("subgraph view", "remove_vertex"); }
bool SubgraphView::remove_edge(EdgeId) { read_only("subgraph view", "remove_edge"); }
void SubgraphView::set_weight(EdgeId, double) { read_only("subgraph view", "set_weight"); }

// ---- UndirectedView ----------------------------------------------------------

UndirectedView::UndirectedView(Graph& backing) : GraphView(backing) {
    if (!backing.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "as_undirected requires a directed graph");
}

GraphKind UndirectedView::kind() const {
    GraphKind k = backing_.kind();
    k.directed = false;
    k.allows_multiple_edges = true;
    return k;
}

std::optional<EdgeId> UndirectedView::edge_between(VertexId u, VertexId v) const {
    auto forward = backing_.edge_between(u, v);
    auto backward = backing_.edge_between(v, u);
    // Both backends hand out increasing edge ids, so the smaller id is the
    // earlier insertion.
    if (forward && backward)
        return raw(*forward) <= raw(*backward) ? forward : backward;
    return forward ? forward : backward;
}

std::vector<EdgeId> UndirectedView::all_edges_between(VertexId u, VertexId v) const {
    std::vector<EdgeId> result;
    for (EdgeId e : backing_.edges_of(u))
        if (backing_.opposite(e, u) == v)
            result.push_back(e);
    return result;
}

EdgeId UndirectedView::add_edge(VertexId, VertexId) {
    throw GraphError(ErrorCode::Unsupported,
                     "add_edge through an undirected view cannot choose an orientation");
}

EdgeId UndirectedView::add_edge(VertexId u, VertexId v, double) { return add_edge(u, v); }

// ---- WeightedView ------------------------------------------------------------

WeightedView::WeightedView(Graph& backing, std::unordered_map<EdgeId, double> overlay)
    : GraphView(backing), overlay_(std::move(overlay)) {}

GraphKind WeightedView::kind() const {
    GraphKind k = backing_.kind();
    k.weighted = true;
    return k;
}

double WeightedView::weight(EdgeId e) const {
    if (auto it = overlay_.find(e); it != overlay_.end())
        return it->second;
    return backing_.weight(e);
}

EdgeId WeightedView::add_edge(VertexId u, VertexId v, double w) {
    EdgeId e = backing_.add_edge(u, v);
    overlay_[e] = w;
    return e;
}

bool WeightedView::remove_edge(EdgeId e) {
    overlay_.erase(e);
    return backing_.remove_edge(e);
}

void WeightedView::set_weight(EdgeId e, double w) {
    if (!backing_.contains_edge(e))
        throw GraphError(ErrorCode::MissingEdge, "edge " + std::to_string(raw(e)) + " not in graph");
    overlay_[e] = w;
}

// ---- UnmodifiableView ----------------------------------------------------------

AddVertexResult UnmodifiableView::add_vertex(VertexId) { unmodifiable("add_vertex"); }
EdgeId UnmodifiableView::add_edge(VertexId, VertexId) { unmodifiable("add_edge"); }
EdgeId UnmodifiableView::add_edge(VertexId, VertexId, double) { unmodifiable("add_edge"); }
bool UnmodifiableView::remove_vertex(VertexId) { unmodifiable("remove_vertex"); }
bool UnmodifiableView::remove_edge(EdgeId) { unmodifiable("remove_edge"); }
void UnmodifiableView::set_weight(EdgeId, double) { unmodifiable("set_weight"); }

GraphPtr as_subgraph(Graph& g, VertexFilter vertex_filter, EdgeFilter edge_filter) {
    return std::make_unique<SubgraphView>(g, std::move(vertex_filter), std::move(edge_filter));
}

GraphPtr as_undirected(Graph& g) { return std::make_unique<UndirectedView>(g); }

GraphPtr as_weighted(Graph& g, std::unordered_map<EdgeId, double> overlay) {
    return std::make_unique<WeightedView>(g, std::move(overlay));
}

GraphPtr as_unmodifiable(Graph& g) { return std::make_unique<UnmodifiableView>(g); }

} // namespace tessera
