#include "tessera/core.hpp"

#include <algorithm>
#include <sstream>

#include "tessera/adjacency_store.hpp"

namespace tessera {

std::string kind_name(const GraphKind& k) {
    std::string shape;
    if (!k.allows_self_loops && !k.allows_multiple_edges)
        shape = "Simple";
    else if (!k.allows_self_loops)
        shape = "Multigraph";
    else if (k.allows_multiple_edges)
        shape = "Pseudograph";
    else
        shape = "Default";

    if (shape == "Simple") {
        std::string name = "Simple";
        if (k.directed)
            name += "Directed";
        if (k.weighted)
            name += "Weighted";
        return name + "Graph";
    }
    if (shape == "Default") {
        std::string name = k.directed ? "DefaultDirected" : "DefaultUndirected";
        if (k.weighted)
            name += "Weighted";
        return name + "Graph";
    }
    std::string name;
    if (k.directed)
        name += "Directed";
    if (k.weighted)
        name += "Weighted";
    if (name.empty())
        return shape;
    return name + shape;
}

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::MissingVertex: return "missing vertex";
    case ErrorCode::MissingEdge: return "missing edge";
    case ErrorCode::CapabilityViolation: return "capability violation";
    case ErrorCode::Immutable: return "immutable graph";
    case ErrorCode::Unsupported: return "unsupported operation";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::NegativeWeight: return "negative weight";
    case ErrorCode::NegativeCycle: return "negative cycle";
    case ErrorCode::NotATree: return "not a tree";
    case ErrorCode::NotEulerian: return "not eulerian";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
    }
    return "unknown";
}

namespace {

std::string negative_weight_message(EdgeId e, double w) {
    std::ostringstream out;
    out << "edge " << raw(e) << " has negative weight " << w;
    return out.str();
}

std::string negative_cycle_message(const std::vector<EdgeId>& cycle, double total) {
    std::ostringstream out;
    out << "negative cycle of " << cycle.size() << " edges with total weight " << total;
    return out.str();
}

std::string parse_message(std::size_t line, std::size_t column, const std::string& message) {
    std::ostringstream out;
    out << "line " << line << ", column " << column << ": " << message;
    return out.str();
}

} // namespace

NegativeWeightError::NegativeWeightError(EdgeId edge, double weight)
    : GraphError(ErrorCode::NegativeWeight, negative_weight_message(edge, weight)), edge_(edge) {}

NegativeCycleError::NegativeCycleError(std::vector<EdgeId> cycle, double total)
    : GraphError(ErrorCode::NegativeCycle, negative_cycle_message(cycle, total)),
      cycle_(std::move(cycle)), total_(total) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : GraphError(ErrorCode::Parse, parse_message(line, column, message)), line_(line),
      column_(column) {}

std::vector<EdgeId> Graph::edges_of(VertexId v) const {
    if (!is_directed())
        return out_edges(v);
    std::vector<EdgeId> result = out_edges(v);
    for (EdgeId e : in_edges(v))
        if (source(e) != target(e))
            result.push_back(e);
    return result;
}

std::size_t Graph::out_degree(VertexId v) const {
    if (!is_directed())
        return degree(v);
    return out_edges(v).size();
}

std::size_t Graph::in_degree(VertexId v) const {
    if (!is_directed())
        return degree(v);
    return in_edges(v).size();
}

std::size_t Graph::degree(VertexId v) const {
    if (is_directed())
        return out_edges(v).size() + in_edges(v).size();
    std::size_t d = 0;
    for (EdgeId e : out_edges(v))
        d += source(e) == target(e) ? 2 : 1;
    return d;
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    if (!contains_vertex(u) || !contains_vertex(v))
        throw GraphError(ErrorCode::MissingVertex, "edge_between: endpoint not in graph");
    for (EdgeId e : out_edges(u)) {
        if (is_directed() ? target(e) == v : opposite(e, u) == v)
            return e;
    }
    return std::nullopt;
}

std::vector<EdgeId> Graph::all_edges_between(VertexId u, VertexId v) const {
    if (!contains_vertex(u) || !contains_vertex(v))
        throw GraphError(ErrorCode::MissingVertex, "all_edges_between: endpoint not in graph");
    std::vector<EdgeId> result;
    for (EdgeId e : out_edges(u)) {
        if (is_directed() ? target(e) == v : opposite(e, u) == v)
            result.push_back(e);
    }
    return result;
}

EdgeId Graph::add_edge(VertexId u, VertexId v, double w) {
    if (!is_weighted() && w != kDefaultEdgeWeight)
        throw GraphError(ErrorCode::CapabilityViolation, "weight supplied for an unweighted graph");
    EdgeId e = add_edge(u, v);
    if (is_weighted())
        set_weight(e, w);
    return e;
}

VertexId Graph::opposite(EdgeId e, VertexId v) const {
    VertexId s = source(e);
    VertexId t = target(e);
    if (v == s)
        return t;
    if (v == t)
        return s;
    throw GraphError(ErrorCode::InvalidArgument, "vertex is not an endpoint of the edge");
}

GraphPtr build_graph(const GraphBuilderSpec& spec) {
    GraphKind kind{spec.directed, spec.self_loops, spec.multi_edges, spec.weighted};
    return std::make_unique<AdjacencyStore>(kind);
}

} // namespace tessera
