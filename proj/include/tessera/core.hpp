#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tessera {

// Vertices are keyed by caller-chosen 64-bit ids; edges get ids from the
// backend that stores them. Both are plain hashable values.
enum class VertexId : std::uint64_t {};
enum class EdgeId : std::uint64_t {};

constexpr VertexId vid(std::uint64_t v) noexcept { return VertexId{v}; }
constexpr EdgeId eid(std::uint64_t e) noexcept { return EdgeId{e}; }
constexpr std::uint64_t raw(VertexId v) noexcept { return static_cast<std::uint64_t>(v); }
constexpr std::uint64_t raw(EdgeId e) noexcept { return static_cast<std::uint64_t>(e); }

struct GraphKind {
    bool directed = false;
    bool allows_self_loops = false;
    bool allows_multiple_edges = false;
    bool weighted = false;

    friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

/// Conventional class name for a kind, e.g. "SimpleGraph" or
/// "DirectedWeightedPseudograph".
std::string kind_name(const GraphKind& kind);

enum class ErrorCode {
    MissingVertex,
    MissingEdge,
    CapabilityViolation,
    Immutable,
    Unsupported,
    InvalidArgument,
    NegativeWeight,
    NegativeCycle,
    NotATree,
    NotEulerian,
    Parse,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

class GraphError : public std::runtime_error {
public:
    GraphError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class NegativeWeightError : public GraphError {
public:
    NegativeWeightError(EdgeId edge, double weight);
    EdgeId edge() const noexcept { return edge_; }

private:
    EdgeId edge_;
};

class NegativeCycleError : public GraphError {
public:
    explicit NegativeCycleError(std::vector<EdgeId> cycle, double total);
    const std::vector<EdgeId>& cycle() const noexcept { return cycle_; }
    double total_weight() const noexcept { return total_; }

private:
    std::vector<EdgeId> cycle_;
    double total_;
};

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct AddVertexResult {
    VertexId vertex;
    bool added;
};

inline constexpr double kDefaultEdgeWeight = 1.0;

// The interface every backend and view implements. Iteration order of
// vertices(), edges() and the incidence queries is deterministic: it follows
// insertion order for the mutable backend and index order for CSR.
//
// Undirected graphs: edges_of == in_edges == out_edges, a self-loop is listed
// once but contributes 2 to degree(). Directed graphs: edges_of lists
// out-edges then in-edges (a loop once), degree() == in + out.
class Graph {
public:
    virtual ~Graph() = default;

    virtual GraphKind kind() const = 0;

    virtual std::size_t vertex_count() const = 0;
    virtual std::size_t edge_count() const = 0;
    virtual bool contains_vertex(VertexId v) const = 0;
    virtual bool contains_edge(EdgeId e) const = 0;
    virtual std::vector<VertexId> vertices() const = 0;
    virtual std::vector<EdgeId> edges() const = 0;

    virtual VertexId source(EdgeId e) const = 0;
    virtual VertexId target(EdgeId e) const = 0;
    virtual double weight(EdgeId e) const = 0;

    virtual std::vector<EdgeId> out_edges(VertexId v) const = 0;
    virtual std::vector<EdgeId> in_edges(VertexId v) const = 0;
    virtual std::vector<EdgeId> edges_of(VertexId v) const;

    virtual std::size_t out_degree(VertexId v) const;
    virtual std::size_t in_degree(VertexId v) const;
    virtual std::size_t degree(VertexId v) const;

    // First-inserted edge joining u to v (either orientation when undirected).
    virtual std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
    virtual std::vector<EdgeId> all_edges_between(VertexId u, VertexId v) const;

    virtual AddVertexResult add_vertex(VertexId v) = 0;
    virtual EdgeId add_edge(VertexId u, VertexId v) = 0;
    virtual EdgeId add_edge(VertexId u, VertexId v, double weight);
    virtual bool remove_vertex(VertexId v) = 0;
    virtual bool remove_edge(EdgeId e) = 0;
    virtual void set_weight(EdgeId e, double weight) = 0;

    // True when vertex ids are exactly 0..n-1 and edge ids 0..m-1 in
    // iteration order; lets snapshots skip the id->index map.
    virtual bool dense_ids() const { return false; }

    VertexId opposite(EdgeId e, VertexId v) const;
    bool is_directed() const { return kind().directed; }
    bool is_weighted() const { return kind().weighted; }
};

using GraphPtr = std::unique_ptr<Graph>;

struct GraphBuilderSpec {
    bool directed = false;
    bool self_loops = false;
    bool multi_edges = false;
    bool weighted = false;
};

/// Mutable graph backed by the adjacency store whose kind equals the spec.
GraphPtr build_graph(const GraphBuilderSpec& spec);

/// Fluent front-end for GraphBuilderSpec.
class GraphBuilder {
public:
    static GraphBuilder directed() { return GraphBuilder(true); }
    static GraphBuilder undirected() { return GraphBuilder(false); }

    GraphBuilder& allowing_self_loops(bool on) { spec_.self_loops = on; return *this; }
    GraphBuilder& allowing_multiple_edges(bool on) { spec_.multi_edges = on; return *this; }
    GraphBuilder& weighted(bool on) { spec_.weighted = on; return *this; }
    const GraphBuilderSpec& spec() const { return spec_; }
    GraphPtr build() const { return build_graph(spec_); }

private:
    explicit GraphBuilder(bool directed) { spec_.directed = directed; }
    GraphBuilderSpec spec_;
};

// Maps arbitrary hashable payloads onto vertex ids of a backing graph, with
// set semantics over payloads.
template <typename T, typename Hash = std::hash<T>>
class LabeledGraph {
public:
    explicit LabeledGraph(Graph& graph) : graph_(graph) {}

    AddVertexResult add_vertex(const T& payload) {
        if (auto it = ids_.find(payload); it != ids_.end())
            return {it->second, false};
        VertexId v = vid(next_++);
        while (graph_.contains_vertex(v))
            v = vid(next_++);
        graph_.add_vertex(v);
        ids_.emplace(payload, v);
        payloads_.emplace(v, payload);
        return {v, true};
    }

    std::optional<VertexId> find(const T& payload) const {
        if (auto it = ids_.find(payload); it != ids_.end())
            return it->second;
        return std::nullopt;
    }

    const T& payload(VertexId v) const { return payloads_.at(v); }

    EdgeId add_edge(const T& u, const T& v) {
        return graph_.add_edge(require(u), require(v));
    }

    Graph& graph() { return graph_; }
    const Graph& graph() const { return graph_; }

private:
    VertexId require(const T& payload) const {
        auto v = find(payload);
        if (!v)
            throw GraphError(ErrorCode::MissingVertex, "no vertex carries the given payload");
        return *v;
    }

    Graph& graph_;
    std::unordered_map<T, VertexId, Hash> ids_;
    std::unordered_map<VertexId, T> payloads_;
    std::uint64_t next_ = 0;
};

} // namespace tessera
