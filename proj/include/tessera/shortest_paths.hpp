#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tessera/core.hpp"
#include "tessera/indexed.hpp"

namespace tessera {

struct PathResult {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    double weight = 0.0;
};

struct SsspTree {
    VertexId source{};
    VertexMap<std::optional<double>> distance;      // nullopt when unreachable
    VertexMap<std::optional<EdgeId>> predecessor;   // edge entering v on its shortest path
    VertexMap<std::optional<VertexId>> parent;

    /// Path from the source to v, or nullopt when v is unreachable.
    std::optional<PathResult> path_to(VertexId v) const;
};

// Dijkstra on a 4-ary heap. Throws NegativeWeightError on the first negative
// edge it scans.
SsspTree dijkstra(const Graph& g, VertexId source);
/// Stops as soon as `target` is settled.
std::optional<PathResult> dijkstra_path(const Graph& g, VertexId source, VertexId target);
std::optional<PathResult> bidirectional_dijkstra(const Graph& g, VertexId source, VertexId target);

/// Negative weights allowed. A negative cycle reachable from the source
/// raises NegativeCycleError carrying the cycle's edges. On undirected graphs
/// a negative edge is itself a negative cycle (it can be walked both ways).
SsspTree bellman_ford(const Graph& g, VertexId source);

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(std::shared_ptr<const VertexIndex> index, std::vector<double> data)
        : index_(std::move(index)), data_(std::move(data)) {}

    std::size_t size() const { return index_ ? index_->size() : 0; }
    VertexId vertex(std::size_t i) const { return index_->id(i); }
    std::optional<double> at(std::size_t i, std::size_t j) const;
    std::optional<double> at(VertexId u, VertexId v) const { return at(index_->at(u), index_->at(v)); }

    friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
        return a.index_->ids() == b.index_->ids() && a.data_ == b.data_;
    }

private:
    std::shared_ptr<const VertexIndex> index_;
    std::vector<double> data_;  // row-major, +inf when unreachable
};

/// Both raise NegativeCycleError when the graph has a negative cycle.
DistanceMatrix johnson_apsp(const Graph& g);
DistanceMatrix floyd_warshall(const Graph& g);

/// `heuristic(v)` estimates the remaining distance to the target. Optimal for
/// admissible heuristics (vertices are reopened when improved); with an
/// inadmissible heuristic the returned path may be suboptimal.
std::optional<PathResult> astar(const Graph& g, VertexId source, VertexId target,
                                const std::function<double(VertexId)>& heuristic);

/// Up to k loopless source-target paths in nondecreasing weight order.
std::vector<PathResult> yen_k_shortest(const Graph& g, VertexId source, VertexId target, std::size_t k);

struct GraphMeasures {
    VertexMap<std::optional<double>> eccentricity;  // nullopt = infinite
    std::optional<double> diameter;
    std::optional<double> radius;
    std::vector<VertexId> center;
    std::vector<VertexId> periphery;
};

/// Distances follow edge direction. A vertex that cannot reach every other
/// vertex has infinite eccentricity.
GraphMeasures graph_measures(const Graph& g);

} // namespace tessera
