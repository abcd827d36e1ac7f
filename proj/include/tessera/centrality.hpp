#pragma once

#include "tessera/core.hpp"
#include "tessera/indexed.hpp"

namespace tessera {

struct ScoreMap {
    VertexMap<double> scores;
    std::size_t iterations = 0;  // iterative methods only
    bool converged = false;

    double at(VertexId v) const { return scores.at(v); }
};

/// Power iteration; undirected graphs are read as bidirected. Dangling mass is
/// spread uniformly. Stops after `max_iterations` or once the L1 change drops
/// below `tolerance`.
ScoreMap pagerank(const Graph& g, double damping = 0.85, std::size_t max_iterations = 20, double tolerance = 1e-16);

/// Brandes. Unnormalized; undirected graphs count each unordered pair once.
/// Weighted graphs run the Dijkstra stage, others BFS.
ScoreMap betweenness(const Graph& g);

/// (n - 1) / sum of distances to all other vertices; 0 when some vertex is
/// unreachable or n < 2.
ScoreMap closeness(const Graph& g);

/// Sum of 1 / d over the other vertices, unreachable ones contributing 0.
ScoreMap harmonic(const Graph& g);

/// k-core numbers of an undirected graph. Self-loops are ignored.
ScoreMap coreness(const Graph& g);

} // namespace tessera
