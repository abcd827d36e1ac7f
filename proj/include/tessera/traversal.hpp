#pragma once

#include <vector>

#include "tessera/core.hpp"
#include "tessera/indexed.hpp"

namespace tessera {

// Neighbour expansion follows the graph's incidence order, so every traversal
// is deterministic. Directed graphs are traversed along out-edges.
std::vector<VertexId> bfs_order(const Graph& g, VertexId source);
std::vector<VertexId> dfs_order(const Graph& g, VertexId source);

/// Hop distance of every vertex reached by BFS from `source`.
VertexMap<std::optional<std::size_t>> bfs_layers(const Graph& g, VertexId source);

struct ComponentLabeling {
    VertexMap<std::size_t> component;  // ids dense in 0..count-1, in order of first vertex
    std::size_t count = 0;
};

/// Connected components; weakly connected components for directed graphs.
ComponentLabeling connected_components(const Graph& g);
/// Kosaraju-Sharir. Rejects undirected graphs.
ComponentLabeling strong_components(const Graph& g);

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<VertexId> cutpoints;
    std::vector<EdgeId> bridges;
};

/// Blocks, cutpoints and bridges of an undirected graph (every component).
/// A self-loop forms its own block and is never reported as a bridge.
BlockDecomposition biconnectivity(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    VertexMap<int> side;                 // 0/1 per vertex when bipartite
    std::vector<VertexId> odd_cycle;     // closed walk v0..vk (v0 repeated implicitly)
};

/// Directed graphs are read through their underlying undirected structure.
BipartiteResult is_bipartite(const Graph& g);

enum class ChordalMethod { MaximumCardinality, LexBfs };

struct ChordalityResult {
    bool chordal = false;
    std::vector<VertexId> elimination_order;  // perfect elimination order when chordal
    std::vector<VertexId> hole;               // chordless cycle of length >= 4 otherwise
};

ChordalityResult chordality(const Graph& g, ChordalMethod method);

/// Independent check: for every v, the neighbours of v that come later in
/// `order` are pairwise adjacent.
bool is_perfect_elimination_order(const Graph& g, const std::vector<VertexId>& order);

} // namespace tessera
