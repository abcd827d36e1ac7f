#pragma once

#include <optional>
#include <vector>

#include "tessera/core.hpp"
#include "tessera/indexed.hpp"

namespace tessera {

struct MatchingResult {
    std::vector<EdgeId> edges;
    std::size_t cardinality = 0;
    double weight = 0.0;
    VertexMap<std::optional<VertexId>> mate;
};

/// Maximum cardinality matching in a general undirected graph by blossom
/// shrinking. Self-loops are ignored.
MatchingResult edmonds_max_cardinality(const Graph& g);

/// Maximum cardinality matching of a bipartite graph. When `left` is omitted
/// the bipartition is computed and an odd cycle is reported as an error; a
/// supplied side with an edge inside either part is rejected.
MatchingResult hopcroft_karp(const Graph& g, const std::optional<std::vector<VertexId>>& left = std::nullopt);

struct Assignment {
    std::vector<std::size_t> column_of_row;
    double cost = 0.0;
};

/// Minimum-cost perfect assignment of a square cost matrix.
Assignment hungarian(const std::vector<std::vector<double>>& cost);

/// Minimum-weight perfect matching between `left` and `right` of a complete
/// bipartite graph (edge weights are costs; parallel edges use the cheapest).
MatchingResult hungarian_min_weight_perfect(const Graph& g, const std::vector<VertexId>& left,
                                            const std::vector<VertexId>& right);

enum class ApproxMatching { Greedy, PathGrowing };

/// Maximal matching of weight at least half the maximum. Path growing keeps
/// the heavier of its two alternating matchings and then fills it greedily.
MatchingResult approx_matching(const Graph& g, ApproxMatching method);

} // namespace tessera
