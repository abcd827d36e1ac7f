#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "tessera/core.hpp"
#include "tessera/indexed.hpp"

namespace tessera {

// ---- cliques ----

enum class CliqueVariant { Pivot, DegeneracyOrdering };

/// Bron-Kerbosch with the Tomita pivot (most neighbours in P, first in P then X
/// wins ties); the degeneracy variant runs it once per vertex of a
/// degeneracy ordering. Each clique is reported once, members in vertex
/// order. `visit` returns false to stop early.
void for_each_maximal_clique(const Graph& g, CliqueVariant variant,
                             const std::function<bool(const std::vector<VertexId>&)>& visit);
std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g, CliqueVariant variant);

// ---- colouring ----

enum class ColoringStrategy { Greedy, RandomGreedy, LargestDegreeFirst, SmallestDegreeLast, Saturation };

struct Coloring {
    VertexMap<std::size_t> color;
    std::size_t count = 0;
};

/// Greedy colouring of the underlying undirected simple graph in the order
/// given by the strategy. RandomGreedy shuffles with `seed`. Self-loops are
/// rejected.
Coloring color(const Graph& g, ColoringStrategy strategy, std::uint64_t seed = 0);

// ---- vertex cover ----

enum class VertexCoverMethod { Greedy, TwoApprox };

/// Greedy takes a highest-degree vertex until no edge is left; TwoApprox
/// takes both ends of a greedy maximal matching (and every looped vertex).
std::vector<VertexId> vertex_cover(const Graph& g, VertexCoverMethod method);

// ---- isomorphism ----

enum class IsoMode { Isomorphism, InducedSubgraph };
using IsoMapping = std::vector<std::pair<VertexId, VertexId>>;  // g1 vertex -> g2 vertex

/// VF2. InducedSubgraph maps g1 onto an induced subgraph of g2. Mappings are
/// listed in g1 vertex order; `visit` returns false to stop.
void for_each_isomorphism(const Graph& g1, const Graph& g2, IsoMode mode,
                          const std::function<bool(const IsoMapping&)>& visit);
std::vector<IsoMapping> vf2(const Graph& g1, const Graph& g2, IsoMode mode,
                            std::size_t limit = std::numeric_limits<std::size_t>::max());
bool isomorphic(const Graph& g1, const Graph& g2);

enum class RefinementVerdict { Distinguishable, Inconclusive };

/// 1-dimensional Weisfeiler-Leman on the disjoint union, with exact
/// multiset signatures. Distinguishable means certainly non-isomorphic.
RefinementVerdict color_refinement(const Graph& g1, const Graph& g2);

// ---- tours ----

struct Tour {
    std::vector<VertexId> vertices;  // closed: front() == back() when non-empty
    std::vector<EdgeId> edges;
    double weight = 0.0;
};

enum class TspMethod { HeldKarp, MstTwoApprox, TwoOpt };

struct TspOptions {
    std::size_t held_karp_cap = 20;
    std::optional<std::vector<VertexId>> start_tour;  // TwoOpt; defaults to the MST tour
};

/// Travelling salesman on a complete undirected weighted graph (the cheapest
/// edge of each pair is used).
Tour tsp(const Graph& g, TspMethod method, const TspOptions& options = {});

/// Hierholzer. Raises NotEulerian naming the violated condition.
Tour eulerian_circuit(const Graph& g);

} // namespace tessera
