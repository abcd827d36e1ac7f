#pragma once

#include <vector>

#include "tessera/core.hpp"

namespace tessera {

enum class FlowAlgorithm { EdmondsKarp, Dinic, PushRelabel };

/// Edge weights are capacities (1 on unweighted graphs). For an undirected
/// edge the flow is signed relative to its stored source -> target
/// orientation. Self-loops carry no flow.
struct FlowResult {
    double value = 0.0;
    VertexId source{};
    VertexId sink{};
    std::vector<EdgeId> edges;  // graph edge order
    std::vector<double> flow;   // parallel to edges

    double flow_on(EdgeId e) const;
};

struct CutResult {
    std::vector<VertexId> source_side;
    std::vector<EdgeId> cut_edges;
    double weight = 0.0;
};

FlowResult max_flow(const Graph& g, VertexId s, VertexId t, FlowAlgorithm algorithm = FlowAlgorithm::PushRelabel);

/// Minimum s-t cut; the source side is the residual-reachable set from s.
CutResult min_st_cut(const Graph& g, VertexId s, VertexId t, FlowAlgorithm algorithm = FlowAlgorithm::PushRelabel);

/// Global minimum cut of an undirected graph. The returned side contains the
/// first vertex. A disconnected graph yields weight 0 with a component as the
/// side.
CutResult stoer_wagner_min_cut(const Graph& g);

struct GomoryHuTree {
    struct TreeEdge {
        VertexId u;
        VertexId v;
        double weight;
    };
    std::vector<VertexId> vertices;
    std::vector<TreeEdge> edges;  // edges[i] joins vertices[i + 1] to its parent

    /// Bottleneck on the tree path, i.e. the minimum s-t cut value.
    double min_cut(VertexId s, VertexId t) const;
};

/// Gusfield's construction with n - 1 max-flow calls.
GomoryHuTree gomory_hu(const Graph& g, FlowAlgorithm algorithm = FlowAlgorithm::PushRelabel);

} // namespace tessera
