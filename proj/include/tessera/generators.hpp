#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "tessera/edge_list.hpp"

namespace tessera {

enum class Family { Complete, Grid, Ring, Star, Wheel, Hypercube };

/// Deterministic families. `size` is the vertex count for Complete, Ring,
/// Star and Wheel, the dimension for Hypercube and the row count for Grid
/// (`size2` = columns).
EdgeList generate_deterministic(Family family, std::size_t size, std::size_t size2 = 0);

EdgeList complete_graph(std::size_t n);
EdgeList complete_bipartite_graph(std::size_t n1, std::size_t n2);
EdgeList grid_graph(std::size_t rows, std::size_t cols);
EdgeList ring_graph(std::size_t n);
EdgeList star_graph(std::size_t n);
EdgeList wheel_graph(std::size_t n);
EdgeList hypercube_graph(std::size_t dimension);

EdgeList gnp(std::size_t n, double p, std::uint64_t seed, bool directed = false);
EdgeList gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Starts from K_{m0}; every later vertex attaches to m distinct earlier
/// vertices chosen with probability proportional to their current degree.
EdgeList barabasi_albert(std::size_t m0, std::size_t m, std::size_t n, std::uint64_t seed);

/// Ring lattice with k neighbours per vertex, then k/2 rewiring laps (or
/// shortcut additions when `add_instead_of_rewire`).
EdgeList watts_strogatz(std::size_t n, std::size_t k, double p, bool add_instead_of_rewire,
                        std::uint64_t seed);

/// Directed n x n lattice: arcs to every node within lattice distance p, plus
/// q distinct long-range arcs per node to non-local nodes v drawn with weight
/// d(u,v)^-r. Node (row, col) is vertex row*n + col.
EdgeList kleinberg(std::size_t n, std::size_t p, std::size_t q, double r, std::uint64_t seed);

struct RmatParams {
    std::size_t scale = 10;
    std::size_t edge_factor = 16;
    double a = 0.57;
    double b = 0.19;
    double c = 0.19;
    double d = 0.05;
    bool directed = false;
    bool dedupe = false;  // drop loops and repeated pairs, yielding a simple graph
};
EdgeList rmat(const RmatParams& params, std::uint64_t seed);

EdgeList random_regular(std::size_t n, std::size_t d, std::uint64_t seed);
/// Left side is 0..n1-1, right side n1..n1+n2-1.
EdgeList random_bipartite_p(std::size_t n1, std::size_t n2, double p, std::uint64_t seed);
EdgeList random_bipartite_m(std::size_t n1, std::size_t n2, std::size_t m, std::uint64_t seed);

struct FlowInstance {
    EdgeList graph;  // directed, weighted; weights are capacities
    std::uint64_t source;
    std::uint64_t sink;
};

enum class RmfgenShape { Long, Flat, Wide };
enum class WashingtonShape { Wide, Long };

/// b layers of a x a grids. Grid neighbours are joined in both directions with
/// capacity a*a*cmax; every grid row of a layer sends one arc with capacity in
/// [cmin, cmax] to a random node of the next layer. n = a^2 b and
/// m = 4a(a-1)b + a(b-1). Source is the first node of layer 0, sink the last
/// node of layer b-1.
FlowInstance rmfgen(std::size_t a, std::size_t b, std::int64_t cmin, std::int64_t cmax,
                    std::uint64_t seed);
/// Long: a = size, b = a^2. Flat: b = size, a = b^2. Wide: a = b = size.
FlowInstance rmfgen_shaped(RmfgenShape shape, std::size_t size, std::int64_t cmin,
                           std::int64_t cmax, std::uint64_t seed);

/// Random level graph: rows x cols grid, each node sends arcs to 3 distinct
/// random nodes of the next column (all of them when rows < 3). The source
/// (vertex 0) feeds the first column and the last column drains into the sink
/// (vertex rows*cols+1). Grid arcs carry capacities in [1, cmax]; source and
/// sink arcs carry 3*cmax.
FlowInstance washington_level(std::size_t rows, std::size_t cols, std::uint64_t seed,
                              std::int64_t cmax = 1000);
/// Wide: 64 rows and `size` columns. Long: `size` rows and 64 columns.
FlowInstance washington_shaped(WashingtonShape shape, std::size_t size, std::uint64_t seed,
                               std::int64_t cmax = 1000);

// Tagged parameter record used by the CLI and the C API.
namespace model {
struct Deterministic { Family family; std::size_t size; std::size_t size2 = 0; };
struct Gnp { std::size_t n; double p; bool directed = false; };
struct Gnm { std::size_t n; std::size_t m; };
struct BarabasiAlbert { std::size_t m0; std::size_t m; std::size_t n; };
struct WattsStrogatz { std::size_t n; std::size_t k; double p; bool add_instead_of_rewire = false; };
struct Kleinberg { std::size_t n; std::size_t p; std::size_t q; double r; };
struct Rmat { RmatParams params; };
struct RandomRegular { std::size_t n; std::size_t d; };
struct RandomBipartite { std::size_t n1; std::size_t n2; std::optional<double> p; std::optional<std::size_t> m; };
struct Rmfgen { std::size_t a; std::size_t b; std::int64_t cmin; std::int64_t cmax; };
struct Washington { std::size_t rows; std::size_t cols; std::int64_t cmax = 1000; };
} // namespace model

using GeneratorModel =
    std::variant<model::Deterministic, model::Gnp, model::Gnm, model::BarabasiAlbert,
                 model::WattsStrogatz, model::Kleinberg, model::Rmat, model::RandomRegular,
                 model::RandomBipartite, model::Rmfgen, model::Washington>;

struct GeneratorParams {
    GeneratorModel model;
    std::uint64_t seed = 0;
};

struct GeneratedGraph {
    EdgeList graph;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> terminals;  // flow models only
};

GeneratedGraph generate(const GeneratorParams& params);

} // namespace tessera
