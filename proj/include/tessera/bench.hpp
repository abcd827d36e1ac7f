#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tessera/generators.hpp"

namespace tessera {

enum class Experiment { Dijkstra, PageRank, Mst, MaxFlow, BackendBundle, Memory, Noop };
enum class BackendKind { Adjacency, Csr };

std::optional<Experiment> parse_experiment(std::string_view name);
std::optional<BackendKind> parse_backend(std::string_view name);
const char* backend_name(BackendKind backend);

// Instance families: gnp (p = 0.1), barabasi-albert (m0 = 20, m = 10),
// rmat (Graph-500 parameters; sizes are vertex counts, powers of two),
// washington-wide, washington-long, genrmf-long, genrmf-flat, genrmf-square
// (sizes are the generator's size parameter) and dimacs (needs `input`).
struct ExperimentPlan {
    Experiment experiment = Experiment::Dijkstra;
    std::string family = "gnp";
    std::vector<std::size_t> sizes;
    std::size_t repetitions = 10;
    std::uint64_t seed = 0;  // repetition r uses instance seed `seed + r`
    std::vector<BackendKind> backends{BackendKind::Adjacency};
    std::optional<std::string> input;  // DIMACS sp file for the dimacs family
    std::size_t sources = 10;          // random Dijkstra sources on file input
};

struct Measurement {
    std::string family;
    std::size_t nodes = 0;
    std::size_t edges = 0;  // mean over repetitions, rounded
    std::string algorithm;
    std::string backend;
    std::vector<double> samples_ms;
    std::optional<double> bytes_per_edge;  // memory runs only

    double mean_ms() const;
    double stddev_ms() const;  // sample standard deviation, 0 for one sample
};

/// Raises GraphError(InvalidArgument) for plans that cannot run (unknown
/// family, flow experiment on a non-flow family, zero repetitions, ...).
void validate(const ExperimentPlan& plan);

/// One measurement per (size, algorithm, backend) cell. Only the algorithm
/// call is timed; instance generation and backend construction are not.
std::vector<Measurement> run_experiment(const ExperimentPlan& plan);

/// `family;nodes;edges;algorithm;backend;time_ms;stddev_ms;bytes_per_edge`
/// where time_ms is the mean. Memory rows leave the timing fields empty.
void write_measurements(const std::vector<Measurement>& rows, std::ostream& out);
inline constexpr const char* kCsvHeader = "family;nodes;edges;algorithm;backend;time_ms;stddev_ms;bytes_per_edge";

/// Builds generator parameters from `key=value` arguments, e.g. ("rmat",
/// {"scale=10"}). Models: complete, grid, ring, star, wheel, hypercube, gnp,
/// gnm, barabasi-albert, watts-strogatz, kleinberg, rmat, random-regular,
/// random-bipartite, rmfgen, washington.
GeneratorParams parse_generator(std::string_view model, const std::vector<std::string>& args,
                                std::uint64_t seed);

/// Best-effort: restricts the process to one CPU. Returns false if the
/// platform refused.
bool pin_to_single_core();

} // namespace tessera
