#pragma once

#include <vector>

#include "tessera/core.hpp"

namespace tessera {

/// Johnson's algorithm on a directed graph. Each cycle is listed once,
/// starting at its earliest vertex in iteration order; parallel arcs do not
/// produce duplicates and a self-loop is a cycle of length one.
std::vector<std::vector<VertexId>> enumerate_simple_cycles(const Graph& g);

enum class CycleBasisMethod { Paton, FundamentalBfs, FundamentalDfs };

struct CycleBasis {
    std::vector<std::vector<EdgeId>> cycles;
    std::size_t dimension = 0;  // m - n + c
};

CycleBasis cycle_basis(const Graph& g, CycleBasisMethod method);

} // namespace tessera
