#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tessera/edge_list.hpp"

namespace tessera {

enum class Format { DimacsSp, DimacsColor, Csv, Graph6, Sparse6, Dot };

struct FormatDescriptor {
    Format format;
    const char* name;
    bool directed;         // graphs read from this format are directed
    bool weighted;         // weights are stored
    const char* comment;   // line prefix of comments, empty if none
    bool readable;         // false for export-only formats
};

const FormatDescriptor& describe(Format format);
/// Accepts "dimacs-sp", "dimacs-color", "csv", "graph6", "sparse6", "dot".
std::optional<Format> parse_format(std::string_view name);

// Readers return 0-based edge lists. DIMACS ids are 1-based on disk and
// shifted by one at the boundary. Errors are ParseError with line/column.

/// `p sp n m` header and `a u v w` arcs; `c` lines are comments. The writer
/// emits no comments and turns each undirected non-loop edge into two arcs.
EdgeList read_dimacs_sp(std::istream& in);
void write_dimacs_sp(const EdgeList& g, std::ostream& out);

/// `p edge n m` (or `p col`) header and `e u v` lines. With `simple`, a
/// repeated pair or a loop is an error.
EdgeList read_dimacs_color(std::istream& in, bool simple = true);
void write_dimacs_color(const EdgeList& g, std::ostream& out);

/// One `u,v` or `u,v,w` row per edge; every row must have the same number
/// of columns. Blank lines are skipped. Without `vertex_count` the graph has
/// max id + 1 vertices. No quoting.
EdgeList read_csv(std::istream& in, bool directed = false, std::optional<std::size_t> vertex_count = std::nullopt);
void write_csv(const EdgeList& g, std::ostream& out);

/// graph6 for undirected simple graphs; a leading ">>graph6<<" is accepted.
std::string encode_graph6(const EdgeList& g);
EdgeList decode_graph6(std::string_view text, std::size_t line = 1);

/// sparse6 for undirected graphs, loops and parallel edges allowed; a
/// leading ">>sparse6<<" is accepted. Decoded edges are (smaller, larger)
/// pairs sorted by larger end, then smaller end.
std::string encode_sparse6(const EdgeList& g);
EdgeList decode_sparse6(std::string_view text, std::size_t line = 1);

/// DOT export. `label` supplies optional vertex labels by 0-based index.
void write_dot(const EdgeList& g, std::ostream& out,
               const std::function<std::optional<std::string>(std::size_t)>& label = {});

/// Format-dispatching helpers. Graph6/Sparse6 read the first non-empty line.
EdgeList read_graph(std::istream& in, Format format);
void write_graph(const EdgeList& g, std::ostream& out, Format format);

} // namespace tessera
