#include "tessera/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <utility>

namespace tessera {

namespace {

constexpr std::array<FormatDescriptor, 6> kFormats{{
    {Format::DimacsSp, "dimacs-sp", true, true, "c", true},
    {Format::DimacsColor, "dimacs-color", false, false, "c", true},
    {Format::Csv, "csv", false, true, "", true},
    {Format::Graph6, "graph6", false, false, "", true},
    {Format::Sparse6, "sparse6", false, false, "", true},
    {Format::Dot, "dot", false, true, "", false},
}};

std::string format_number(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_ws(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(const Token& t, std::size_t line, const char* what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError(line, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
    return v;
}

double parse_double(const Token& t, std::size_t line) {
    double v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError(line, t.column, "expected a number, got '" + std::string(t.text) + "'");
    return v;
}

void require_undirected(const EdgeList& g, const char* format) {
    if (g.kind.directed)
        throw GraphError(ErrorCode::Unsupported, std::string(format) + " cannot store directed graphs");
}

// Shared reader for the two DIMACS dialects.
struct DimacsHeader {
    bool seen = false;
    std::uint64_t n = 0, m = 0;
};

template <class OnEdge>
void read_dimacs(std::istream& in, std::initializer_list<std::string_view> problems, char edge_tag,
                 std::size_t edge_fields, DimacsHeader& header, OnEdge on_edge) {
    std::string line;
    std::size_t lineno = 0, count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0].text == "c") continue;
        if (tok[0].text == "p") {
            if (header.seen) throw ParseError(lineno, 1, "duplicate problem line");
            if (tok.size() != 4) throw ParseError(lineno, 1, "malformed problem line");
            if (std::find(problems.begin(), problems.end(), tok[1].text) == problems.end())
                throw ParseError(lineno, tok[1].column, "unexpected problem type '" + std::string(tok[1].text) + "'");
            header.n = parse_uint(tok[2], lineno, "vertex count");
            header.m = parse_uint(tok[3], lineno, "edge count");
            header.seen = true;
            continue;
        }
        if (tok[0].text.size() == 1 && tok[0].text[0] == edge_tag) {
            if (!header.seen) throw ParseError(lineno, 1, "edge before problem line");
            if (tok.size() != edge_fields + 1)
                throw ParseError(lineno, tok.size() > edge_fields + 1 ? tok[edge_fields + 1].column : line.size() + 1,
                                 "expected " + std::to_string(edge_fields) + " fields");
            if (++count > header.m) throw ParseError(lineno, 1, "more edges than declared");
            std::uint64_t u = parse_uint(tok[1], lineno, "vertex id");
            std::uint64_t v = parse_uint(tok[2], lineno, "vertex id");
            if (u < 1 || u > header.n) throw ParseError(lineno, tok[1].column, "vertex id out of range");
            if (v < 1 || v > header.n) throw ParseError(lineno, tok[2].column, "vertex id out of range");
            on_edge(u - 1, v - 1, tok, lineno);
            continue;
        }
        if (tok[0].text == "n") continue;  // vertex annotations in colouring files
        throw ParseError(lineno, tok[0].column, "unknown line type '" + std::string(tok[0].text) + "'");
    }
    if (!header.seen) throw ParseError(lineno + 1, 1, "missing problem line");
    if (count != header.m)
        throw ParseError(lineno + 1, 1, "declared " + std::to_string(header.m) + " edges, found " + std::to_string(count));
}

// ---- graph6 / sparse6 helpers ----

void put_n(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        if (n >= (std::uint64_t{1} << 36)) throw GraphError(ErrorCode::Unsupported, "graph too large for graph6/sparse6");
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
}

// Decoded payload: 6-bit values plus their original columns.
struct Payload {
    std::vector<std::uint8_t> data;
    std::size_t first_column = 1;
};

Payload read_payload(std::string_view text, std::string_view prefix, char lead, std::size_t line,
                     std::uint64_t& n) {
    std::size_t pos = 0;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.substr(0, prefix.size()) == prefix) pos = prefix.size();
    if (lead) {
        if (pos >= text.size() || text[pos] != lead)
            throw ParseError(line, pos + 1, std::string("expected '") + lead + "'");
        ++pos;
    }
    for (std::size_t i = pos; i < text.size(); ++i)
        if (text[i] < 63 || text[i] > 126) throw ParseError(line, i + 1, "invalid character");
    auto take = [&](std::size_t count) {
        if (pos + count > text.size()) throw ParseError(line, text.size() + 1, "truncated size field");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(text[pos + i] - 63);
        pos += count;
        return v;
    };
    if (pos >= text.size()) throw ParseError(line, pos + 1, "missing size field");
    if (text[pos] != '~') {
        n = take(1);
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        pos += 2;
        n = take(6);
    } else {
        pos += 1;
        n = take(3);
    }
    Payload p;
    p.first_column = pos + 1;
    for (std::size_t i = pos; i < text.size(); ++i) p.data.push_back(static_cast<std::uint8_t>(text[i] - 63));
    return p;
}

void put_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t b = 0; b < 6; ++b) v = (v << 1) | (i + b < bits.size() && bits[i + b] ? 1 : 0);
        out.push_back(static_cast<char>(v + 63));
    }
}

} // namespace

const FormatDescriptor& describe(Format format) {
    for (const auto& d : kFormats)
        if (d.format == format) return d;
    throw GraphError(ErrorCode::InvalidArgument, "unknown format");
}

std::optional<Format> parse_format(std::string_view name) {
    for (const auto& d : kFormats)
        if (name == d.name) return d.format;
    return std::nullopt;
}

// ---- DIMACS shortest path ----

EdgeList read_dimacs_sp(std::istream& in) {
    EdgeList g;
    g.kind = GraphKind{true, true, true, true};
    DimacsHeader header;
    read_dimacs(in, {"sp"}, 'a', 3, header, [&](std::uint64_t u, std::uint64_t v, const std::vector<Token>& tok, std::size_t line) {
        g.edges.push_back({u, v, parse_double(tok[3], line)});
    });
    g.vertex_count = header.n;
    return g;
}

void write_dimacs_sp(const EdgeList& g, std::ostream& out) {
    std::size_t arcs = 0;
    for (const auto& e : g.edges) arcs += (!g.kind.directed && e.source != e.target) ? 2 : 1;
    out << "p sp " << g.vertex_count << ' ' << arcs << '\n';
    for (const auto& e : g.edges) {
        std::string w = format_number(e.weight);
        out << "a " << e.source + 1 << ' ' << e.target + 1 << ' ' << w << '\n';
        if (!g.kind.directed && e.source != e.target)
            out << "a " << e.target + 1 << ' ' << e.source + 1 << ' ' << w << '\n';
    }
}

// ---- DIMACS colouring ----

EdgeList read_dimacs_color(std::istream& in, bool simple) {
    EdgeList g;
    g.kind = GraphKind{false, !simple, !simple, false};
    DimacsHeader header;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    read_dimacs(in, {"edge", "col"}, 'e', 2, header, [&](std::uint64_t u, std::uint64_t v, const std::vector<Token>&, std::size_t line) {
        if (simple) {
            if (u == v) throw ParseError(line, 1, "self-loop in simple graph");
            if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
                throw ParseError(line, 1, "duplicate edge in simple graph");
        }
        g.edges.push_back({u, v, kDefaultEdgeWeight});
    });
    g.vertex_count = header.n;
    return g;
}

void write_dimacs_color(const EdgeList& g, std::ostream& out) {
    require_undirected(g, "dimacs-color");
    out << "p edge " << g.vertex_count << ' ' << g.edges.size() << '\n';
    for (const auto& e : g.edges) out << "e " << e.source + 1 << ' ' << e.target + 1 << '\n';
}

// ---- CSV ----

EdgeList read_csv(std::istream& in, bool directed, std::optional<std::size_t> vertex_count) {
    EdgeList g;
    std::string line;
    std::size_t lineno = 0, columns = 0;
    std::uint64_t max_id = 0;
    bool any = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<Token> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            std::string_view f = std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            std::size_t lead = f.find_first_not_of(" \t");
            std::size_t trail = f.find_last_not_of(" \t");
            if (lead == std::string_view::npos) fields.push_back({std::string_view{}, start + 1});
            else fields.push_back({f.substr(lead, trail - lead + 1), start + lead + 1});
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (columns == 0) {
            if (fields.size() != 2 && fields.size() != 3)
                throw ParseError(lineno, 1, "expected 2 or 3 columns, got " + std::to_string(fields.size()));
            columns = fields.size();
        } else if (fields.size() != columns) {
            std::size_t col = fields.size() > columns ? fields[columns].column : line.size() + 1;
            throw ParseError(lineno, col, "expected " + std::to_string(columns) + " columns, got " + std::to_string(fields.size()));
        }
        EdgeRecord e;
        e.source = parse_uint(fields[0], lineno, "vertex id");
        e.target = parse_uint(fields[1], lineno, "vertex id");
        if (columns == 3) e.weight = parse_double(fields[2], lineno);
        if (vertex_count) {
            if (e.source >= *vertex_count) throw ParseError(lineno, fields[0].column, "vertex id out of range");
            if (e.target >= *vertex_count) throw ParseError(lineno, fields[1].column, "vertex id out of range");
        }
        max_id = std::max({max_id, e.source, e.target});
        any = true;
        g.edges.push_back(e);
    }
    g.kind = GraphKind{directed, true, true, columns == 3};
    g.vertex_count = vertex_count ? *vertex_count : (any ? max_id + 1 : 0);
    return g;
}

void write_csv(const EdgeList& g, std::ostream& out) {
    for (const auto& e : g.edges) {
        out << e.source << ',' << e.target;
        if (g.kind.weighted) out << ',' << format_number(e.weight);
        out << '\n';
    }
}

// ---- graph6 ----

std::string encode_graph6(const EdgeList& g) {
    require_undirected(g, "graph6");
    std::uint64_t n = g.vertex_count;
    std::vector<bool> adj(n * (n > 0 ? n - 1 : 0) / 2, false);
    auto slot = [](std::uint64_t i, std::uint64_t j) { return j * (j - 1) / 2 + i; };  // i < j
    for (const auto& e : g.edges) {
        if (e.source == e.target) throw GraphError(ErrorCode::Unsupported, "graph6 cannot store self-loops");
        if (e.source >= n || e.target >= n) throw GraphError(ErrorCode::InvalidArgument, "edge endpoint out of range");
        auto s = slot(std::min(e.source, e.target), std::max(e.source, e.target));
        if (adj[s]) throw GraphError(ErrorCode::Unsupported, "graph6 cannot store parallel edges");
        adj[s] = true;
    }
    std::string out;
    put_n(out, n);
    put_bits(out, adj);
    return out;
}

EdgeList decode_graph6(std::string_view text, std::size_t line) {
    std::uint64_t n = 0;
    Payload p = read_payload(text, ">>graph6<<", 0, line, n);
    std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    std::size_t need = (bits + 5) / 6;
    if (p.data.size() < need) throw ParseError(line, p.first_column + p.data.size(), "truncated payload");
    if (p.data.size() > need) throw ParseError(line, p.first_column + need, "trailing characters after payload");
    EdgeList g;
    g.kind = GraphKind{};
    g.vertex_count = n;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++k)
            if ((p.data[k / 6] >> (5 - k % 6)) & 1) g.edges.push_back({i, j, kDefaultEdgeWeight});
    return g;
}

// ---- sparse6 ----

std::string encode_sparse6(const EdgeList& g) {
    require_undirected(g, "sparse6");
    std::uint64_t n = g.vertex_count;
    unsigned k = 1;
    while ((std::uint64_t{1} << k) < n) ++k;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // (larger, smaller)
    for (const auto& e : g.edges) {
        if (e.source >= n || e.target >= n) throw GraphError(ErrorCode::InvalidArgument, "edge endpoint out of range");
        edges.emplace_back(std::max(e.source, e.target), std::min(e.source, e.target));
    }
    std::sort(edges.begin(), edges.end());

    std::vector<bool> bits;
    auto enc = [&](std::uint64_t x) {
        for (unsigned i = 0; i < k; ++i) bits.push_back((x >> (k - 1 - i)) & 1);
    };
    std::uint64_t cur = 0;
    for (auto [v, u] : edges) {
        if (v == cur) {
            bits.push_back(false);
            enc(u);
        } else if (v == cur + 1) {
            cur = v;
            bits.push_back(true);
            enc(u);
        } else {
            cur = v;
            bits.push_back(true);
            enc(v);
            bits.push_back(false);
            enc(u);
        }
    }
    std::size_t pad = (6 - bits.size() % 6) % 6;
    if (k < 6 && n == (std::uint64_t{1} << k) && pad >= k && cur + 1 < n) {
        // padding with ones would read back as an edge to n-1
        bits.push_back(false);
        pad = (6 - bits.size() % 6) % 6;
    }
    bits.insert(bits.end(), pad, true);

    std::string out = ":";
    put_n(out, n);
    put_bits(out, bits);
    return out;
}

EdgeList decode_sparse6(std::string_view text, std::size_t line) {
    std::uint64_t n = 0;
    Payload p = read_payload(text, ">>sparse6<<", ':', line, n);
    unsigned k = 1;
    while ((std::uint64_t{1} << k) < n) ++k;

    EdgeList g;
    g.kind = GraphKind{false, true, true, false};
    g.vertex_count = n;

    std::size_t next = 0;
    int dlen = 0;
    std::uint64_t d = 0;
    std::uint64_t v = 0;
    while (true) {
        if (dlen < 1) {
            if (next == p.data.size()) break;
            d = p.data[next++];
            dlen = 6;
        }
        --dlen;
        bool b = (d >> dlen) & 1;
        std::uint64_t x = d & ((std::uint64_t{1} << dlen) - 1);
        int xlen = dlen;
        bool done = false;
        while (xlen < static_cast<int>(k)) {
            if (next == p.data.size()) { done = true; break; }
            d = p.data[next++];
            dlen = 6;
            x = (x << 6) + d;
            xlen += 6;
        }
        if (done) break;
        x >>= (xlen - k);
        dlen = xlen - static_cast<int>(k);
        if (b) ++v;
        if (x >= n || v >= n) break;
        if (x > v) v = x;
        else g.edges.push_back({x, v, kDefaultEdgeWeight});
    }
    return g;
}

// ---- DOT ----

void write_dot(const EdgeList& g, std::ostream& out,
               const std::function<std::optional<std::string>(std::size_t)>& label) {
    const char* arrow = g.kind.directed ? " -> " : " -- ";
    out << (g.kind.directed ? "digraph" : "graph") << " {\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        out << "  " << v;
        if (label) {
            if (auto text = label(v)) {
                out << " [label=\"";
                for (char c : *text) {
                    if (c == '"' || c == '\\') out << '\\';
                    out << c;
                }
                out << "\"]";
            }
        }
        out << ";\n";
    }
    for (const auto& e : g.edges) {
        out << "  " << e.source << arrow << e.target;
        if (g.kind.weighted) out << " [weight=" << format_number(e.weight) << ']';
        out << ";\n";
    }
    out << "}\n";
}

// ---- dispatch ----

EdgeList read_graph(std::istream& in, Format format) {
    switch (format) {
    case Format::DimacsSp: return read_dimacs_sp(in);
    case Format::DimacsColor: return read_dimacs_color(in);
    case Format::Csv: return read_csv(in);
    case Format::Graph6:
    case Format::Sparse6: {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            return format == Format::Graph6 ? decode_graph6(line, lineno) : decode_sparse6(line, lineno);
        }
        throw ParseError(lineno + 1, 1, "empty input");
    }
    case Format::Dot: break;
    }
    throw GraphError(ErrorCode::Unsupported, std::string(describe(format).name) + " is export-only");
}

void write_graph(const EdgeList& g, std::ostream& out, Format format) {
    switch (format) {
    case Format::DimacsSp: write_dimacs_sp(g, out); return;
    case Format::DimacsColor: write_dimacs_color(g, out); return;
    case Format::Csv: write_csv(g, out); return;
    case Format::Graph6: out << encode_graph6(g) << '\n'; return;
    case Format::Sparse6: out << encode_sparse6(g) << '\n'; return;
    case Format::Dot: write_dot(g, out); return;
    }
}

} // namespace tessera
