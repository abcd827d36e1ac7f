#include "tessera/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "tessera/dary_heap.hpp"

namespace tessera {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint32_t kNone = ~std::uint32_t{0};

struct Labels {
    std::vector<double> dist;
    std::vector<std::uint32_t> pred_edge;
    std::vector<std::uint32_t> pred_vertex;

    explicit Labels(std::size_t n) : dist(n, kInf), pred_edge(n, kNone), pred_vertex(n, kNone) {}
};

struct SearchOptions {
    std::optional<std::uint32_t> target;
    const std::vector<double>* weights = nullptr;  // overrides edge weights by edge index
    const std::vector<char>* blocked_vertex = nullptr;
    const std::vector<char>* blocked_edge = nullptr;
};

double arc_weight(const IndexedGraph& ig, std::uint32_t j, const SearchOptions& opt) {
    double w = opt.weights ? (*opt.weights)[j] : ig.weight(j);
    if (w < 0)
        throw NegativeWeightError(ig.edge(j), w);
    return w;
}

void run_dijkstra(const IndexedGraph& ig, std::uint32_t s, Labels& lab, const SearchOptions& opt = {}) {
    DaryHeap<double> heap(ig.n());
    lab.dist[s] = 0;
    heap.push(s, 0.0);
    while (!heap.empty()) {
        const std::uint32_t u = heap.pop();
        if (opt.target && u == *opt.target)
            return;
        const double du = lab.dist[u];
        for (const Arc& a : ig.out(u)) {
            if (opt.blocked_edge && (*opt.blocked_edge)[a.edge])
                continue;
            if (opt.blocked_vertex && (*opt.blocked_vertex)[a.to])
                continue;
            const double nd = du + arc_weight(ig, a.edge, opt);
            if (nd < lab.dist[a.to]) {
                lab.dist[a.to] = nd;
                lab.pred_edge[a.to] = a.edge;
                lab.pred_vertex[a.to] = u;
                heap.push_or_decrease(a.to, nd);
            }
        }
    }
}

PathResult trace(const IndexedGraph& ig, const Labels& lab, std::uint32_t s, std::uint32_t t) {
    std::vector<std::uint32_t> vs{t}, es;
    for (std::uint32_t v = t; v != s; v = lab.pred_vertex[v]) {
        es.push_back(lab.pred_edge[v]);
        vs.push_back(lab.pred_vertex[v]);
    }
    std::reverse(vs.begin(), vs.end());
    std::reverse(es.begin(), es.end());
    PathResult p;
    for (auto v : vs)
        p.vertices.push_back(ig.vertex(v));
    for (auto e : es) {
        p.edges.push_back(ig.edge(e));
        p.weight += ig.weight(e);
    }
    return p;
}

SsspTree to_tree(const IndexedGraph& ig, std::uint32_t s, const Labels& lab) {
    const std::size_t n = ig.n();
    std::vector<std::optional<double>> dist(n);
    std::vector<std::optional<EdgeId>> pred(n);
    std::vector<std::optional<VertexId>> parent(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (lab.dist[v] != kInf)
            dist[v] = lab.dist[v];
        if (lab.pred_edge[v] != kNone) {
            pred[v] = ig.edge(lab.pred_edge[v]);
            parent[v] = ig.vertex(lab.pred_vertex[v]);
        }
    }
    SsspTree tree;
    tree.source = ig.vertex(s);
    tree.distance = ig.make_map(std::move(dist));
    tree.predecessor = ig.make_map(std::move(pred));
    tree.parent = ig.make_map(std::move(parent));
    return tree;
}

// Relaxation rounds from the labels already in `lab`. Returns a vertex
// relaxed in the final round when a negative cycle remains.
std::optional<std::uint32_t> relax_rounds(const IndexedGraph& ig, Labels& lab) {
    const std::size_t n = ig.n(), m = ig.m();
    std::optional<std::uint32_t> last;
    for (std::size_t round = 0; round <= n; ++round) {
        last.reset();
        auto relax = [&](std::uint32_t u, std::uint32_t v, std::uint32_t j) {
            if (lab.dist[u] == kInf)
                return;
            const double nd = lab.dist[u] + ig.weight(j);
            if (nd < lab.dist[v]) {
                lab.dist[v] = nd;
                lab.pred_edge[v] = j;
                lab.pred_vertex[v] = u;
                last = v;
            }
        };
        for (std::uint32_t j = 0; j < m; ++j) {
            relax(ig.src(j), ig.dst(j), j);
            if (!ig.directed())
                relax(ig.dst(j), ig.src(j), j);
        }
        if (!last)
            return std::nullopt;
    }
    return last;
}

[[noreturn]] void throw_cycle(const IndexedGraph& ig, const Labels& lab, std::uint32_t x) {
    std::uint32_t y = x;
    for (std::size_t i = 0; i < ig.n() && lab.pred_vertex[y] != kNone; ++i)
        y = lab.pred_vertex[y];
    std::vector<EdgeId> cycle;
    double total = 0;
    std::uint32_t cur = y;
    do {
        const auto e = lab.pred_edge[cur];
        cycle.push_back(ig.edge(e));
        total += ig.weight(e);
        cur = lab.pred_vertex[cur];
    } while (cur != y && cur != kNone);
    std::reverse(cycle.begin(), cycle.end());
    throw NegativeCycleError(std::move(cycle), total);
}

bool has_negative_weight(const IndexedGraph& ig) {
    for (std::size_t j = 0; j < ig.m(); ++j)
        if (ig.weight(j) < 0)
            return true;
    return false;
}

} // namespace

std::optional<PathResult> SsspTree::path_to(VertexId v) const {
    if (!distance.at(v))
        return std::nullopt;
    PathResult p;
    p.weight = *distance.at(v);
    p.vertices.push_back(v);
    for (VertexId cur = v; cur != source;) {
        p.edges.push_back(*predecessor.at(cur));
        cur = *parent.at(cur);
        p.vertices.push_back(cur);
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

std::optional<double> DistanceMatrix::at(std::size_t i, std::size_t j) const {
    const double d = data_[i * size() + j];
    if (d == kInf)
        return std::nullopt;
    return d;
}

SsspTree dijkstra(const Graph& g, VertexId source) {
    IndexedGraph ig(g);
    const auto s = ig.index(source);
    Labels lab(ig.n());
    run_dijkstra(ig, s, lab);
    return to_tree(ig, s, lab);
}

std::optional<PathResult> dijkstra_path(const Graph& g, VertexId source, VertexId target) {
    IndexedGraph ig(g);
    const auto s = ig.index(source), t = ig.index(target);
    Labels lab(ig.n());
    SearchOptions opt;
    opt.target = t;
    run_dijkstra(ig, s, lab, opt);
    if (lab.dist[t] == kInf)
        return std::nullopt;
    return trace(ig, lab, s, t);
}

std::optional<PathResult> bidirectional_dijkstra(const Graph& g, VertexId source, VertexId target) {
    IndexedGraph ig(g);
    const auto s = ig.index(source), t = ig.index(target);
    if (s == t)
        return PathResult{{source}, {}, 0.0};
    const std::size_t n = ig.n();
    Labels fwd(n), bwd(n);
    DaryHeap<double> hf(n), hb(n);
    fwd.dist[s] = 0;
    bwd.dist[t] = 0;
    hf.push(s, 0.0);
    hb.push(t, 0.0);
    double best = kInf;
    std::uint32_t meet_from = kNone, meet_to = kNone, meet_edge = kNone;  // forward orientation

    while (!hf.empty() && !hb.empty()) {
        if (hf.top_key() + hb.top_key() >= best)
            break;
        const bool forward = hf.top_key() <= hb.top_key();
        Labels& me = forward ? fwd : bwd;
        Labels& other = forward ? bwd : fwd;
        DaryHeap<double>& heap = forward ? hf : hb;
        const std::uint32_t u = heap.pop();
        const double du = me.dist[u];
        for (const Arc& a : forward ? ig.out(u) : ig.in(u)) {
            const double w = ig.weight(a.edge);
            if (w < 0)
                throw NegativeWeightError(ig.edge(a.edge), w);
            const double nd = du + w;
            if (nd < me.dist[a.to]) {
                me.dist[a.to] = nd;
                me.pred_edge[a.to] = a.edge;
                me.pred_vertex[a.to] = u;
                heap.push_or_decrease(a.to, nd);
            }
            if (other.dist[a.to] != kInf && nd + other.dist[a.to] < best) {
                best = nd + other.dist[a.to];
                meet_edge = a.edge;
                meet_from = forward ? u : a.to;
                meet_to = forward ? a.to : u;
            }
        }
    }
    if (best == kInf)
        return std::nullopt;
    PathResult head = trace(ig, fwd, s, meet_from);
    // Backward labels point towards the target.
    head.edges.push_back(ig.edge(meet_edge));
    head.weight += ig.weight(meet_edge);
    for (std::uint32_t v = meet_to;; v = bwd.pred_vertex[v]) {
        head.vertices.push_back(ig.vertex(v));
        if (v == t)
            break;
        head.edges.push_back(ig.edge(bwd.pred_edge[v]));
        head.weight += ig.weight(bwd.pred_edge[v]);
    }
    return head;
}

SsspTree bellman_ford(const Graph& g, VertexId source) {
    IndexedGraph ig(g);
    const auto s = ig.index(source);
    Labels lab(ig.n());
    lab.dist[s] = 0;
    if (auto x = relax_rounds(ig, lab))
        throw_cycle(ig, lab, *x);
    return to_tree(ig, s, lab);
}

DistanceMatrix johnson_apsp(const Graph& g) {
    IndexedGraph ig(g);
    const std::size_t n = ig.n(), m = ig.m();
    std::vector<double> reweighted(m);
    for (std::size_t j = 0; j < m; ++j)
        reweighted[j] = ig.weight(j);
    std::vector<double> h(n, 0.0);
    if (has_negative_weight(ig)) {
        // Potentials from a virtual source joined to every vertex by 0 arcs.
        Labels lab(n);
        std::fill(lab.dist.begin(), lab.dist.end(), 0.0);
        if (auto x = relax_rounds(ig, lab))
            throw_cycle(ig, lab, *x);
        h = lab.dist;
        for (std::size_t j = 0; j < m; ++j)
            reweighted[j] = std::max(0.0, ig.weight(j) + h[ig.src(j)] - h[ig.dst(j)]);
    }
    std::vector<double> data(n * n, kInf);
    SearchOptions opt;
    opt.weights = &reweighted;
    for (std::uint32_t s = 0; s < n; ++s) {
        Labels lab(n);
        run_dijkstra(ig, s, lab, opt);
        for (std::size_t v = 0; v < n; ++v)
            if (lab.dist[v] != kInf)
                data[s * n + v] = lab.dist[v] - h[s] + h[v];
    }
    return DistanceMatrix(ig.vertex_index(), std::move(data));
}

DistanceMatrix floyd_warshall(const Graph& g) {
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    std::vector<double> d(n * n, kInf);
    for (std::size_t i = 0; i < n; ++i)
        d[i * n + i] = 0;
    for (std::size_t j = 0; j < ig.m(); ++j) {
        const auto u = ig.src(j), v = ig.dst(j);
        const double w = ig.weight(j);
        d[u * n + v] = std::min(d[u * n + v], w);
        if (!ig.directed())
            d[v * n + u] = std::min(d[v * n + u], w);
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double* row_k = &d[k * n];
        for (std::size_t i = 0; i < n; ++i) {
            const double dik = d[i * n + k];
            if (dik == kInf)
                continue;
            double* row_i = &d[i * n];
            for (std::size_t j = 0; j < n; ++j)
                if (dik + row_k[j] < row_i[j])
                    row_i[j] = dik + row_k[j];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (d[i * n + i] < 0)
            bellman_ford(g, ig.vertex(i));  // throws with a witness cycle through i
    return DistanceMatrix(ig.vertex_index(), std::move(d));
}

std::optional<PathResult> astar(const Graph& g, VertexId source, VertexId target,
                                const std::function<double(VertexId)>& heuristic) {
    IndexedGraph ig(g);
    const auto s = ig.index(source), t = ig.index(target);
    const std::size_t n = ig.n();
    Labels lab(n);
    std::vector<double> h(n, kInf);
    auto estimate = [&](std::uint32_t v) {
        if (h[v] == kInf)
            h[v] = heuristic(ig.vertex(v));
        return h[v];
    };
    DaryHeap<double> open(n);
    lab.dist[s] = 0;
    open.push(s, estimate(s));
    while (!open.empty()) {
        const std::uint32_t u = open.pop();
        if (u == t)
            return trace(ig, lab, s, t);
        for (const Arc& a : ig.out(u)) {
            const double w = ig.weight(a.edge);
            if (w < 0)
                throw NegativeWeightError(ig.edge(a.edge), w);
            const double nd = lab.dist[u] + w;
            if (nd < lab.dist[a.to]) {
                lab.dist[a.to] = nd;
                lab.pred_edge[a.to] = a.edge;
                lab.pred_vertex[a.to] = u;
                open.push_or_decrease(a.to, nd + estimate(a.to));
            }
        }
    }
    return std::nullopt;
}

std::vector<PathResult> yen_k_shortest(const Graph& g, VertexId source, VertexId target, std::size_t k) {
    if (k == 0)
        throw GraphError(ErrorCode::InvalidArgument, "yen_k_shortest: k must be positive");
    IndexedGraph ig(g);
    const auto s = ig.index(source), t = ig.index(target);
    const std::size_t n = ig.n();

    struct Candidate {
        double weight;
        std::vector<std::uint32_t> edges;
        std::vector<std::uint32_t> vertices;
        bool operator<(const Candidate& o) const {
            return weight != o.weight ? weight < o.weight : edges < o.edges;
        }
    };
    auto weigh = [&](const std::vector<std::uint32_t>& es) {
        double w = 0;
        for (auto e : es)
            w += ig.weight(e);
        return w;
    };
    auto shortest = [&](std::uint32_t from, const std::vector<char>& bv,
                        const std::vector<char>& be) -> std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> {
        Labels lab(n);
        SearchOptions opt;
        opt.target = t;
        opt.blocked_vertex = &bv;
        opt.blocked_edge = &be;
        run_dijkstra(ig, from, lab, opt);
        if (lab.dist[t] == kInf)
            return std::nullopt;
        std::vector<std::uint32_t> vs{t}, es;
        for (std::uint32_t v = t; v != from; v = lab.pred_vertex[v]) {
            es.push_back(lab.pred_edge[v]);
            vs.push_back(lab.pred_vertex[v]);
        }
        std::reverse(vs.begin(), vs.end());
        std::reverse(es.begin(), es.end());
        return std::pair{vs, es};
    };

    std::vector<Candidate> accepted;
    std::set<Candidate> pending;
    std::set<std::vector<std::uint32_t>> known;
    std::vector<char> blocked_v(n, 0), blocked_e(ig.m(), 0);
    if (s == t) {
        accepted.push_back({0.0, {}, {s}});
    } else if (auto first = shortest(s, blocked_v, blocked_e)) {
        accepted.push_back({weigh(first->second), first->second, first->first});
        known.insert(first->second);
    }
    while (!accepted.empty() && accepted.size() < k && s != t) {
        const Candidate prev = accepted.back();
        for (std::size_t i = 0; i + 1 < prev.vertices.size(); ++i) {
            const std::uint32_t spur = prev.vertices[i];
            std::fill(blocked_v.begin(), blocked_v.end(), 0);
            std::fill(blocked_e.begin(), blocked_e.end(), 0);
            for (const auto& p : accepted)
                if (p.edges.size() > i && std::equal(p.edges.begin(), p.edges.begin() + i, prev.edges.begin()))
                    blocked_e[p.edges[i]] = 1;
            for (std::size_t r = 0; r < i; ++r)
                blocked_v[prev.vertices[r]] = 1;
            auto spur_path = shortest(spur, blocked_v, blocked_e);
            if (!spur_path)
                continue;
            Candidate c;
            c.edges.assign(prev.edges.begin(), prev.edges.begin() + static_cast<std::ptrdiff_t>(i));
            c.edges.insert(c.edges.end(), spur_path->second.begin(), spur_path->second.end());
            c.vertices.assign(prev.vertices.begin(), prev.vertices.begin() + static_cast<std::ptrdiff_t>(i));
            c.vertices.insert(c.vertices.end(), spur_path->first.begin(), spur_path->first.end());
            c.weight = weigh(c.edges);
            if (known.insert(c.edges).second)
                pending.insert(std::move(c));
        }
        if (pending.empty())
            break;
        accepted.push_back(*pending.begin());
        pending.erase(pending.begin());
    }

    std::vector<PathResult> out;
    for (const auto& c : accepted) {
        PathResult p;
        for (auto v : c.vertices)
            p.vertices.push_back(ig.vertex(v));
        for (auto e : c.edges)
            p.edges.push_back(ig.edge(e));
        p.weight = c.weight;
        out.push_back(std::move(p));
    }
    return out;
}

GraphMeasures graph_measures(const Graph& g) {
    auto d = johnson_apsp(g);
    const std::size_t n = d.size();
    std::vector<std::optional<double>> ecc(n);
    for (std::size_t i = 0; i < n; ++i) {
        double worst = 0;
        for (std::size_t j = 0; j < n; ++j) {
            auto dij = d.at(i, j);
            worst = dij ? std::max(worst, *dij) : kInf;
            if (worst == kInf)
                break;
        }
        if (worst != kInf)
            ecc[i] = worst;
    }
    GraphMeasures out;
    double diameter = 0, radius = n ? kInf : 0;
    for (const auto& e : ecc) {
        const double v = e ? *e : kInf;
        diameter = std::max(diameter, v);
        radius = std::min(radius, v);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double v = ecc[i] ? *ecc[i] : kInf;
        if (v == radius)
            out.center.push_back(d.vertex(i));
        if (v == diameter)
            out.periphery.push_back(d.vertex(i));
    }
    if (diameter != kInf)
        out.diameter = diameter;
    if (radius != kInf)
        out.radius = radius;
    IndexedGraph ig(g);
    out.eccentricity = ig.make_map(std::move(ecc));
    return out;
}

} // namespace tessera
