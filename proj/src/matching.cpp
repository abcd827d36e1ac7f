#include "tessera/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "tessera/traversal.hpp"

namespace tessera {

namespace {

constexpr std::uint32_t kNil = ~std::uint32_t{0};

void require_undirected(const Graph& g, const char* what) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, std::string(what) + " requires an undirected graph");
}

// Builds the result from matched edge positions.
MatchingResult collect(const IndexedGraph& ig, const std::vector<std::uint32_t>& matched_edges) {
    MatchingResult r;
    std::vector<std::optional<VertexId>> mate(ig.n());
    std::vector<std::uint32_t> sorted = matched_edges;
    std::sort(sorted.begin(), sorted.end());
    for (auto j : sorted) {
        r.edges.push_back(ig.edge(j));
        r.weight += ig.weight(j);
        mate[ig.src(j)] = ig.vertex(ig.dst(j));
        mate[ig.dst(j)] = ig.vertex(ig.src(j));
    }
    r.cardinality = r.edges.size();
    r.mate = ig.make_map(std::move(mate));
    return r;
}

// First edge joining each matched pair, in incidence order.
std::vector<std::uint32_t> edges_for_mates(const IndexedGraph& ig, const std::vector<std::uint32_t>& mate) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < ig.n(); ++u) {
        if (mate[u] == kNil || mate[u] < u)
            continue;
        for (const Arc& a : ig.out(u))
            if (a.to == mate[u]) {
                out.push_back(a.edge);
                break;
            }
    }
    return out;
}

class Blossom {
public:
    explicit Blossom(const IndexedGraph& ig)
        : ig_(ig), n_(ig.n()), match_(n_, kNil), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

    std::vector<std::uint32_t> run() {
        // Greedy start, then one alternating-tree search per free vertex.
        for (std::uint32_t u = 0; u < n_; ++u) {
            if (match_[u] != kNil)
                continue;
            for (const Arc& a : ig_.out(u))
                if (a.to != u && match_[a.to] == kNil) {
                    match_[u] = a.to;
                    match_[a.to] = u;
                    break;
                }
        }
        for (std::uint32_t root = 0; root < n_; ++root) {
            if (match_[root] != kNil)
                continue;
            std::uint32_t v = find_path(root);
            while (v != kNil) {
                const std::uint32_t pv = parent_[v], ppv = match_[pv];
                match_[v] = pv;
                match_[pv] = v;
                v = ppv;
            }
        }
        return match_;
    }

private:
    std::uint32_t lca(std::uint32_t a, std::uint32_t b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == kNil)
                break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(std::uint32_t v, std::uint32_t b, std::uint32_t child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    std::uint32_t find_path(std::uint32_t root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNil);
        std::iota(base_.begin(), base_.end(), 0u);
        used_[root] = 1;
        std::deque<std::uint32_t> queue{root};
        while (!queue.empty()) {
            const std::uint32_t v = queue.front();
            queue.pop_front();
            for (const Arc& a : ig_.out(v)) {
                const std::uint32_t to = a.to;
                if (base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] != kNil && parent_[match_[to]] != kNil)) {
                    const std::uint32_t b = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (std::uint32_t i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == kNil) {
                    parent_[to] = v;
                    if (match_[to] == kNil)
                        return to;
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return kNil;
    }

    const IndexedGraph& ig_;
    std::size_t n_;
    std::vector<std::uint32_t> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

} // namespace

MatchingResult edmonds_max_cardinality(const Graph& g) {
    require_undirected(g, "edmonds_max_cardinality");
    IndexedGraph ig(g);
    auto mate = Blossom(ig).run();
    return collect(ig, edges_for_mates(ig, mate));
}

MatchingResult hopcroft_karp(const Graph& g, const std::optional<std::vector<VertexId>>& left) {
    require_undirected(g, "hopcroft_karp");
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    std::vector<char> is_left(n, 0);
    if (left) {
        for (VertexId v : *left)
            is_left[ig.index(v)] = 1;
        for (std::size_t j = 0; j < ig.m(); ++j)
            if (is_left[ig.src(j)] == is_left[ig.dst(j)])
                throw GraphError(ErrorCode::InvalidArgument, "hopcroft_karp: edge inside one side of the partition");
    } else {
        auto parts = is_bipartite(g);
        if (!parts.bipartite)
            throw GraphError(ErrorCode::InvalidArgument, "hopcroft_karp: graph has an odd cycle");
        for (std::size_t v = 0; v < n; ++v)
            is_left[v] = parts.side.values()[v] == 0;
    }

    std::vector<std::uint32_t> mate(n, kNil), mate_edge(n, kNil);
    std::vector<std::uint32_t> dist(n);
    std::vector<std::uint32_t> lefts;
    for (std::uint32_t v = 0; v < n; ++v)
        if (is_left[v])
            lefts.push_back(v);
    constexpr std::uint32_t kFar = ~std::uint32_t{0};

    auto bfs = [&]() -> std::uint32_t {
        std::deque<std::uint32_t> queue;
        for (auto u : lefts) {
            dist[u] = mate[u] == kNil ? 0 : kFar;
            if (mate[u] == kNil)
                queue.push_back(u);
        }
        std::uint32_t free_layer = kFar;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            if (dist[u] >= free_layer)
                continue;
            for (const Arc& a : ig.out(u)) {
                const auto w = mate[a.to];
                if (w == kNil) {
                    free_layer = std::min(free_layer, dist[u] + 1);
                } else if (dist[w] == kFar) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return free_layer;
    };

    std::vector<std::size_t> it(n);
    std::vector<std::uint32_t> stack;
    while (true) {
        const std::uint32_t free_layer = bfs();
        if (free_layer == kFar)
            break;
        std::fill(it.begin(), it.end(), 0);
        for (auto root : lefts) {
            if (mate[root] != kNil || dist[root] != 0)
                continue;
            stack.assign(1, root);
            while (!stack.empty()) {
                const auto x = stack.back();
                auto arcs = ig.out(x);
                if (it[x] == arcs.size()) {
                    dist[x] = kFar;
                    stack.pop_back();
                    if (!stack.empty())
                        ++it[stack.back()];
                    continue;
                }
                const Arc a = arcs[it[x]];
                const auto w = mate[a.to];
                if (w == kNil && dist[x] + 1 == free_layer) {
                    // Augment along the stack.
                    for (auto l : stack) {
                        const Arc step = ig.out(l)[it[l]];
                        mate[l] = step.to;
                        mate[step.to] = l;
                        mate_edge[l] = mate_edge[step.to] = step.edge;
                    }
                    break;
                }
                if (w != kNil && dist[w] == dist[x] + 1)
                    stack.push_back(w);
                else
                    ++it[x];
            }
        }
    }
    std::vector<std::uint32_t> matched;
    for (auto u : lefts)
        if (mate[u] != kNil)
            matched.push_back(mate_edge[u]);
    return collect(ig, matched);
}

Assignment hungarian(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    for (const auto& row : cost)
        if (row.size() != n)
            throw GraphError(ErrorCode::InvalidArgument, "hungarian: cost matrix must be square");
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // Shortest augmenting path with potentials; 1-based with a dummy column 0.
    std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    Assignment a;
    a.column_of_row.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j)
        a.column_of_row[p[j] - 1] = j - 1;
    for (std::size_t i = 0; i < n; ++i)
        a.cost += cost[i][a.column_of_row[i]];
    return a;
}

MatchingResult hungarian_min_weight_perfect(const Graph& g, const std::vector<VertexId>& left,
                                            const std::vector<VertexId>& right) {
    require_undirected(g, "hungarian_min_weight_perfect");
    if (left.size() != right.size())
        throw GraphError(ErrorCode::InvalidArgument, "hungarian: sides must have equal size");
    IndexedGraph ig(g);
    const std::size_t k = left.size();
    std::vector<std::uint32_t> row(ig.n(), kNil), col(ig.n(), kNil);
    for (std::size_t i = 0; i < k; ++i) {
        row[ig.index(left[i])] = static_cast<std::uint32_t>(i);
        col[ig.index(right[i])] = static_cast<std::uint32_t>(i);
    }
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> cost(k, std::vector<double>(k, kInf));
    std::vector<std::vector<std::uint32_t>> edge(k, std::vector<std::uint32_t>(k, kNil));
    for (std::uint32_t j = 0; j < ig.m(); ++j) {
        auto a = ig.src(j), b = ig.dst(j);
        if (row[a] == kNil)
            std::swap(a, b);
        if (row[a] == kNil || col[b] == kNil)
            continue;
        if (ig.weight(j) < cost[row[a]][col[b]]) {
            cost[row[a]][col[b]] = ig.weight(j);
            edge[row[a]][col[b]] = j;
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (edge[i][j] == kNil)
                throw GraphError(ErrorCode::InvalidArgument, "hungarian: graph is not complete bipartite");
    auto assignment = hungarian(cost);
    std::vector<std::uint32_t> matched;
    for (std::size_t i = 0; i < k; ++i)
        matched.push_back(edge[i][assignment.column_of_row[i]]);
    return collect(ig, matched);
}

MatchingResult approx_matching(const Graph& g, ApproxMatching method) {
    require_undirected(g, "approx_matching");
    IndexedGraph ig(g);
    const std::size_t n = ig.n(), m = ig.m();
    for (std::uint32_t j = 0; j < m; ++j)
        if (ig.weight(j) < 0)
            throw NegativeWeightError(ig.edge(j), ig.weight(j));

    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return ig.weight(a) > ig.weight(b); });

    std::vector<char> covered(n, 0);
    std::vector<std::uint32_t> chosen;
    if (method == ApproxMatching::PathGrowing) {
        std::vector<char> removed(n, 0);
        std::vector<std::uint32_t> runs[2];
        double totals[2] = {0, 0};
        int side = 0;
        for (std::uint32_t start = 0; start < n; ++start) {
            std::uint32_t x = start;
            while (!removed[x]) {
                removed[x] = 1;
                std::uint32_t best = kNil, next = kNil;
                for (const Arc& a : ig.out(x))
                    if (!removed[a.to] && (best == kNil || ig.weight(a.edge) > ig.weight(best))) {
                        best = a.edge;
                        next = a.to;
                    }
                if (best == kNil)
                    break;
                runs[side].push_back(best);
                totals[side] += ig.weight(best);
                side ^= 1;
                x = next;
            }
        }
        chosen = totals[1] > totals[0] ? runs[1] : runs[0];
        for (auto j : chosen)
            covered[ig.src(j)] = covered[ig.dst(j)] = 1;
    }
    for (auto j : order) {
        const auto a = ig.src(j), b = ig.dst(j);
        if (a != b && !covered[a] && !covered[b]) {
            covered[a] = covered[b] = 1;
            chosen.push_back(j);
        }
    }
    return collect(ig, chosen);
}

} // namespace tessera
