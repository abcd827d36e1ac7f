#include "tessera/hard_problems.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "tessera/random.hpp"

namespace tessera {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};
using Adj = std::vector<std::vector<std::uint32_t>>;

void sort_unique(std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Sorted distinct neighbours over both directions, loops dropped.
Adj neighbor_sets(const IndexedGraph& ig) {
    Adj adj(ig.n());
    for (std::uint32_t u = 0; u < ig.n(); ++u) {
        for (const Arc& a : ig.out(u))
            if (a.to != u)
                adj[u].push_back(a.to);
        if (ig.directed())
            for (const Arc& a : ig.in(u))
                if (a.to != u)
                    adj[u].push_back(a.to);
        sort_unique(adj[u]);
    }
    return adj;
}

bool has(const std::vector<std::uint32_t>& sorted, std::uint32_t x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<std::uint32_t> intersect(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t count_common(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

// Repeatedly removes a vertex of minimum remaining degree (bucket queue).
std::vector<std::uint32_t> degeneracy_order(const Adj& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = adj[v].size();
        max_degree = std::max(max_degree, degree[v]);
    }
    std::vector<std::size_t> start(max_degree + 2, 0);
    for (auto d : degree)
        ++start[d + 1];
    for (std::size_t d = 0; d <= max_degree; ++d)
        start[d + 1] += start[d];
    std::vector<std::uint32_t> vert(n);
    std::vector<std::size_t> pos(n);
    {
        auto fill = start;
        for (std::uint32_t v = 0; v < n; ++v) {
            pos[v] = fill[degree[v]]++;
            vert[pos[v]] = v;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = vert[i];
        for (auto u : adj[v]) {
            if (degree[u] <= degree[v])
                continue;
            const auto du = degree[u];
            const auto pu = pos[u], pw = start[du];
            const auto w = vert[pw];
            if (u != w) {
                std::swap(vert[pu], vert[pw]);
                pos[u] = pw;
                pos[w] = pu;
            }
            ++start[du];
            --degree[u];
        }
    }
    return vert;
}

class BronKerbosch {
public:
    BronKerbosch(const IndexedGraph& ig, const Adj& adj, const std::function<bool(const std::vector<VertexId>&)>& visit)
        : ig_(ig), adj_(adj), visit_(visit) {}

    // Returns false once the consumer asks to stop.
    bool expand(std::vector<std::uint32_t>& r, std::vector<std::uint32_t> p, std::vector<std::uint32_t> x) {
        if (p.empty()) {
            if (!x.empty())
                return true;
            std::vector<std::uint32_t> sorted = r;
            std::sort(sorted.begin(), sorted.end());
            std::vector<VertexId> clique;
            for (auto v : sorted)
                clique.push_back(ig_.vertex(v));
            return visit_(clique);
        }
        std::uint32_t pivot = kNone;
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
            for (auto u : *set) {
                const auto c = count_common(p, adj_[u]);
                if (pivot == kNone || c > best) {
                    pivot = u;
                    best = c;
                }
            }
        std::vector<std::uint32_t> candidates;
        for (auto v : p)
            if (!has(adj_[pivot], v))
                candidates.push_back(v);
        for (auto v : candidates) {
            r.push_back(v);
            const bool go_on = expand(r, intersect(p, adj_[v]), intersect(x, adj_[v]));
            r.pop_back();
            if (!go_on)
                return false;
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
        return true;
    }

private:
    const IndexedGraph& ig_;
    const Adj& adj_;
    const std::function<bool(const std::vector<VertexId>&)>& visit_;
};

// Smallest colour absent from the coloured neighbours of each vertex, in order.
std::vector<std::size_t> greedy_in_order(const Adj& adj, const std::vector<std::uint32_t>& order) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> color(n, kNone);
    std::vector<std::size_t> mark(n + 1, kNone);
    for (auto v : order) {
        for (auto u : adj[v])
            if (color[u] != kNone)
                mark[color[u]] = v;
        std::size_t c = 0;
        while (mark[c] == v)
            ++c;
        color[v] = c;
    }
    return color;
}

std::vector<std::size_t> dsatur(const Adj& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> color(n, kNone);
    std::vector<std::set<std::size_t>> seen(n);
    // (saturation, degree) descending, then index ascending
    using Key = std::tuple<std::size_t, std::size_t, std::uint32_t>;
    auto key = [&](std::uint32_t v) { return Key{n - seen[v].size(), n - adj[v].size(), v}; };
    std::set<Key> queue;
    for (std::uint32_t v = 0; v < n; ++v)
        queue.insert(key(v));
    while (!queue.empty()) {
        const auto v = std::get<2>(*queue.begin());
        queue.erase(queue.begin());
        std::size_t c = 0;
        while (seen[v].count(c))
            ++c;
        color[v] = c;
        for (auto u : adj[v]) {
            if (color[u] != kNone || seen[u].count(c))
                continue;
            queue.erase(key(u));
            seen[u].insert(c);
            queue.insert(key(u));
        }
    }
    return color;
}

// ---- VF2 ----

struct IsoSide {
    std::shared_ptr<IndexedGraph> ig;
    Adj out, in, nbr;
    std::vector<char> loop;
    std::size_t edge_count = 0;  // distinct non-loop pairs

    explicit IsoSide(const Graph& g) : ig(std::make_shared<IndexedGraph>(g)) {
        const std::size_t n = ig->n();
        out.resize(n);
        in.resize(n);
        loop.assign(n, 0);
        for (std::uint32_t j = 0; j < ig->m(); ++j) {
            const auto a = ig->src(j), b = ig->dst(j);
            if (a == b) {
                loop[a] = 1;
                continue;
            }
            out[a].push_back(b);
            in[b].push_back(a);
            if (!ig->directed()) {
                out[b].push_back(a);
                in[a].push_back(b);
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            sort_unique(out[v]);
            sort_unique(in[v]);
            edge_count += out[v].size();
        }
        nbr = neighbor_sets(*ig);
    }
    std::size_t n() const { return ig->n(); }
};

class Vf2 {
public:
    Vf2(const IsoSide& p, const IsoSide& t, IsoMode mode, const std::function<bool(const IsoMapping&)>& visit)
        : p_(p), t_(t), mode_(mode), visit_(visit), core1_(p.n(), kNone), core2_(t.n(), kNone), term1_(p.n(), 0),
          term2_(t.n(), 0) {}

    bool match() {
        if (depth_ == p_.n()) {
            IsoMapping m;
            for (std::uint32_t a = 0; a < p_.n(); ++a)
                m.push_back({p_.ig->vertex(a), t_.ig->vertex(core1_[a])});
            return visit_(m);
        }
        std::uint32_t a = kNone;
        for (std::uint32_t v = 0; v < p_.n() && a == kNone; ++v)
            if (core1_[v] == kNone && term1_[v])
                a = v;
        const bool in_terminal = a != kNone;
        if (!in_terminal)
            for (std::uint32_t v = 0; v < p_.n() && a == kNone; ++v)
                if (core1_[v] == kNone)
                    a = v;
        for (std::uint32_t b = 0; b < t_.n(); ++b) {
            if (core2_[b] != kNone || (term2_[b] != 0) != in_terminal)
                continue;
            if (!feasible(a, b))
                continue;
            push(a, b);
            const bool go_on = match();
            pop(a, b);
            if (!go_on)
                return false;
        }
        return true;
    }

private:
    bool feasible(std::uint32_t a, std::uint32_t b) const {
        if (p_.loop[a] != t_.loop[b])
            return false;
        const bool iso = mode_ == IsoMode::Isomorphism;
        if (iso && (p_.out[a].size() != t_.out[b].size() || p_.in[a].size() != t_.in[b].size()))
            return false;
        for (auto x : p_.out[a])
            if (core1_[x] != kNone && !has(t_.out[b], core1_[x]))
                return false;
        for (auto x : p_.in[a])
            if (core1_[x] != kNone && !has(t_.in[b], core1_[x]))
                return false;
        for (auto y : t_.out[b])
            if (core2_[y] != kNone && !has(p_.out[a], core2_[y]))
                return false;
        for (auto y : t_.in[b])
            if (core2_[y] != kNone && !has(p_.in[a], core2_[y]))
                return false;
        std::size_t term_a = 0, new_a = 0, term_b = 0, new_b = 0;
        for (auto x : p_.nbr[a])
            if (core1_[x] == kNone)
                ++(term1_[x] ? term_a : new_a);
        for (auto y : t_.nbr[b])
            if (core2_[y] == kNone)
                ++(term2_[y] ? term_b : new_b);
        if (iso)
            return term_a == term_b && new_a == new_b;
        return term_a <= term_b && new_a <= new_b;
    }

    void push(std::uint32_t a, std::uint32_t b) {
        ++depth_;
        core1_[a] = b;
        core2_[b] = a;
        if (!term1_[a])
            term1_[a] = depth_;
        if (!term2_[b])
            term2_[b] = depth_;
        for (auto x : p_.nbr[a])
            if (!term1_[x])
                term1_[x] = depth_;
        for (auto y : t_.nbr[b])
            if (!term2_[y])
                term2_[y] = depth_;
    }

    void pop(std::uint32_t a, std::uint32_t b) {
        for (auto x : p_.nbr[a])
            if (term1_[x] == depth_)
                term1_[x] = 0;
        for (auto y : t_.nbr[b])
            if (term2_[y] == depth_)
                term2_[y] = 0;
        if (term1_[a] == depth_)
            term1_[a] = 0;
        if (term2_[b] == depth_)
            term2_[b] = 0;
        core1_[a] = kNone;
        core2_[b] = kNone;
        --depth_;
    }

    const IsoSide& p_;
    const IsoSide& t_;
    IsoMode mode_;
    const std::function<bool(const IsoMapping&)>& visit_;
    std::vector<std::uint32_t> core1_, core2_;
    std::vector<std::size_t> term1_, term2_;
    std::size_t depth_ = 0;
};

// ---- tours ----

struct Complete {
    std::shared_ptr<IndexedGraph> ig;
    std::vector<std::vector<double>> w;
    std::vector<std::vector<std::uint32_t>> edge;
};

Complete complete_matrix(const Graph& g) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "tsp requires an undirected graph");
    Complete c{std::make_shared<IndexedGraph>(g), {}, {}};
    const auto& ig = *c.ig;
    const std::size_t n = ig.n();
    c.w.assign(n, std::vector<double>(n, 0.0));
    c.edge.assign(n, std::vector<std::uint32_t>(n, kNone));
    for (std::uint32_t j = 0; j < ig.m(); ++j) {
        const auto a = ig.src(j), b = ig.dst(j);
        if (a == b)
            continue;
        if (c.edge[a][b] == kNone || ig.weight(j) < c.w[a][b]) {
            c.edge[a][b] = c.edge[b][a] = j;
            c.w[a][b] = c.w[b][a] = ig.weight(j);
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (c.edge[a][b] == kNone)
                throw GraphError(ErrorCode::InvalidArgument, "tsp requires a complete graph");
    return c;
}

Tour make_tour(const Complete& c, const std::vector<std::uint32_t>& order) {
    Tour t;
    if (order.empty())
        return t;
    for (auto v : order)
        t.vertices.push_back(c.ig->vertex(v));
    t.vertices.push_back(c.ig->vertex(order[0]));
    if (order.size() == 1)
        return t;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto a = order[i], b = order[(i + 1) % order.size()];
        t.edges.push_back(c.ig->edge(c.edge[a][b]));
        t.weight += c.w[a][b];
    }
    return t;
}

std::vector<std::uint32_t> held_karp(const Complete& c, std::size_t cap) {
    const std::size_t n = c.w.size();
    if (n > std::min<std::size_t>(cap, 30))
        throw GraphError(ErrorCode::InvalidArgument, "held-karp: " + std::to_string(n) +
                                                         " vertices exceed the cap of " +
                                                         std::to_string(std::min<std::size_t>(cap, 30)));
    if (n <= 2) {
        std::vector<std::uint32_t> order(n);
        for (std::uint32_t i = 0; i < n; ++i)
            order[i] = i;
        return order;
    }
    const std::size_t k = n - 1;  // vertices 1..n-1 as bits 0..k-1
    const std::size_t full = (std::size_t{1} << k) - 1;
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dp((full + 1) * k, kInf);
    std::vector<std::uint32_t> from((full + 1) * k, 0);
    for (std::size_t j = 0; j < k; ++j)
        dp[(std::size_t{1} << j) * k + j] = c.w[0][j + 1];
    for (std::size_t mask = 1; mask <= full; ++mask)
        for (std::size_t j = 0; j < k; ++j) {
            const double here = dp[mask * k + j];
            if (!(mask >> j & 1) || here == kInf)
                continue;
            for (std::size_t next = 0; next < k; ++next) {
                if (mask >> next & 1)
                    continue;
                const std::size_t m2 = mask | (std::size_t{1} << next);
                const double cand = here + c.w[j + 1][next + 1];
                if (cand < dp[m2 * k + next]) {
                    dp[m2 * k + next] = cand;
                    from[m2 * k + next] = static_cast<std::uint32_t>(j);
                }
            }
        }
    std::size_t last = 0;
    double best = kInf;
    for (std::size_t j = 0; j < k; ++j) {
        const double total = dp[full * k + j] + c.w[j + 1][0];
        if (total < best) {
            best = total;
            last = j;
        }
    }
    std::vector<std::uint32_t> rev;
    std::size_t mask = full;
    while (mask) {
        rev.push_back(static_cast<std::uint32_t>(last + 1));
        const std::size_t prev = from[mask * k + last];
        mask &= ~(std::size_t{1} << last);
        last = prev;
    }
    std::vector<std::uint32_t> order{0};
    order.insert(order.end(), rev.rbegin(), rev.rend());
    return order;
}

// Preorder walk of a Prim tree rooted at the first vertex.
std::vector<std::uint32_t> mst_walk(const Complete& c) {
    const std::size_t n = c.w.size();
    if (n == 0)
        return {};
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> key(n, kInf);
    std::vector<std::uint32_t> parent(n, kNone);
    std::vector<char> in(n, 0);
    std::vector<std::vector<std::uint32_t>> children(n);
    key[0] = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::uint32_t u = kNone;
        for (std::uint32_t v = 0; v < n; ++v)
            if (!in[v] && (u == kNone || key[v] < key[u]))
                u = v;
        in[u] = 1;
        if (parent[u] != kNone)
            children[parent[u]].push_back(u);
        for (std::uint32_t v = 0; v < n; ++v)
            if (!in[v] && c.w[u][v] < key[v]) {
                key[v] = c.w[u][v];
                parent[v] = u;
            }
    }
    std::vector<std::uint32_t> order, stack{0};
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        order.push_back(u);
        auto& ch = children[u];
        std::sort(ch.begin(), ch.end());
        for (auto it = ch.rbegin(); it != ch.rend(); ++it)
            stack.push_back(*it);
    }
    return order;
}

void two_opt(const Complete& c, std::vector<std::uint32_t>& t) {
    const std::size_t n = t.size();
    if (n < 4)
        return;
    const auto& w = c.w;
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i + 2 < n; ++i)
            for (std::size_t j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1)
                    continue;
                const auto a = t[i], b = t[i + 1], x = t[j], y = t[(j + 1) % n];
                const double delta = w[a][x] + w[b][y] - w[a][b] - w[x][y];
                if (delta < -1e-10) {
                    std::reverse(t.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                 t.begin() + static_cast<std::ptrdiff_t>(j + 1));
                    improved = true;
                }
            }
    }
}

} // namespace

void for_each_maximal_clique(const Graph& g, CliqueVariant variant,
                             const std::function<bool(const std::vector<VertexId>&)>& visit) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "maximal cliques require an undirected graph");
    IndexedGraph ig(g);
    const Adj adj = neighbor_sets(ig);
    BronKerbosch bk(ig, adj, visit);
    std::vector<std::uint32_t> r;
    if (variant == CliqueVariant::Pivot) {
        std::vector<std::uint32_t> all(ig.n());
        for (std::uint32_t v = 0; v < ig.n(); ++v)
            all[v] = v;
        bk.expand(r, all, {});
        return;
    }
    const auto order = degeneracy_order(adj);
    std::vector<std::size_t> pos(ig.n());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;
    for (auto v : order) {
        std::vector<std::uint32_t> p, x;
        for (auto u : adj[v])
            (pos[u] > pos[v] ? p : x).push_back(u);
        r.assign(1, v);
        if (!bk.expand(r, p, x))
            return;
    }
}

std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g, CliqueVariant variant) {
    std::vector<std::vector<VertexId>> out;
    for_each_maximal_clique(g, variant, [&](const std::vector<VertexId>& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

Coloring color(const Graph& g, ColoringStrategy strategy, std::uint64_t seed) {
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    for (std::size_t j = 0; j < ig.m(); ++j)
        if (ig.src(j) == ig.dst(j))
            throw GraphError(ErrorCode::InvalidArgument, "colouring: graph has a self-loop");
    const Adj adj = neighbor_sets(ig);
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t v = 0; v < n; ++v)
        order[v] = v;
    std::vector<std::size_t> colors;
    switch (strategy) {
    case ColoringStrategy::Greedy: break;
    case ColoringStrategy::RandomGreedy: {
        Rng rng(seed);
        rng.shuffle(order);
        break;
    }
    case ColoringStrategy::LargestDegreeFirst:
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return adj[a].size() > adj[b].size(); });
        break;
    case ColoringStrategy::SmallestDegreeLast:
        order = degeneracy_order(adj);
        std::reverse(order.begin(), order.end());
        break;
    case ColoringStrategy::Saturation: colors = dsatur(adj); break;
    }
    if (strategy != ColoringStrategy::Saturation)
        colors = greedy_in_order(adj, order);
    Coloring out;
    for (auto c : colors)
        out.count = std::max(out.count, c + 1);
    out.color = ig.make_map(std::move(colors));
    return out;
}

std::vector<VertexId> vertex_cover(const Graph& g, VertexCoverMethod method) {
    IndexedGraph ig(g);
    const std::size_t n = ig.n(), m = ig.m();
    std::vector<char> in_cover(n, 0);
    for (std::size_t j = 0; j < m; ++j)
        if (ig.src(j) == ig.dst(j))
            in_cover[ig.src(j)] = 1;
    if (method == VertexCoverMethod::TwoApprox) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto a = ig.src(j), b = ig.dst(j);
            if (!in_cover[a] && !in_cover[b]) {
                in_cover[a] = 1;
                in_cover[b] = 1;
            }
        }
    } else {
        std::vector<char> covered(m, 0);
        std::vector<std::size_t> degree(n, 0);
        std::size_t left = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const auto a = ig.src(j), b = ig.dst(j);
            if (in_cover[a] || in_cover[b]) {
                covered[j] = 1;
                continue;
            }
            ++degree[a];
            ++degree[b];
            ++left;
        }
        std::vector<std::vector<std::uint32_t>> incident(n);
        for (std::uint32_t j = 0; j < m; ++j)
            if (!covered[j]) {
                incident[ig.src(j)].push_back(j);
                incident[ig.dst(j)].push_back(j);
            }
        while (left > 0) {
            std::uint32_t best = 0;
            for (std::uint32_t v = 1; v < n; ++v)
                if (degree[v] > degree[best])
                    best = v;
            in_cover[best] = 1;
            for (auto j : incident[best]) {
                if (covered[j])
                    continue;
                covered[j] = 1;
                --left;
                --degree[ig.src(j)];
                --degree[ig.dst(j)];
            }
        }
    }
    std::vector<VertexId> out;
    for (std::uint32_t v = 0; v < n; ++v)
        if (in_cover[v])
            out.push_back(ig.vertex(v));
    return out;
}

void for_each_isomorphism(const Graph& g1, const Graph& g2, IsoMode mode,
                          const std::function<bool(const IsoMapping&)>& visit) {
    if (g1.is_directed() != g2.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "vf2: graphs differ in directedness");
    IsoSide p(g1), t(g2);
    if (mode == IsoMode::Isomorphism && (p.n() != t.n() || p.edge_count != t.edge_count))
        return;
    if (p.n() > t.n())
        return;
    Vf2(p, t, mode, visit).match();
}

std::vector<IsoMapping> vf2(const Graph& g1, const Graph& g2, IsoMode mode, std::size_t limit) {
    std::vector<IsoMapping> out;
    if (limit == 0)
        return out;
    for_each_isomorphism(g1, g2, mode, [&](const IsoMapping& m) {
        out.push_back(m);
        return out.size() < limit;
    });
    return out;
}

bool isomorphic(const Graph& g1, const Graph& g2) { return !vf2(g1, g2, IsoMode::Isomorphism, 1).empty(); }

RefinementVerdict color_refinement(const Graph& g1, const Graph& g2) {
    IndexedGraph a(g1), b(g2);
    if (a.directed() != b.directed() || a.n() != b.n() || a.m() != b.m())
        return RefinementVerdict::Distinguishable;
    const std::size_t n1 = a.n(), n = n1 + b.n();
    Adj out(n), in(n);
    auto load = [&](const IndexedGraph& ig, std::uint32_t offset) {
        for (std::uint32_t j = 0; j < ig.m(); ++j) {
            const auto u = ig.src(j) + offset, v = ig.dst(j) + offset;
            out[u].push_back(v);
            in[v].push_back(u);
            if (!ig.directed() && u != v) {
                out[v].push_back(u);
                in[u].push_back(v);
            }
        }
    };
    load(a, 0);
    load(b, static_cast<std::uint32_t>(n1));
    std::vector<std::size_t> colors(n, 0);
    std::size_t classes = 1;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::vector<std::size_t>> signature(n);
        for (std::size_t v = 0; v < n; ++v) {
            auto& s = signature[v];
            s.push_back(colors[v]);
            std::vector<std::size_t> o, i;
            for (auto u : out[v])
                o.push_back(colors[u]);
            std::sort(o.begin(), o.end());
            s.push_back(o.size());
            s.insert(s.end(), o.begin(), o.end());
            if (a.directed()) {
                for (auto u : in[v])
                    i.push_back(colors[u]);
                std::sort(i.begin(), i.end());
                s.push_back(i.size());
                s.insert(s.end(), i.begin(), i.end());
            }
            ids.emplace(s, 0);
        }
        std::size_t next = 0;
        for (auto& [sig, id] : ids)
            id = next++;
        for (std::size_t v = 0; v < n; ++v)
            colors[v] = ids[signature[v]];
        std::vector<std::size_t> h1(next, 0), h2(next, 0);
        for (std::size_t v = 0; v < n; ++v)
            ++(v < n1 ? h1 : h2)[colors[v]];
        if (h1 != h2)
            return RefinementVerdict::Distinguishable;
        if (next == classes)
            return RefinementVerdict::Inconclusive;
        classes = next;
    }
}

Tour tsp(const Graph& g, TspMethod method, const TspOptions& options) {
    const Complete c = complete_matrix(g);
    std::vector<std::uint32_t> order;
    switch (method) {
    case TspMethod::HeldKarp: order = held_karp(c, options.held_karp_cap); break;
    case TspMethod::MstTwoApprox: order = mst_walk(c); break;
    case TspMethod::TwoOpt:
        if (options.start_tour) {
            std::vector<char> seen(c.w.size(), 0);
            for (auto v : *options.start_tour) {
                const auto i = c.ig->index(v);
                if (seen[i])
                    throw GraphError(ErrorCode::InvalidArgument, "tsp: start tour repeats a vertex");
                seen[i] = 1;
                order.push_back(i);
            }
            if (order.size() != c.w.size())
                throw GraphError(ErrorCode::InvalidArgument, "tsp: start tour misses vertices");
        } else {
            order = mst_walk(c);
        }
        two_opt(c, order);
        break;
    }
    return make_tour(c, order);
}

Tour eulerian_circuit(const Graph& g) {
    IndexedGraph ig(g);
    const std::size_t n = ig.n(), m = ig.m();
    auto name = [&](std::uint32_t v) { return std::to_string(raw(ig.vertex(v))); };
    std::uint32_t start = kNone;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (ig.directed()) {
            if (ig.out(v).size() != ig.in(v).size())
                throw GraphError(ErrorCode::NotEulerian, "vertex " + name(v) + " has in-degree " +
                                                             std::to_string(ig.in(v).size()) + " and out-degree " +
                                                             std::to_string(ig.out(v).size()));
        } else if (ig.degree(v) % 2) {
            throw GraphError(ErrorCode::NotEulerian,
                             "vertex " + name(v) + " has odd degree " + std::to_string(ig.degree(v)));
        }
        if (start == kNone && !ig.out(v).empty())
            start = v;
    }
    Tour tour;
    if (m == 0)
        return tour;
    {
        std::vector<char> seen(n, 0);
        std::vector<std::uint32_t> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (auto arcs : {ig.out(u), ig.in(u)})
                for (const Arc& a : arcs)
                    if (!seen[a.to]) {
                        seen[a.to] = 1;
                        stack.push_back(a.to);
                    }
        }
        for (std::uint32_t v = 0; v < n; ++v)
            if (!seen[v] && !ig.out(v).empty())
                throw GraphError(ErrorCode::NotEulerian, "edges are not connected: vertex " + name(v) +
                                                             " is unreachable from vertex " + name(start));
    }
    std::vector<char> used(m, 0);
    std::vector<std::size_t> ptr(n, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{start, kNone}};
    std::vector<std::uint32_t> verts, edges;
    while (!stack.empty()) {
        const auto [v, via] = stack.back();
        const auto arcs = ig.out(v);
        while (ptr[v] < arcs.size() && used[arcs[ptr[v]].edge])
            ++ptr[v];
        if (ptr[v] < arcs.size()) {
            const Arc a = arcs[ptr[v]];
            used[a.edge] = 1;
            stack.push_back({a.to, a.edge});
        } else {
            stack.pop_back();
            verts.push_back(v);
            if (via != kNone)
                edges.push_back(via);
        }
    }
    for (auto it = verts.rbegin(); it != verts.rend(); ++it)
        tour.vertices.push_back(ig.vertex(*it));
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        tour.edges.push_back(ig.edge(*it));
        tour.weight += ig.weight(*it);
    }
    return tour;
}

} // namespace tessera
