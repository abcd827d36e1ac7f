#include "tessera/flow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "tessera/indexed.hpp"

namespace tessera {

namespace {

constexpr double kEps = 1e-12;
constexpr std::uint32_t kNone = ~std::uint32_t{0};

// Residual network: arc 2k and 2k+1 are the two directions of the k-th
// non-loop edge. Directed edges get a zero-capacity reverse arc; undirected
// edges get two arcs of full capacity.
struct Residual {
    std::size_t n = 0;
    std::vector<std::uint32_t> head;
    std::vector<double> cap;
    std::vector<double> original;
    std::vector<std::uint32_t> edge_of;  // edge position per arc pair
    std::vector<std::uint32_t> ptr;
    std::vector<std::uint32_t> arcs;

    explicit Residual(const IndexedGraph& ig) : n(ig.n()) {
        for (std::uint32_t j = 0; j < ig.m(); ++j) {
            const double c = ig.weight(j);
            if (c < 0 || std::isnan(c))
                throw NegativeWeightError(ig.edge(j), c);
            if (ig.src(j) == ig.dst(j))
                continue;
            head.push_back(ig.dst(j));
            head.push_back(ig.src(j));
            cap.push_back(c);
            cap.push_back(ig.directed() ? 0.0 : c);
            edge_of.push_back(j);
        }
        original = cap;
        ptr.assign(n + 1, 0);
        for (std::size_t a = 0; a < head.size(); ++a)
            ++ptr[tail(a) + 1];
        for (std::size_t u = 0; u < n; ++u)
            ptr[u + 1] += ptr[u];
        arcs.resize(head.size());
        std::vector<std::uint32_t> fill(ptr.begin(), ptr.end() - 1);
        for (std::uint32_t a = 0; a < head.size(); ++a)
            arcs[fill[tail(a)]++] = a;
    }

    std::uint32_t tail(std::size_t a) const { return head[a ^ 1]; }

    void push(std::uint32_t a, double f) {
        cap[a] -= f;
        cap[a ^ 1] += f;
    }

    // Vertices reachable from s through arcs with residual capacity.
    std::vector<char> reachable(std::uint32_t s) const {
        std::vector<char> seen(n, 0);
        std::deque<std::uint32_t> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto i = ptr[u]; i < ptr[u + 1]; ++i) {
                const auto a = arcs[i];
                if (cap[a] > kEps && !seen[head[a]]) {
                    seen[head[a]] = 1;
                    queue.push_back(head[a]);
                }
            }
        }
        return seen;
    }
};

void edmonds_karp(Residual& r, std::uint32_t s, std::uint32_t t) {
    std::vector<std::uint32_t> via(r.n);
    while (true) {
        std::fill(via.begin(), via.end(), kNone);
        std::deque<std::uint32_t> queue{s};
        bool found = false;
        while (!queue.empty() && !found) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto i = r.ptr[u]; i < r.ptr[u + 1]; ++i) {
                const auto a = r.arcs[i];
                const auto v = r.head[a];
                if (r.cap[a] <= kEps || v == s || via[v] != kNone)
                    continue;
                via[v] = a;
                if (v == t) {
                    found = true;
                    break;
                }
                queue.push_back(v);
            }
        }
        if (!found)
            return;
        double bottleneck = std::numeric_limits<double>::infinity();
        for (auto v = t; v != s; v = r.tail(via[v]))
            bottleneck = std::min(bottleneck, r.cap[via[v]]);
        for (auto v = t; v != s; v = r.tail(via[v]))
            r.push(via[v], bottleneck);
    }
}

void dinic(Residual& r, std::uint32_t s, std::uint32_t t) {
    const std::size_t n = r.n;
    std::vector<std::int64_t> level(n);
    std::vector<std::uint32_t> it(n);
    std::vector<std::uint32_t> path;
    auto build_levels = [&] {
        std::fill(level.begin(), level.end(), -1);
        level[s] = 0;
        std::deque<std::uint32_t> queue{s};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto i = r.ptr[u]; i < r.ptr[u + 1]; ++i) {
                const auto a = r.arcs[i];
                if (r.cap[a] > kEps && level[r.head[a]] < 0) {
                    level[r.head[a]] = level[u] + 1;
                    queue.push_back(r.head[a]);
                }
            }
        }
        return level[t] >= 0;
    };
    while (build_levels()) {
        for (std::size_t u = 0; u < n; ++u)
            it[u] = r.ptr[u];
        path.clear();
        std::uint32_t u = s;
        while (true) {
            if (u == t) {
                double bottleneck = std::numeric_limits<double>::infinity();
                for (auto a : path)
                    bottleneck = std::min(bottleneck, r.cap[a]);
                std::size_t cut = path.size();
                for (std::size_t i = 0; i < path.size(); ++i) {
                    r.push(path[i], bottleneck);
                    if (cut == path.size() && r.cap[path[i]] <= kEps)
                        cut = i;
                }
                path.resize(cut);
                u = path.empty() ? s : r.head[path.back()];
                continue;
            }
            bool advanced = false;
            for (; it[u] < r.ptr[u + 1]; ++it[u]) {
                const auto a = r.arcs[it[u]];
                const auto v = r.head[a];
                if (r.cap[a] > kEps && level[v] == level[u] + 1) {
                    path.push_back(a);
                    u = v;
                    advanced = true;
                    break;
                }
            }
            if (advanced)
                continue;
            level[u] = -1;
            if (u == s)
                break;
            const auto a = path.back();
            path.pop_back();
            u = r.tail(a);
            ++it[u];
        }
    }
}

// Highest-label push-relabel with the gap heuristic and periodic global
// relabeling. Runs to a full flow: excess that cannot reach t returns to s.
class PushRelabel {
public:
    PushRelabel(Residual& r, std::uint32_t s, std::uint32_t t)
        : r_(r), n_(r.n), s_(s), t_(t), height_(n_, 0), excess_(n_, 0.0), cur_(n_), count_(2 * n_ + 2, 0),
          active_(2 * n_ + 2), queued_(n_, 0) {}

    void run() {
        for (auto i = r_.ptr[s_]; i < r_.ptr[s_ + 1]; ++i) {
            const auto a = r_.arcs[i];
            const double c = r_.cap[a];
            if (c > kEps) {
                r_.push(a, c);
                excess_[r_.head[a]] += c;
                excess_[s_] -= c;
            }
        }
        global_relabel();
        std::size_t relabels = 0;
        while (true) {
            while (highest_ > 0 && active_[highest_].empty())
                --highest_;
            if (active_[highest_].empty())
                break;
            const auto u = active_[highest_].back();
            active_[highest_].pop_back();
            if (!queued_[u] || height_[u] != highest_)
                continue;
            queued_[u] = 0;
            relabels += discharge(u);
            if (relabels >= n_) {
                relabels = 0;
                global_relabel();
            }
        }
    }

private:
    void activate(std::uint32_t v) {
        if (v == s_ || v == t_ || excess_[v] <= kEps || height_[v] >= 2 * n_)
            return;
        queued_[v] = 1;
        active_[height_[v]].push_back(v);
        highest_ = std::max(highest_, height_[v]);
    }

    std::size_t discharge(std::uint32_t u) {
        std::size_t relabels = 0;
        while (excess_[u] > kEps) {
            if (cur_[u] == r_.ptr[u + 1]) {
                relabel(u);
                ++relabels;
                if (height_[u] >= 2 * n_)
                    break;
                continue;
            }
            const auto a = r_.arcs[cur_[u]];
            const auto v = r_.head[a];
            if (r_.cap[a] > kEps && height_[u] == height_[v] + 1) {
                const double f = std::min(excess_[u], r_.cap[a]);
                const bool was_idle = excess_[v] <= kEps;
                r_.push(a, f);
                excess_[u] -= f;
                excess_[v] += f;
                if (was_idle)
                    activate(v);
            } else {
                ++cur_[u];
            }
        }
        return relabels;
    }

    void relabel(std::uint32_t u) {
        const std::size_t old = height_[u];
        std::size_t best = 2 * n_;
        for (auto i = r_.ptr[u]; i < r_.ptr[u + 1]; ++i) {
            const auto a = r_.arcs[i];
            if (r_.cap[a] > kEps)
                best = std::min(best, height_[r_.head[a]] + 1);
        }
        --count_[old];
        if (count_[old] == 0 && old < n_) {
            // Gap: nothing above `old` can reach the sink any more.
            for (std::uint32_t v = 0; v < n_; ++v) {
                if (v == s_ || height_[v] <= old || height_[v] >= n_)
                    continue;
                --count_[height_[v]];
                height_[v] = n_ + 1;
                ++count_[height_[v]];
                cur_[v] = r_.ptr[v];
                if (queued_[v])
                    activate(v);
            }
            best = std::max(best, n_ + 1);
        }
        height_[u] = best;
        ++count_[best];
        cur_[u] = r_.ptr[u];
    }

    // Exact distance labels: to t where possible, otherwise n + distance to s.
    void global_relabel() {
        const std::size_t unset = 2 * n_;
        std::fill(height_.begin(), height_.end(), unset);
        auto bfs = [&](std::uint32_t root, std::size_t base) {
            height_[root] = base;
            std::deque<std::uint32_t> queue{root};
            while (!queue.empty()) {
                const auto w = queue.front();
                queue.pop_front();
                for (auto i = r_.ptr[w]; i < r_.ptr[w + 1]; ++i) {
                    const auto a = r_.arcs[i];
                    const auto v = r_.head[a];
                    if (height_[v] == unset && r_.cap[a ^ 1] > kEps) {
                        height_[v] = height_[w] + 1;
                        queue.push_back(v);
                    }
                }
            }
        };
        bfs(t_, 0);
        height_[s_] = unset;
        bfs(s_, n_);
        std::fill(count_.begin(), count_.end(), 0);
        for (auto& bucket : active_)
            bucket.clear();
        std::fill(queued_.begin(), queued_.end(), 0);
        highest_ = 0;
        for (std::uint32_t v = 0; v < n_; ++v) {
            ++count_[height_[v]];
            cur_[v] = r_.ptr[v];
            activate(v);
        }
    }

    Residual& r_;
    std::size_t n_;
    std::uint32_t s_, t_;
    std::vector<std::size_t> height_;
    std::vector<double> excess_;
    std::vector<std::uint32_t> cur_;
    std::vector<std::size_t> count_;
    std::vector<std::vector<std::uint32_t>> active_;
    std::vector<char> queued_;
    std::size_t highest_ = 0;
};

struct Solved {
    IndexedGraph ig;
    Residual r;
    std::uint32_t s, t;
};

Solved solve(const Graph& g, VertexId source, VertexId sink, FlowAlgorithm algorithm) {
    IndexedGraph ig(g);
    const auto s = ig.index(source), t = ig.index(sink);
    if (s == t)
        throw GraphError(ErrorCode::InvalidArgument, "max flow: source equals sink");
    Residual r(ig);
    switch (algorithm) {
    case FlowAlgorithm::EdmondsKarp: edmonds_karp(r, s, t); break;
    case FlowAlgorithm::Dinic: dinic(r, s, t); break;
    case FlowAlgorithm::PushRelabel: PushRelabel(r, s, t).run(); break;
    }
    return {std::move(ig), std::move(r), s, t};
}

FlowResult to_result(const Solved& x) {
    FlowResult out;
    out.source = x.ig.vertex(x.s);
    out.sink = x.ig.vertex(x.t);
    const std::size_t m = x.ig.m();
    out.edges.reserve(m);
    out.flow.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j)
        out.edges.push_back(x.ig.edge(j));
    for (std::size_t k = 0; k < x.r.edge_of.size(); ++k)
        out.flow[x.r.edge_of[k]] = x.r.original[2 * k] - x.r.cap[2 * k];
    for (std::size_t j = 0; j < m; ++j) {
        if (x.ig.src(j) == x.s)
            out.value += out.flow[j];
        if (x.ig.dst(j) == x.s)
            out.value -= out.flow[j];
    }
    return out;
}

} // namespace

double FlowResult::flow_on(EdgeId e) const {
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end())
        throw GraphError(ErrorCode::MissingEdge, "flow_on: edge not in the flow");
    return flow[static_cast<std::size_t>(it - edges.begin())];
}

FlowResult max_flow(const Graph& g, VertexId s, VertexId t, FlowAlgorithm algorithm) {
    return to_result(solve(g, s, t, algorithm));
}

CutResult min_st_cut(const Graph& g, VertexId s, VertexId t, FlowAlgorithm algorithm) {
    const auto x = solve(g, s, t, algorithm);
    const auto value = to_result(x).value;
    const auto side = x.r.reachable(x.s);
    CutResult cut;
    for (std::uint32_t v = 0; v < x.ig.n(); ++v)
        if (side[v])
            cut.source_side.push_back(x.ig.vertex(v));
    for (std::uint32_t j = 0; j < x.ig.m(); ++j) {
        const bool a = side[x.ig.src(j)], b = side[x.ig.dst(j)];
        if ((a && !b) || (!x.ig.directed() && b && !a)) {
            cut.cut_edges.push_back(x.ig.edge(j));
            cut.weight += x.ig.weight(j);
        }
    }
    if (std::abs(cut.weight - value) > 1e-9 * std::max(1.0, std::abs(value)))
        throw GraphError(ErrorCode::InvalidArgument, "min cut: cut weight disagrees with flow value");
    return cut;
}

CutResult stoer_wagner_min_cut(const Graph& g) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "stoer_wagner_min_cut requires an undirected graph");
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    if (n < 2)
        throw GraphError(ErrorCode::InvalidArgument, "stoer_wagner_min_cut needs at least two vertices");
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (std::uint32_t j = 0; j < ig.m(); ++j) {
        if (ig.weight(j) < 0)
            throw NegativeWeightError(ig.edge(j), ig.weight(j));
        if (ig.src(j) == ig.dst(j))
            continue;
        w[ig.src(j)][ig.dst(j)] += ig.weight(j);
        w[ig.dst(j)][ig.src(j)] += ig.weight(j);
    }
    std::vector<std::vector<std::uint32_t>> members(n);
    for (std::uint32_t v = 0; v < n; ++v)
        members[v] = {v};
    std::vector<std::uint32_t> alive(n);
    for (std::uint32_t v = 0; v < n; ++v)
        alive[v] = v;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> best_side;
    std::vector<double> key(n);
    std::vector<char> added(n);
    while (alive.size() > 1) {
        for (auto v : alive) {
            key[v] = 0;
            added[v] = 0;
        }
        std::uint32_t prev = kNone, last = kNone;
        for (std::size_t step = 0; step < alive.size(); ++step) {
            std::uint32_t pick = kNone;
            for (auto v : alive)
                if (!added[v] && (pick == kNone || key[v] > key[pick]))
                    pick = v;
            added[pick] = 1;
            prev = last;
            last = pick;
            for (auto v : alive)
                if (!added[v])
                    key[v] += w[pick][v];
        }
        if (key[last] < best) {
            best = key[last];
            best_side = members[last];
        }
        for (auto v : alive) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
        alive.erase(std::find(alive.begin(), alive.end(), last));
    }
    std::vector<char> in_side(n, 0);
    for (auto v : best_side)
        in_side[v] = 1;
    if (!in_side[0])
        for (auto& f : in_side)
            f = !f;
    CutResult cut;
    for (std::uint32_t v = 0; v < n; ++v)
        if (in_side[v])
            cut.source_side.push_back(ig.vertex(v));
    for (std::uint32_t j = 0; j < ig.m(); ++j)
        if (in_side[ig.src(j)] != in_side[ig.dst(j)]) {
            cut.cut_edges.push_back(ig.edge(j));
            cut.weight += ig.weight(j);
        }
    return cut;
}

GomoryHuTree gomory_hu(const Graph& g, FlowAlgorithm algorithm) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "gomory_hu requires an undirected graph");
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    GomoryHuTree tree;
    tree.vertices = ig.vertex_index()->ids();
    std::vector<std::uint32_t> parent(n, 0);
    std::vector<double> weight(n, 0.0);
    for (std::uint32_t s = 1; s < n; ++s) {
        const auto x = solve(g, ig.vertex(s), ig.vertex(parent[s]), algorithm);
        weight[s] = to_result(x).value;
        const auto side = x.r.reachable(x.s);
        for (std::uint32_t i = s + 1; i < n; ++i)
            if (side[i] && parent[i] == parent[s])
                parent[i] = s;
    }
    for (std::uint32_t s = 1; s < n; ++s)
        tree.edges.push_back({ig.vertex(s), ig.vertex(parent[s]), weight[s]});
    return tree;
}

double GomoryHuTree::min_cut(VertexId s, VertexId t) const {
    auto pos = [&](VertexId v) {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        if (it == vertices.end())
            throw GraphError(ErrorCode::MissingVertex, "gomory-hu tree: unknown vertex");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    const std::size_t n = vertices.size();
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : edges) {
        adj[pos(e.u)].push_back({pos(e.v), e.weight});
        adj[pos(e.v)].push_back({pos(e.u), e.weight});
    }
    const auto a = pos(s), b = pos(t);
    if (a == b)
        throw GraphError(ErrorCode::InvalidArgument, "gomory-hu tree: identical endpoints");
    std::vector<double> bottleneck(n, -1.0);
    bottleneck[a] = std::numeric_limits<double>::infinity();
    std::deque<std::size_t> queue{a};
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto [v, w] : adj[u])
            if (bottleneck[v] < 0) {
                bottleneck[v] = std::min(bottleneck[u], w);
                queue.push_back(v);
            }
    }
    return bottleneck[b];
}

} // namespace tessera
