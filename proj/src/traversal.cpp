#include "tessera/traversal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace tessera {

namespace {

constexpr std::uint32_t kUnseen = ~std::uint32_t{0};

template <typename F>
void for_each_neighbor(const IndexedGraph& ig, std::uint32_t u, F&& fn) {
    for (const Arc& a : ig.out(u))
        fn(a);
    if (ig.directed())
        for (const Arc& a : ig.in(u))
            fn(a);
}

} // namespace

std::vector<VertexId> bfs_order(const Graph& g, VertexId source) {
    IndexedGraph ig(g);
    auto s = ig.index(source);
    std::vector<char> seen(ig.n(), 0);
    std::vector<std::uint32_t> queue{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const Arc& a : ig.out(queue[head]))
            if (!seen[a.to]) {
                seen[a.to] = 1;
                queue.push_back(a.to);
            }
    std::vector<VertexId> order;
    order.reserve(queue.size());
    for (auto v : queue)
        order.push_back(ig.vertex(v));
    return order;
}

VertexMap<std::optional<std::size_t>> bfs_layers(const Graph& g, VertexId source) {
    IndexedGraph ig(g);
    auto s = ig.index(source);
    std::vector<std::optional<std::size_t>> layer(ig.n());
    std::vector<std::uint32_t> queue{s};
    layer[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto u = queue[head];
        for (const Arc& a : ig.out(u))
            if (!layer[a.to]) {
                layer[a.to] = *layer[u] + 1;
                queue.push_back(a.to);
            }
    }
    return ig.make_map(std::move(layer));
}

std::vector<VertexId> dfs_order(const Graph& g, VertexId source) {
    IndexedGraph ig(g);
    auto s = ig.index(source);
    std::vector<char> seen(ig.n(), 0);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{s, 0}};
    std::vector<VertexId> order{source};
    seen[s] = 1;
    while (!stack.empty()) {
        auto& [u, k] = stack.back();
        auto arcs = ig.out(u);
        if (k == arcs.size()) {
            stack.pop_back();
            continue;
        }
        auto w = arcs[k++].to;
        if (!seen[w]) {
            seen[w] = 1;
            order.push_back(ig.vertex(w));
            stack.emplace_back(w, 0);
        }
    }
    return order;
}

ComponentLabeling connected_components(const Graph& g) {
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    std::vector<std::size_t> comp(n, kUnseen);
    std::size_t count = 0;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t r = 0; r < n; ++r) {
        if (comp[r] != kUnseen)
            continue;
        comp[r] = count;
        queue.assign(1, r);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for_each_neighbor(ig, queue[head], [&](const Arc& a) {
                if (comp[a.to] == kUnseen) {
                    comp[a.to] = count;
                    queue.push_back(a.to);
                }
            });
        ++count;
    }
    return {ig.make_map(std::move(comp)), count};
}

ComponentLabeling strong_components(const Graph& g) {
    if (!g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "strong_components requires a directed graph");
    IndexedGraph ig(g);
    const std::size_t n = ig.n();

    // Pass 1: finishing order over out-arcs.
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> finished;
    finished.reserve(n);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    for (std::uint32_t r = 0; r < n; ++r) {
        if (seen[r])
            continue;
        seen[r] = 1;
        stack.assign(1, {r, 0});
        while (!stack.empty()) {
            auto& [u, k] = stack.back();
            auto arcs = ig.out(u);
            if (k == arcs.size()) {
                finished.push_back(u);
                stack.pop_back();
                continue;
            }
            auto w = arcs[k++].to;
            if (!seen[w]) {
                seen[w] = 1;
                stack.emplace_back(w, 0);
            }
        }
    }

    // Pass 2: reverse graph in decreasing finishing time.
    std::vector<std::size_t> comp(n, kUnseen);
    std::size_t count = 0;
    std::vector<std::uint32_t> todo;
    for (auto it = finished.rbegin(); it != finished.rend(); ++it) {
        if (comp[*it] != kUnseen)
            continue;
        comp[*it] = count;
        todo.assign(1, *it);
        while (!todo.empty()) {
            auto u = todo.back();
            todo.pop_back();
            for (const Arc& a : ig.in(u))
                if (comp[a.to] == kUnseen) {
                    comp[a.to] = count;
                    todo.push_back(a.to);
                }
        }
        ++count;
    }
    return {ig.make_map(std::move(comp)), count};
}

BlockDecomposition biconnectivity(const Graph& g) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "biconnectivity requires an undirected graph");
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    constexpr std::uint32_t kNoEdge = ~std::uint32_t{0};
    std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<std::uint32_t> edge_stack;
    BlockDecomposition out;
    std::uint32_t timer = 0;

    struct Frame {
        std::uint32_t v;
        std::uint32_t parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (disc[root] != kUnseen)
            continue;
        disc[root] = low[root] = timer++;
        std::size_t root_children = 0;
        stack.assign(1, {root, kNoEdge, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto arcs = ig.out(f.v);
            if (f.next < arcs.size()) {
                const Arc a = arcs[f.next++];
                if (a.edge == f.parent_edge)
                    continue;
                if (a.to == f.v) {
                    out.blocks.push_back({ig.edge(a.edge)});
                    continue;
                }
                if (disc[a.to] == kUnseen) {
                    edge_stack.push_back(a.edge);
                    disc[a.to] = low[a.to] = timer++;
                    if (f.v == root)
                        ++root_children;
                    stack.push_back({a.to, a.edge, 0});
                } else if (disc[a.to] < disc[f.v]) {
                    edge_stack.push_back(a.edge);
                    low[f.v] = std::min(low[f.v], disc[a.to]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty())
                break;
            const std::uint32_t p = stack.back().v;
            low[p] = std::min(low[p], low[done.v]);
            if (low[done.v] >= disc[p]) {
                if (p != root)
                    cut[p] = 1;
                std::vector<EdgeId> block;
                while (true) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(ig.edge(e));
                    if (e == done.parent_edge)
                        break;
                }
                if (block.size() == 1)
                    out.bridges.push_back(block.front());
                out.blocks.push_back(std::move(block));
            }
        }
        if (root_children > 1)
            cut[root] = 1;
    }
    for (std::uint32_t v = 0; v < n; ++v)
        if (cut[v])
            out.cutpoints.push_back(ig.vertex(v));
    return out;
}

BipartiteResult is_bipartite(const Graph& g) {
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    std::vector<int> side(n, -1);
    std::vector<std::uint32_t> parent(n, kUnseen), depth(n, 0);
    std::vector<std::uint32_t> queue;
    BipartiteResult result;
    for (std::uint32_t r = 0; r < n; ++r) {
        if (side[r] != -1)
            continue;
        side[r] = 0;
        queue.assign(1, r);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto u = queue[head];
            std::optional<std::uint32_t> clash;
            for_each_neighbor(ig, u, [&](const Arc& a) {
                if (clash)
                    return;
                if (side[a.to] == -1) {
                    side[a.to] = 1 - side[u];
                    parent[a.to] = u;
                    depth[a.to] = depth[u] + 1;
                    queue.push_back(a.to);
                } else if (side[a.to] == side[u]) {
                    clash = a.to;
                }
            });
            if (!clash)
                continue;
            // Walk both endpoints up the BFS tree to their meeting point.
            std::uint32_t x = u, y = *clash;
            std::vector<std::uint32_t> left{x}, right{y};
            while (x != y) {
                if (depth[x] >= depth[y]) {
                    x = parent[x];
                    left.push_back(x);
                } else {
                    y = parent[y];
                    right.push_back(y);
                }
            }
            right.pop_back();
            for (auto v : left)
                result.odd_cycle.push_back(ig.vertex(v));
            for (auto it = right.rbegin(); it != right.rend(); ++it)
                result.odd_cycle.push_back(ig.vertex(*it));
            result.bipartite = false;
            return result;
        }
    }
    result.bipartite = true;
    result.side = ig.make_map(std::move(side));
    return result;
}

namespace {

// Visit order of maximum cardinality search; reversing it gives a PEO on
// chordal graphs.
std::vector<std::uint32_t> mcs_visit_order(const IndexedGraph& ig) {
    const std::size_t n = ig.n();
    std::vector<std::uint32_t> weight(n, 0);
    std::vector<char> done(n, 0);
    // Buckets of vertices per weight as intrusive doubly linked lists.
    std::vector<std::uint32_t> head(n + 1, kUnseen), prev(n, kUnseen), next(n, kUnseen);
    auto insert = [&](std::uint32_t v) {
        auto w = weight[v];
        prev[v] = kUnseen;
        next[v] = head[w];
        if (head[w] != kUnseen)
            prev[head[w]] = v;
        head[w] = v;
    };
    auto erase = [&](std::uint32_t v) {
        auto w = weight[v];
        if (prev[v] != kUnseen)
            next[prev[v]] = next[v];
        else
            head[w] = next[v];
        if (next[v] != kUnseen)
            prev[next[v]] = prev[v];
    };
    for (std::uint32_t v = n; v-- > 0;)
        insert(v);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    std::size_t best = 0;
    for (std::size_t step = 0; step < n; ++step) {
        while (head[best] == kUnseen)
            --best;
        auto v = head[best];
        erase(v);
        done[v] = 1;
        order.push_back(v);
        for (const Arc& a : ig.out(v)) {
            if (done[a.to])
                continue;
            erase(a.to);
            ++weight[a.to];
            insert(a.to);
            best = std::max<std::size_t>(best, weight[a.to]);
        }
    }
    return order;
}

// LexBFS by partition refinement over one array: classes are contiguous
// ranges, the next vertex is always the first element of the first class.
std::vector<std::uint32_t> lexbfs_visit_order(const IndexedGraph& ig) {
    const std::size_t n = ig.n();
    std::vector<std::uint32_t> seq(n), pos(n), cls(n, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        seq[v] = pos[v] = v;
    struct Class {
        std::uint32_t start, end;
        std::size_t split_round;
        std::uint32_t split_into;
    };
    std::vector<Class> classes{{0, static_cast<std::uint32_t>(n), 0, 0}};
    std::vector<std::size_t> moved_round(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::size_t round = i + 1;
        const auto p = seq[i];
        ++classes[cls[p]].start;
        moved_round[p] = round;
        for (const Arc& a : ig.out(p)) {
            const auto w = a.to;
            if (pos[w] <= i || moved_round[w] == round)
                continue;
            moved_round[w] = round;
            const auto c = cls[w];
            if (classes[c].split_round != round) {
                classes[c].split_round = round;
                classes[c].split_into = static_cast<std::uint32_t>(classes.size());
                classes.push_back({classes[c].start, classes[c].start, 0, 0});
            }
            auto& from = classes[c];
            auto& into = classes[from.split_into];
            const auto slot = from.start;
            const auto other = seq[slot];
            std::swap(seq[slot], seq[pos[w]]);
            pos[other] = pos[w];
            pos[w] = slot;
            ++from.start;
            ++into.end;
            cls[w] = from.split_into;
        }
    }
    return seq;
}

std::vector<std::uint32_t> find_hole(const IndexedGraph& ig, const std::vector<std::uint32_t>& peo,
                                     const std::vector<std::uint32_t>& rank,
                                     const std::vector<std::unordered_set<std::uint32_t>>& adj) {
    const std::size_t n = ig.n();
    for (std::uint32_t v : peo) {
        std::vector<std::uint32_t> later;
        for (const Arc& a : ig.out(v))
            if (a.to != v && rank[a.to] > rank[v])
                later.push_back(a.to);
        if (later.empty())
            continue;
        auto follower = *std::min_element(later.begin(), later.end(),
                                          [&](auto x, auto y) { return rank[x] < rank[y]; });
        for (auto w : later) {
            if (w == follower || adj[follower].contains(w))
                continue;
            // Shortest follower->w path through later vertices outside N[v].
            std::vector<std::uint32_t> parent(n, kUnseen);
            std::vector<std::uint32_t> queue{follower};
            parent[follower] = follower;
            auto allowed = [&](std::uint32_t x) {
                return rank[x] > rank[v] && (x == w || (x != v && !adj[v].contains(x)));
            };
            for (std::size_t head = 0; head < queue.size() && parent[w] == kUnseen; ++head)
                for (const Arc& a : ig.out(queue[head]))
                    if (parent[a.to] == kUnseen && allowed(a.to)) {
                        parent[a.to] = queue[head];
                        queue.push_back(a.to);
                    }
            if (parent[w] == kUnseen)
                continue;
            std::vector<std::uint32_t> hole{v};
            std::vector<std::uint32_t> path;
            for (auto x = w; x != follower; x = parent[x])
                path.push_back(x);
            path.push_back(follower);
            hole.insert(hole.end(), path.rbegin(), path.rend());
            return hole;
        }
    }
    return {};
}

} // namespace

ChordalityResult chordality(const Graph& g, ChordalMethod method) {
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    auto visit = method == ChordalMethod::MaximumCardinality ? mcs_visit_order(ig) : lexbfs_visit_order(ig);
    std::vector<std::uint32_t> peo(visit.rbegin(), visit.rend());
    std::vector<std::uint32_t> rank(n);
    for (std::uint32_t i = 0; i < n; ++i)
        rank[peo[i]] = i;

    ChordalityResult result;
    std::vector<VertexId> order;
    order.reserve(n);
    for (auto v : peo)
        order.push_back(ig.vertex(v));
    if (is_perfect_elimination_order(g, order)) {
        result.chordal = true;
        result.elimination_order = std::move(order);
        return result;
    }
    std::vector<std::unordered_set<std::uint32_t>> adj(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (const Arc& a : ig.out(u))
            adj[u].insert(a.to);
    for (auto v : find_hole(ig, peo, rank, adj))
        result.hole.push_back(ig.vertex(v));
    return result;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<VertexId>& order) {
    if (order.size() != g.vertex_count())
        return false;
    std::unordered_map<VertexId, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (!rank.emplace(order[i], i).second)
            return false;
    for (VertexId v : order) {
        std::vector<VertexId> later;
        for (EdgeId e : g.edges_of(v)) {
            VertexId w = g.opposite(e, v);
            if (w != v && rank.at(w) > rank.at(v))
                later.push_back(w);
        }
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (later[i] != later[j] && !g.edge_between(later[i], later[j]))
                    return false;
    }
    return true;
}

} // namespace tessera
