#include "tessera/cycles.hpp"

#include <algorithm>
#include <deque>

#include "tessera/indexed.hpp"

namespace tessera {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

class Johnson {
public:
    explicit Johnson(const IndexedGraph& ig) : ig_(ig), n_(ig.n()), adj_(n_), radj_(n_) {
        for (std::uint32_t u = 0; u < n_; ++u) {
            for (const Arc& a : ig.out(u))
                if (a.to != u)
                    adj_[u].push_back(a.to);
            std::sort(adj_[u].begin(), adj_[u].end());
            adj_[u].erase(std::unique(adj_[u].begin(), adj_[u].end()), adj_[u].end());
            for (auto w : adj_[u])
                radj_[w].push_back(u);
        }
        blocked_.assign(n_, 0);
        in_comp_.assign(n_, 0);
        b_.resize(n_);
    }

    std::vector<std::vector<VertexId>> run() {
        for (std::uint32_t s = 0; s < n_; ++s) {
            for (const Arc& a : ig_.out(s))
                if (a.to == s) {
                    out_.push_back({ig_.vertex(s)});
                    break;
                }
            if (!component_of(s))
                continue;
            start_ = s;
            for (std::uint32_t v = s; v < n_; ++v) {
                blocked_[v] = 0;
                b_[v].clear();
            }
            circuit(s);
        }
        return std::move(out_);
    }

private:
    // Marks the strong component of s among vertices >= s; false if trivial.
    bool component_of(std::uint32_t s) {
        auto sweep = [&](const std::vector<std::vector<std::uint32_t>>& adj) {
            std::vector<char> seen(n_, 0);
            std::vector<std::uint32_t> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                const auto u = stack.back();
                stack.pop_back();
                for (auto w : adj[u])
                    if (w >= s && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            return seen;
        };
        const auto fwd = sweep(adj_), bwd = sweep(radj_);
        std::size_t size = 0;
        for (std::uint32_t v = 0; v < n_; ++v) {
            in_comp_[v] = fwd[v] && bwd[v];
            size += in_comp_[v];
        }
        return size > 1;
    }

    void unblock(std::uint32_t u) {
        blocked_[u] = 0;
        while (!b_[u].empty()) {
            const auto w = b_[u].back();
            b_[u].pop_back();
            if (blocked_[w])
                unblock(w);
        }
    }

    bool circuit(std::uint32_t v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = 1;
        for (auto w : adj_[v]) {
            if (!in_comp_[w])
                continue;
            if (w == start_) {
                std::vector<VertexId> cycle;
                for (auto x : path_)
                    cycle.push_back(ig_.vertex(x));
                out_.push_back(std::move(cycle));
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (auto w : adj_[v])
                if (in_comp_[w] && std::find(b_[w].begin(), b_[w].end(), v) == b_[w].end())
                    b_[w].push_back(v);
        }
        path_.pop_back();
        return found;
    }

    const IndexedGraph& ig_;
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> adj_, radj_, b_;
    std::vector<char> blocked_, in_comp_;
    std::vector<std::uint32_t> path_;
    std::uint32_t start_ = 0;
    std::vector<std::vector<VertexId>> out_;
};

// Spanning forest grown incrementally, with the fundamental cycle of a
// non-tree edge read off the parent pointers.
struct Forest {
    std::vector<std::uint32_t> parent, parent_edge, depth;
    explicit Forest(std::size_t n) : parent(n, kNone), parent_edge(n, kNone), depth(n, 0) {}

    std::vector<std::uint32_t> cycle(const IndexedGraph& ig, std::uint32_t j) const {
        std::uint32_t a = ig.src(j), b = ig.dst(j);
        std::vector<std::uint32_t> from_a, from_b;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                from_a.push_back(parent_edge[a]);
                a = parent[a];
            } else {
                from_b.push_back(parent_edge[b]);
                b = parent[b];
            }
        }
        std::vector<std::uint32_t> out{j};
        out.insert(out.end(), from_b.begin(), from_b.end());
        out.insert(out.end(), from_a.rbegin(), from_a.rend());
        return out;
    }
};

} // namespace

std::vector<std::vector<VertexId>> enumerate_simple_cycles(const Graph& g) {
    if (!g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "enumerate_simple_cycles requires a directed graph");
    IndexedGraph ig(g);
    return Johnson(ig).run();
}

CycleBasis cycle_basis(const Graph& g, CycleBasisMethod method) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "cycle_basis requires an undirected graph");
    IndexedGraph ig(g);
    const std::size_t n = ig.n(), m = ig.m();
    Forest f(n);
    std::vector<char> in_tree(n, 0), used(m, 0);
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t components = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (in_tree[root])
            continue;
        ++components;
        in_tree[root] = 1;
        if (method == CycleBasisMethod::FundamentalDfs) {
            std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
            while (!stack.empty()) {
                auto& [u, i] = stack.back();
                const auto arcs = ig.out(u);
                if (i == arcs.size()) {
                    stack.pop_back();
                    continue;
                }
                const Arc a = arcs[i++];
                if (used[a.edge] || in_tree[a.to])
                    continue;
                used[a.edge] = 1;
                in_tree[a.to] = 1;
                f.parent[a.to] = u;
                f.parent_edge[a.to] = a.edge;
                f.depth[a.to] = f.depth[u] + 1;
                stack.push_back({a.to, 0});
            }
        } else {
            // BFS takes from the front; Paton examines the most recent vertex.
            const bool paton = method == CycleBasisMethod::Paton;
            std::deque<std::uint32_t> pending{root};
            while (!pending.empty()) {
                std::uint32_t z;
                if (paton) {
                    z = pending.back();
                    pending.pop_back();
                } else {
                    z = pending.front();
                    pending.pop_front();
                }
                for (const Arc& a : ig.out(z)) {
                    if (used[a.edge])
                        continue;
                    if (!in_tree[a.to]) {
                        used[a.edge] = 1;
                        in_tree[a.to] = 1;
                        f.parent[a.to] = z;
                        f.parent_edge[a.to] = a.edge;
                        f.depth[a.to] = f.depth[z] + 1;
                        pending.push_back(a.to);
                    } else if (paton) {
                        used[a.edge] = 1;
                        cycles.push_back(f.cycle(ig, a.edge));
                    }
                }
            }
        }
    }
    if (method != CycleBasisMethod::Paton)
        for (std::uint32_t j = 0; j < m; ++j)
            if (!used[j])
                cycles.push_back(f.cycle(ig, j));

    CycleBasis basis;
    basis.dimension = m + components - n;
    for (const auto& c : cycles) {
        std::vector<EdgeId> ids;
        for (auto j : c)
            ids.push_back(ig.edge(j));
        basis.cycles.push_back(std::move(ids));
    }
    return basis;
}

} // namespace tessera
