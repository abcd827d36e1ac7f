#include "tessera/centrality.hpp"

#include <cmath>
#include <deque>
#include <limits>

#include "tessera/dary_heap.hpp"

namespace tessera {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ScoreMap wrap(const IndexedGraph& ig, std::vector<double> values) {
    ScoreMap out;
    out.scores = ig.make_map(std::move(values));
    return out;
}

void reject_negative(const IndexedGraph& ig) {
    for (std::size_t j = 0; j < ig.m(); ++j)
        if (ig.weight(j) < 0)
            throw NegativeWeightError(ig.edge(j), ig.weight(j));
}

// Distances from s along out-arcs, BFS for unweighted graphs.
std::vector<double> distances_from(const IndexedGraph& ig, std::uint32_t s) {
    std::vector<double> dist(ig.n(), kInf);
    dist[s] = 0;
    if (!ig.weighted()) {
        std::deque<std::uint32_t> queue{s};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (const Arc& a : ig.out(u))
                if (dist[a.to] == kInf) {
                    dist[a.to] = dist[u] + 1;
                    queue.push_back(a.to);
                }
        }
        return dist;
    }
    DaryHeap<double> heap(ig.n());
    heap.push(s, 0.0);
    while (!heap.empty()) {
        const auto u = heap.pop();
        for (const Arc& a : ig.out(u)) {
            const double nd = dist[u] + ig.weight(a.edge);
            if (nd < dist[a.to]) {
                dist[a.to] = nd;
                heap.push_or_decrease(a.to, nd);
            }
        }
    }
    return dist;
}

} // namespace

ScoreMap pagerank(const Graph& g, double damping, std::size_t max_iterations, double tolerance) {
    if (!(damping > 0 && damping < 1))
        throw GraphError(ErrorCode::InvalidArgument, "pagerank: damping must lie in (0, 1)");
    if (!(tolerance >= 0))
        throw GraphError(ErrorCode::InvalidArgument, "pagerank: tolerance must be non-negative");
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    if (n == 0) {
        auto out = wrap(ig, {});
        out.converged = true;
        return out;
    }
    const double nd = static_cast<double>(n);
    std::vector<double> share(n);  // 1 / out-degree, 0 for dangling vertices
    for (std::uint32_t u = 0; u < n; ++u)
        share[u] = ig.out(u).empty() ? 0.0 : 1.0 / static_cast<double>(ig.out(u).size());
    std::vector<double> x(n, 1.0 / nd), next(n);
    ScoreMap result;
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        double dangling = 0;
        for (std::uint32_t u = 0; u < n; ++u)
            if (share[u] == 0.0)
                dangling += x[u];
        const double base = (1.0 - damping) / nd + damping * dangling / nd;
        for (std::uint32_t v = 0; v < n; ++v) {
            double in = 0;
            for (const Arc& a : ig.in(v))
                in += x[a.to] * share[a.to];
            next[v] = base + damping * in;
        }
        double change = 0;
        for (std::uint32_t v = 0; v < n; ++v)
            change += std::abs(next[v] - x[v]);
        x.swap(next);
        result.iterations = iter + 1;
        if (change < tolerance) {
            result.converged = true;
            break;
        }
    }
    result.scores = ig.make_map(std::move(x));
    return result;
}

ScoreMap betweenness(const Graph& g) {
    IndexedGraph ig(g);
    reject_negative(ig);
    const std::size_t n = ig.n();
    std::vector<double> score(n, 0.0), sigma(n), delta(n), dist(n);
    std::vector<std::vector<std::uint32_t>> preds(n);
    std::vector<std::uint32_t> order;
    std::vector<char> settled(n);
    DaryHeap<double> heap(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        order.clear();
        for (std::uint32_t v = 0; v < n; ++v) {
            preds[v].clear();
            sigma[v] = 0;
            delta[v] = 0;
            dist[v] = kInf;
            settled[v] = 0;
        }
        sigma[s] = 1;
        dist[s] = 0;
        auto relax = [&](std::uint32_t u, const Arc& a, double w) {
            const auto v = a.to;
            if (v == u || settled[v])
                return false;
            const double d = dist[u] + w;
            if (d < dist[v]) {
                dist[v] = d;
                sigma[v] = sigma[u];
                preds[v].assign(1, u);
                return true;
            }
            if (d == dist[v]) {
                sigma[v] += sigma[u];
                preds[v].push_back(u);
            }
            return false;
        };
        if (!ig.weighted()) {
            std::deque<std::uint32_t> queue{s};
            while (!queue.empty()) {
                const auto u = queue.front();
                queue.pop_front();
                order.push_back(u);
                for (const Arc& a : ig.out(u))
                    if (relax(u, a, 1.0))
                        queue.push_back(a.to);
            }
        } else {
            heap.push(s, 0.0);
            while (!heap.empty()) {
                const auto u = heap.pop();
                settled[u] = 1;
                order.push_back(u);
                for (const Arc& a : ig.out(u))
                    if (relax(u, a, ig.weight(a.edge)))
                        heap.push_or_decrease(a.to, dist[a.to]);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto w = *it;
            for (auto v : preds[w])
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s)
                score[w] += delta[w];
        }
    }
    if (!ig.directed())
        for (auto& x : score)
            x /= 2;
    return wrap(ig, std::move(score));
}

ScoreMap closeness(const Graph& g) {
    IndexedGraph ig(g);
    reject_negative(ig);
    const std::size_t n = ig.n();
    std::vector<double> score(n, 0.0);
    if (n < 2)
        return wrap(ig, std::move(score));
    for (std::uint32_t v = 0; v < n; ++v) {
        const auto dist = distances_from(ig, v);
        double total = 0;
        for (auto d : dist)
            total += d;
        if (total < kInf && total > 0)
            score[v] = static_cast<double>(n - 1) / total;
    }
    return wrap(ig, std::move(score));
}

ScoreMap harmonic(const Graph& g) {
    IndexedGraph ig(g);
    reject_negative(ig);
    const std::size_t n = ig.n();
    std::vector<double> score(n, 0.0);
    for (std::uint32_t v = 0; v < n; ++v) {
        const auto dist = distances_from(ig, v);
        for (std::uint32_t u = 0; u < n; ++u)
            if (u != v && dist[u] < kInf)
                score[v] += 1.0 / dist[u];
    }
    return wrap(ig, std::move(score));
}

ScoreMap coreness(const Graph& g) {
    if (g.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "coreness requires an undirected graph");
    IndexedGraph ig(g);
    const std::size_t n = ig.n();
    std::vector<std::size_t> degree(n, 0);
    std::size_t max_degree = 0;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (const Arc& a : ig.out(u))
            if (a.to != u)
                ++degree[u];
        max_degree = std::max(max_degree, degree[u]);
    }
    // Vertices sorted by degree with bucket starts; peel in that order.
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
        for (const Arc& a : ig.out(v)) {
            const auto u = a.to;
            if (u == v || degree[u] <= degree[v])
                continue;
            // Move u to the front of its bucket, then shrink it by one.
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
    std::vector<double> score(n);
    for (std::uint32_t v = 0; v < n; ++v)
        score[v] = static_cast<double>(degree[v]);
    return wrap(ig, std::move(score));
}

} // namespace tessera
