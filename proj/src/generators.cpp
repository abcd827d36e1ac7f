#include "tessera/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "tessera/random.hpp"

namespace tessera {

namespace {

constexpr GraphKind kSimple{false, false, false, false};
constexpr GraphKind kFlowKind{true, false, false, true};

[[noreturn]] void invalid(const std::string& message) {
    throw GraphError(ErrorCode::InvalidArgument, message);
}

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        invalid(std::string(what) + " must lie in [0, 1]");
}

std::uint64_t pair_key(std::uint64_t u, std::uint64_t v) {
    if (v < u)
        std::swap(u, v);
    return (u << 32) | v;
}

EdgeList simple_list(std::size_t n) {
    EdgeList list;
    list.kind = kSimple;
    list.vertex_count = n;
    return list;
}

} // namespace

// ---- deterministic families --------------------------------------------------

EdgeList complete_graph(std::size_t n) {
    EdgeList g = simple_list(n);
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = i + 1; j < n; ++j)
            g.edges.push_back({i, j});
    return g;
}

EdgeList complete_bipartite_graph(std::size_t n1, std::size_t n2) {
    EdgeList g = simple_list(n1 + n2);
    for (std::uint64_t i = 0; i < n1; ++i)
        for (std::uint64_t j = 0; j < n2; ++j)
            g.edges.push_back({i, n1 + j});
    return g;
}

EdgeList grid_graph(std::size_t rows, std::size_t cols) {
    EdgeList g = simple_list(rows * cols);
    for (std::uint64_t r = 0; r < rows; ++r) {
        for (std::uint64_t c = 0; c < cols; ++c) {
            std::uint64_t v = r * cols + c;
            if (c + 1 < cols)
                g.edges.push_back({v, v + 1});
            if (r + 1 < rows)
                g.edges.push_back({v, v + cols});
        }
    }
    return g;
}

EdgeList ring_graph(std::size_t n) {
    EdgeList g = simple_list(n);
    if (n == 2)
        g.edges.push_back({0, 1});
    if (n >= 3)
        for (std::uint64_t i = 0; i < n; ++i)
            g.edges.push_back({i, (i + 1) % n});
    return g;
}

EdgeList star_graph(std::size_t n) {
    EdgeList g = simple_list(n);
    for (std::uint64_t i = 1; i < n; ++i)
        g.edges.push_back({0, i});
    return g;
}

EdgeList wheel_graph(std::size_t n) {
    if (n < 4)
        invalid("wheel graph needs at least 4 vertices");
    EdgeList g = simple_list(n);
    const std::uint64_t rim = n - 1;
    for (std::uint64_t i = 0; i < rim; ++i)
        g.edges.push_back({1 + i, 1 + (i + 1) % rim});
    for (std::uint64_t i = 1; i < n; ++i)
        g.edges.push_back({0, i});
    return g;
}

EdgeList hypercube_graph(std::size_t dimension) {
    if (dimension > 26)
        invalid("hypercube dimension above 26 is not supported");
    const std::uint64_t n = std::uint64_t{1} << dimension;
    EdgeList g = simple_list(n);
    for (std::uint64_t v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < dimension; ++bit) {
            std::uint64_t w = v ^ (std::uint64_t{1} << bit);
            if (v < w)
                g.edges.push_back({v, w});
        }
    return g;
}

EdgeList generate_deterministic(Family family, std::size_t size, std::size_t size2) {
    switch (family) {
    case Family::Complete: return complete_graph(size);
    case Family::Grid: return grid_graph(size, size2);
    case Family::Ring: return ring_graph(size);
    case Family::Star: return star_graph(size);
    case Family::Wheel: return wheel_graph(size);
    case Family::Hypercube: return hypercube_graph(size);
    }
    invalid("unknown family");
}

// ---- uniform random models ------------------------------------------------------

EdgeList gnp(std::size_t n, double p, std::uint64_t seed, bool directed) {
    check_probability(p, "gnp: p");
    Rng rng(seed);
    EdgeList g = simple_list(n);
    g.kind.directed = directed;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = directed ? 0 : i + 1; j < n; ++j) {
            if (i == j)
                continue;
            if (rng.bernoulli(p))
                g.edges.push_back({i, j});
        }
    }
    return g;
}

EdgeList gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > pairs)
        invalid("gnm: m = " + std::to_string(m) + " exceeds C(n,2) = " + std::to_string(pairs));
    Rng rng(seed);
    EdgeList g = simple_list(n);
    g.edges.reserve(m);
    if (2 * m <= pairs) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(2 * m);
        while (g.edges.size() < m) {
            std::uint64_t u = rng.below(n);
            std::uint64_t v = rng.below(n);
            if (u == v || !seen.insert(pair_key(u, v)).second)
                continue;
            g.edges.push_back({std::min(u, v), std::max(u, v)});
        }
    } else {
        std::vector<EdgeRecord> all;
        all.reserve(pairs);
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = i + 1; j < n; ++j)
                all.push_back({i, j});
        for (std::size_t k = 0; k < m; ++k)
            std::swap(all[k], all[k + rng.below(all.size() - k)]);
        all.resize(m);
        g.edges = std::move(all);
    }
    return g;
}

EdgeList barabasi_albert(std::size_t m0, std::size_t m, std::size_t n, std::uint64_t seed) {
    if (m < 1 || m > m0 || m0 > n)
        invalid("barabasi_albert requires 1 <= m <= m0 <= n");
    Rng rng(seed);
    EdgeList g = complete_graph(m0);
    g.vertex_count = n;
    g.edges.reserve(g.edges.size() + m * (n - m0));
    // Every edge endpoint appears once here, so a uniform pick is a
    // degree-proportional pick.
    std::vector<std::uint64_t> endpoints;
    endpoints.reserve(2 * (g.edges.size() + m * (n - m0)));
    for (const auto& e : g.edges) {
        endpoints.push_back(e.source);
        endpoints.push_back(e.target);
    }
    std::vector<std::uint64_t> chosen;
    std::unordered_set<std::uint64_t> taken;
    for (std::uint64_t t = m0; t < n; ++t) {
        chosen.clear();
        taken.clear();
        while (chosen.size() < m) {
            std::uint64_t x = endpoints.empty() ? rng.below(t) : endpoints[rng.below(endpoints.size())];
            if (taken.insert(x).second)
                chosen.push_back(x);
        }
        for (std::uint64_t x : chosen) {
            g.edges.push_back({t, x});
            endpoints.push_back(t);
            endpoints.push_back(x);
        }
    }
    return g;
}

EdgeList watts_strogatz(std::size_t n, std::size_t k, double p, bool add_instead_of_rewire,
                        std::uint64_t seed) {
    if (k % 2 != 0)
        invalid("watts_strogatz: k must be even");
    if (k >= n && k > 0)
        invalid("watts_strogatz: k must be smaller than n");
    check_probability(p, "watts_strogatz: p");
    Rng rng(seed);
    EdgeList g = simple_list(n);
    std::vector<std::unordered_set<std::uint64_t>> adj(n);
    for (std::uint64_t r = 1; r <= k / 2; ++r)
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t j = (i + r) % n;
            g.edges.push_back({i, j});
            adj[i].insert(j);
            adj[j].insert(i);
        }

    // Uniform vertex that is neither u nor a neighbour of u; none if u is full.
    auto pick_free = [&](std::uint64_t u) -> std::optional<std::uint64_t> {
        if (adj[u].size() + 1 >= n)
            return std::nullopt;
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::uint64_t w = rng.below(n);
            if (w != u && !adj[u].contains(w))
                return w;
        }
        std::vector<std::uint64_t> free;
        for (std::uint64_t w = 0; w < n; ++w)
            if (w != u && !adj[u].contains(w))
                free.push_back(w);
        return free[rng.below(free.size())];
    };

    for (std::uint64_t r = 1; r <= k / 2; ++r) {
        for (std::uint64_t i = 0; i < n; ++i) {
            if (!rng.bernoulli(p))
                continue;
            auto w = pick_free(i);
            if (!w)
                continue;
            if (add_instead_of_rewire) {
                g.edges.push_back({i, *w});
            } else {
                auto& edge = g.edges[(r - 1) * n + i];
                adj[i].erase(edge.target);
                adj[edge.target].erase(i);
                edge.target = *w;
            }
            adj[i].insert(*w);
            adj[*w].insert(i);
        }
    }
    return g;
}

EdgeList kleinberg(std::size_t n, std::size_t p, std::size_t q, double r, std::uint64_t seed) {
    if (p < 1)
        invalid("kleinberg: p must be >= 1");
    if (!(r >= 0.0))
        invalid("kleinberg: r must be >= 0");
    Rng rng(seed);
    const std::size_t nodes = n * n;
    EdgeList g;
    g.kind = GraphKind{true, false, false, false};
    g.vertex_count = nodes;
    auto dist = [&](std::uint64_t u, std::uint64_t v) {
        auto ur = static_cast<std::int64_t>(u / n), uc = static_cast<std::int64_t>(u % n);
        auto vr = static_cast<std::int64_t>(v / n), vc = static_cast<std::int64_t>(v % n);
        return static_cast<std::size_t>(std::abs(ur - vr) + std::abs(uc - vc));
    };
    std::vector<std::uint64_t> far;
    std::vector<double> cumulative;
    std::unordered_set<std::uint64_t> taken;
    for (std::uint64_t u = 0; u < nodes; ++u) {
        far.clear();
        cumulative.clear();
        for (std::uint64_t v = 0; v < nodes; ++v) {
            if (v == u)
                continue;
            std::size_t d = dist(u, v);
            if (d <= p) {
                g.edges.push_back({u, v});
            } else {
                far.push_back(v);
                double w = std::pow(static_cast<double>(d), -r);
                cumulative.push_back((cumulative.empty() ? 0.0 : cumulative.back()) + w);
            }
        }
        if (far.size() <= q) {
            for (std::uint64_t v : far)
                g.edges.push_back({u, v});
            continue;
        }
        taken.clear();
        while (taken.size() < q) {
            double x = rng.unit() * cumulative.back();
            auto k = static_cast<std::size_t>(
                std::upper_bound(cumulative.begin(), cumulative.end(), x) - cumulative.begin());
            k = std::min(k, far.size() - 1);
            if (taken.insert(far[k]).second)
                g.edges.push_back({u, far[k]});
        }
    }
    return g;
}

EdgeList rmat(const RmatParams& params, std::uint64_t seed) {
    const double sum = params.a + params.b + params.c + params.d;
    if (std::abs(sum - 1.0) > 1e-12)
        invalid("rmat: a + b + c + d must equal 1");
    if (params.a < 0 || params.b < 0 || params.c < 0 || params.d < 0)
        invalid("rmat: probabilities must be non-negative");
    if (params.scale > 30)
        invalid("rmat: scale above 30 is not supported");
    Rng rng(seed);
    const std::uint64_t n = std::uint64_t{1} << params.scale;
    const std::uint64_t insertions = params.edge_factor * n;
    EdgeList g;
    g.kind = GraphKind{params.directed, !params.dedupe, !params.dedupe, false};
    g.vertex_count = n;
    g.edges.reserve(insertions);
    std::unordered_set<std::uint64_t> seen;
    const double ab = params.a + params.b;
    const double abc = ab + params.c;
    for (std::uint64_t k = 0; k < insertions; ++k) {
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        for (std::size_t level = params.scale; level-- > 0;) {
            double x = rng.unit();
            std::uint64_t bit = std::uint64_t{1} << level;
            if (x < params.a) {
            } else if (x < ab) {
                v |= bit;
            } else if (x < abc) {
                u |= bit;
            } else {
                u |= bit;
                v |= bit;
            }
        }
        if (params.dedupe) {
            if (u == v)
                continue;
            std::uint64_t key = params.directed ? (u << 32) | v : pair_key(u, v);
            if (!seen.insert(key).second)
                continue;
        }
        g.edges.push_back({u, v});
    }
    return g;
}

EdgeList random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if ((n * d) % 2 != 0)
        invalid("random_regular: n*d must be even");
    if (d >= n && d > 0)
        invalid("random_regular: d must be smaller than n");
    Rng rng(seed);
    EdgeList g = simple_list(n);
    if (d == 0)
        return g;
    // Pairing model: points are matched two at a time, rejecting pairs that
    // would form a loop or a repeated edge, restarting when stuck.
    std::unordered_set<std::uint64_t> used;
    std::vector<std::uint64_t> points;
    for (int restart = 0; restart < 1000; ++restart) {
        g.edges.clear();
        used.clear();
        points.clear();
        for (std::uint64_t v = 0; v < n; ++v)
            for (std::size_t k = 0; k < d; ++k)
                points.push_back(v);
        bool stuck = false;
        while (!points.empty() && !stuck) {
            bool paired = false;
            for (int attempt = 0; attempt < 128 && !paired; ++attempt) {
                std::size_t i = rng.below(points.size());
                std::size_t j = rng.below(points.size());
                std::uint64_t u = points[i], v = points[j];
                if (i == j || u == v || used.contains(pair_key(u, v)))
                    continue;
                used.insert(pair_key(u, v));
                g.edges.push_back({std::min(u, v), std::max(u, v)});
                if (i < j)
                    std::swap(i, j);
                points[i] = points.back();
                points.pop_back();
                points[j] = points.back();
                points.pop_back();
                paired = true;
            }
            if (paired)
                continue;
            std::vector<std::pair<std::size_t, std::size_t>> options;
            for (std::size_t i = 0; i < points.size(); ++i)
                for (std::size_t j = i + 1; j < points.size(); ++j)
                    if (points[i] != points[j] && !used.contains(pair_key(points[i], points[j])))
                        options.emplace_back(i, j);
            if (options.empty()) {
                stuck = true;
                break;
            }
            auto [i, j] = options[rng.below(options.size())];
            std::uint64_t u = points[i], v = points[j];
            used.insert(pair_key(u, v));
            g.edges.push_back({std::min(u, v), std::max(u, v)});
            points[j] = points.back();
            points.pop_back();
            points[i] = points.back();
            points.pop_back();
        }
        if (!stuck)
            return g;
    }
    invalid("random_regular: no simple " + std::to_string(d) + "-regular pairing found");
}

EdgeList random_bipartite_p(std::size_t n1, std::size_t n2, double p, std::uint64_t seed) {
    check_probability(p, "random_bipartite: p");
    Rng rng(seed);
    EdgeList g = simple_list(n1 + n2);
    for (std::uint64_t i = 0; i < n1; ++i)
        for (std::uint64_t j = 0; j < n2; ++j)
            if (rng.bernoulli(p))
                g.edges.push_back({i, n1 + j});
    return g;
}

EdgeList random_bipartite_m(std::size_t n1, std::size_t n2, std::size_t m, std::uint64_t seed) {
    if (m > n1 * n2)
        invalid("random_bipartite: m exceeds n1*n2");
    Rng rng(seed);
    EdgeList g = simple_list(n1 + n2);
    std::vector<EdgeRecord> all;
    all.reserve(n1 * n2);
    for (std::uint64_t i = 0; i < n1; ++i)
        for (std::uint64_t j = 0; j < n2; ++j)
            all.push_back({i, n1 + j});
    for (std::size_t k = 0; k < m; ++k)
        std::swap(all[k], all[k + rng.below(all.size() - k)]);
    all.resize(m);
    g.edges = std::move(all);
    return g;
}

// ---- flow instances ---------------------------------------------------------------

FlowInstance rmfgen(std::size_t a, std::size_t b, std::int64_t cmin, std::int64_t cmax,
                    std::uint64_t seed) {
    if (a < 1 || b < 1)
        invalid("rmfgen: a and b must be >= 1");
    if (cmin <= 0 || cmin > cmax)
        invalid("rmfgen: requires 0 < cmin <= cmax");
    const std::uint64_t per_layer = static_cast<std::uint64_t>(a) * a;
    const std::uint64_t n = per_layer * b;
    if (n < 2)
        invalid("rmfgen: instance needs at least two nodes");
    Rng rng(seed);
    FlowInstance inst;
    inst.graph.kind = kFlowKind;
    inst.graph.vertex_count = n;
    inst.graph.edges.reserve(4 * a * (a - 1) * b + a * (b - 1));
    const double inner = static_cast<double>(per_layer) * static_cast<double>(cmax);
    auto node = [&](std::uint64_t layer, std::uint64_t x, std::uint64_t y) {
        return layer * per_layer + x * a + y;
    };
    for (std::uint64_t layer = 0; layer < b; ++layer) {
        for (std::uint64_t x = 0; x < a; ++x)
            for (std::uint64_t y = 0; y < a; ++y) {
                std::uint64_t v = node(layer, x, y);
                if (x > 0)
                    inst.graph.edges.push_back({v, node(layer, x - 1, y), inner});
                if (x + 1 < a)
                    inst.graph.edges.push_back({v, node(layer, x + 1, y), inner});
                if (y > 0)
                    inst.graph.edges.push_back({v, node(layer, x, y - 1), inner});
                if (y + 1 < a)
                    inst.graph.edges.push_back({v, node(layer, x, y + 1), inner});
            }
        if (layer + 1 == b)
            break;
        for (std::uint64_t x = 0; x < a; ++x) {
            std::uint64_t from = node(layer, x, rng.below(a));
            std::uint64_t to = (layer + 1) * per_layer + rng.below(per_layer);
            inst.graph.edges.push_back({from, to, static_cast<double>(rng.between(cmin, cmax))});
        }
    }
    inst.source = 0;
    inst.sink = n - 1;
    return inst;
}

FlowInstance rmfgen_shaped(RmfgenShape shape, std::size_t size, std::int64_t cmin,
                           std::int64_t cmax, std::uint64_t seed) {
    switch (shape) {
    case RmfgenShape::Long: return rmfgen(size, size * size, cmin, cmax, seed);
    case RmfgenShape::Flat: return rmfgen(size * size, size, cmin, cmax, seed);
    case RmfgenShape::Wide: return rmfgen(size, size, cmin, cmax, seed);
    }
    invalid("unknown rmfgen shape");
}

FlowInstance washington_level(std::size_t rows, std::size_t cols, std::uint64_t seed,
                              std::int64_t cmax) {
    if (rows < 1 || cols < 1)
        invalid("washington: rows and cols must be >= 1");
    if (cmax < 1)
        invalid("washington: cmax must be >= 1");
    Rng rng(seed);
    FlowInstance inst;
    const std::uint64_t grid = static_cast<std::uint64_t>(rows) * cols;
    inst.graph.kind = kFlowKind;
    inst.graph.vertex_count = grid + 2;
    inst.source = 0;
    inst.sink = grid + 1;
    auto node = [&](std::uint64_t r, std::uint64_t c) { return 1 + c * rows + r; };
    const double terminal = 3.0 * static_cast<double>(cmax);
    for (std::uint64_t r = 0; r < rows; ++r)
        inst.graph.edges.push_back({inst.source, node(r, 0), terminal});
    const std::size_t fan = std::min<std::size_t>(3, rows);
    std::vector<std::uint64_t> order(rows);
    for (std::uint64_t c = 0; c + 1 < cols; ++c)
        for (std::uint64_t r = 0; r < rows; ++r) {
            for (std::uint64_t k = 0; k < rows; ++k)
                order[k] = k;
            for (std::size_t k = 0; k < fan; ++k) {
                std::swap(order[k], order[k + rng.below(rows - k)]);
                inst.graph.edges.push_back(
                    {node(r, c), node(order[k], c + 1), static_cast<double>(rng.between(1, cmax))});
            }
        }
    for (std::uint64_t r = 0; r < rows; ++r)
        inst.graph.edges.push_back({node(r, cols - 1), inst.sink, terminal});
    return inst;
}

FlowInstance washington_shaped(WashingtonShape shape, std::size_t size, std::uint64_t seed,
                               std::int64_t cmax) {
    if (shape == WashingtonShape::Wide)
        return washington_level(64, size, seed, cmax);
    return washington_level(size, 64, seed, cmax);
}

// ---- tagged dispatch -----------------------------------------------------------------

GeneratedGraph generate(const GeneratorParams& params) {
    const std::uint64_t seed = params.seed;
    return std::visit(
        [&](const auto& m) -> GeneratedGraph {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, model::Deterministic>) {
                return {generate_deterministic(m.family, m.size, m.size2), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::Gnp>) {
                return {gnp(m.n, m.p, seed, m.directed), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::Gnm>) {
                return {gnm(m.n, m.m, seed), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::BarabasiAlbert>) {
                return {barabasi_albert(m.m0, m.m, m.n, seed), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::WattsStrogatz>) {
                return {watts_strogatz(m.n, m.k, m.p, m.add_instead_of_rewire, seed), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::Kleinberg>) {
                return {kleinberg(m.n, m.p, m.q, m.r, seed), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::Rmat>) {
                return {rmat(m.params, seed), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::RandomRegular>) {
                return {random_regular(m.n, m.d, seed), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::RandomBipartite>) {
                if (m.p.has_value() == m.m.has_value())
                    invalid("random_bipartite: give exactly one of p or m");
                if (m.p)
                    return {random_bipartite_p(m.n1, m.n2, *m.p, seed), std::nullopt};
                return {random_bipartite_m(m.n1, m.n2, *m.m, seed), std::nullopt};
            } else if constexpr (std::is_same_v<T, model::Rmfgen>) {
                auto inst = rmfgen(m.a, m.b, m.cmin, m.cmax, seed);
                return {std::move(inst.graph), std::pair{inst.source, inst.sink}};
            } else {
                auto inst = washington_level(m.rows, m.cols, seed, m.cmax);
                return {std::move(inst.graph), std::pair{inst.source, inst.sink}};
            }
        },
        params.model);
}

} // namespace tessera
