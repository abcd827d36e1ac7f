#include "tessera/lca.hpp"

#include <bit>
#include <deque>

#include "tessera/spanning.hpp"

namespace tessera {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

} // namespace

LcaIndex::LcaIndex(const Graph& tree, VertexId root, LcaMethod method)
    : method_(method), ig_(std::make_shared<IndexedGraph>(tree)) {
    const auto& ig = *ig_;
    const std::size_t n = ig.n();
    root_ = ig.index(root);
    if (ig.m() + 1 != n)
        throw GraphError(ErrorCode::NotATree, "lca: graph has " + std::to_string(ig.m()) + " edges for " +
                                                  std::to_string(n) + " vertices");
    parent_.assign(n, kNone);
    depth_.assign(n, 0);
    children_.resize(n);
    std::vector<char> seen(n, 0);
    std::deque<std::uint32_t> queue{root_};
    seen[root_] = 1;
    parent_[root_] = root_;
    std::size_t reached = 1;
    auto visit = [&](std::uint32_t u, std::uint32_t w) {
        if (seen[w])
            return;
        seen[w] = 1;
        ++reached;
        parent_[w] = u;
        depth_[w] = depth_[u] + 1;
        children_[u].push_back(w);
        queue.push_back(w);
    };
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (const Arc& a : ig.out(u))
            visit(u, a.to);
        if (ig.directed())
            for (const Arc& a : ig.in(u))
                visit(u, a.to);
    }
    if (reached != n)
        throw GraphError(ErrorCode::NotATree, "lca: graph is not connected");

    if (method == LcaMethod::BinaryLifting) {
        const std::size_t levels = std::max<std::size_t>(1, std::bit_width(n));
        up_.assign(levels, parent_);
        for (std::size_t j = 1; j < levels; ++j)
            for (std::uint32_t v = 0; v < n; ++v)
                up_[j][v] = up_[j - 1][up_[j - 1][v]];
    } else if (method == LcaMethod::EulerRmq) {
        first_.assign(n, 0);
        std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root_, 0}};
        first_[root_] = 0;
        euler_.push_back(root_);
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i == children_[v].size()) {
                stack.pop_back();
                if (!stack.empty())
                    euler_.push_back(stack.back().first);
                continue;
            }
            const auto c = children_[v][i++];
            first_[c] = static_cast<std::uint32_t>(euler_.size());
            euler_.push_back(c);
            stack.push_back({c, 0});
        }
        const std::size_t len = euler_.size();
        sparse_.emplace_back(len);
        for (std::uint32_t i = 0; i < len; ++i)
            sparse_[0][i] = i;
        for (std::size_t k = 1; (std::size_t{1} << k) <= len; ++k) {
            const std::size_t half = std::size_t{1} << (k - 1);
            std::vector<std::uint32_t> row(len - (std::size_t{1} << k) + 1);
            for (std::size_t i = 0; i < row.size(); ++i) {
                const auto a = sparse_[k - 1][i], b = sparse_[k - 1][i + half];
                row[i] = tour_depth(b) < tour_depth(a) ? b : a;
            }
            sparse_.push_back(std::move(row));
        }
    }
}

std::uint32_t LcaIndex::locate(VertexId v) const { return ig_->index(v); }

VertexId LcaIndex::query(VertexId u, VertexId v) const {
    std::uint32_t a = locate(u), b = locate(v);
    switch (method_) {
    case LcaMethod::Naive:
        while (depth_[a] > depth_[b])
            a = parent_[a];
        while (depth_[b] > depth_[a])
            b = parent_[b];
        while (a != b) {
            a = parent_[a];
            b = parent_[b];
        }
        return ig_->vertex(a);
    case LcaMethod::BinaryLifting: {
        if (depth_[a] < depth_[b])
            std::swap(a, b);
        for (std::uint32_t diff = depth_[a] - depth_[b], j = 0; diff; diff >>= 1, ++j)
            if (diff & 1u)
                a = up_[j][a];
        if (a == b)
            return ig_->vertex(a);
        for (std::size_t j = up_.size(); j-- > 0;)
            if (up_[j][a] != up_[j][b]) {
                a = up_[j][a];
                b = up_[j][b];
            }
        return ig_->vertex(parent_[a]);
    }
    case LcaMethod::EulerRmq: {
        std::size_t l = first_[a], r = first_[b];
        if (l > r)
            std::swap(l, r);
        const std::size_t k = std::bit_width(r - l + 1) - 1;
        const auto x = sparse_[k][l], y = sparse_[k][r + 1 - (std::size_t{1} << k)];
        return ig_->vertex(euler_[tour_depth(y) < tour_depth(x) ? y : x]);
    }
    case LcaMethod::TarjanOffline:
        return ig_->vertex(tarjan({{a, b}})[0]);
    }
    return ig_->vertex(a);
}

std::vector<std::uint32_t> LcaIndex::tarjan(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& queries) const {
    const std::size_t n = ig_->n();
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> at(n);
    for (std::size_t i = 0; i < queries.size(); ++i) {
        at[queries[i].first].push_back({i, queries[i].second});
        at[queries[i].second].push_back({i, queries[i].first});
    }
    std::vector<std::uint32_t> answer(queries.size(), kNone), ancestor(n);
    std::vector<char> done(n, 0);
    UnionFind uf(n);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root_, 0}};
    ancestor[root_] = root_;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < children_[v].size()) {
            const auto c = children_[v][i++];
            ancestor[c] = c;
            stack.push_back({c, 0});
            continue;
        }
        const auto u = v;
        done[u] = 1;
        for (auto [q, other] : at[u])
            if (done[other])
                answer[q] = ancestor[uf.find(other)];
        stack.pop_back();
        if (!stack.empty()) {
            const auto p = stack.back().first;
            uf.unite(p, u);
            ancestor[uf.find(p)] = p;
        }
    }
    return answer;
}

std::vector<VertexId> lca_batch_tarjan(const Graph& tree, VertexId root,
                                       const std::vector<std::pair<VertexId, VertexId>>& queries) {
    LcaIndex index(tree, root, LcaMethod::TarjanOffline);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> q;
    q.reserve(queries.size());
    for (auto [u, v] : queries)
        q.push_back({index.locate(u), index.locate(v)});
    std::vector<VertexId> out;
    out.reserve(q.size());
    for (auto a : index.tarjan(q))
        out.push_back(index.ig_->vertex(a));
    return out;
}

std::vector<VertexId> dag_lca(const Graph& dag, VertexId u, VertexId v) {
    if (!dag.is_directed())
        throw GraphError(ErrorCode::InvalidArgument, "dag_lca requires a directed graph");
    IndexedGraph ig(dag);
    const std::size_t n = ig.n();
    const auto a = ig.index(u), b = ig.index(v);
    std::vector<std::size_t> indeg(n, 0), depth(n, 0);
    for (std::size_t j = 0; j < ig.m(); ++j)
        ++indeg[ig.dst(j)];
    std::deque<std::uint32_t> queue;
    for (std::uint32_t x = 0; x < n; ++x)
        if (indeg[x] == 0)
            queue.push_back(x);
    std::size_t ordered = 0;
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        ++ordered;
        for (const Arc& arc : ig.out(x)) {
            depth[arc.to] = std::max(depth[arc.to], depth[x] + 1);
            if (--indeg[arc.to] == 0)
                queue.push_back(arc.to);
        }
    }
    if (ordered != n)
        throw GraphError(ErrorCode::InvalidArgument, "dag_lca: graph has a directed cycle");
    auto ancestors = [&](std::uint32_t s) {
        std::vector<char> seen(n, 0);
        std::vector<std::uint32_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (const Arc& arc : ig.in(x))
                if (!seen[arc.to]) {
                    seen[arc.to] = 1;
                    stack.push_back(arc.to);
                }
        }
        return seen;
    };
    const auto from_a = ancestors(a), from_b = ancestors(b);
    std::size_t best = 0;
    bool any = false;
    for (std::uint32_t x = 0; x < n; ++x)
        if (from_a[x] && from_b[x] && (!any || depth[x] > best)) {
            best = depth[x];
            any = true;
        }
    std::vector<VertexId> out;
    for (std::uint32_t x = 0; x < n; ++x)
        if (from_a[x] && from_b[x] && depth[x] == best)
            out.push_back(ig.vertex(x));
    return out;
}

} // namespace tessera
