#include "tessera/adjacency_store.hpp"

#include <algorithm>
#include <unordered_set>

namespace tessera {

AdjacencyStore::AdjacencyStore(GraphKind kind, AdjacencyOptions options)
    : kind_(kind), options_(options) {}

const AdjacencyStore::EdgeRecordData& AdjacencyStore::edge(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw GraphError(ErrorCode::MissingEdge, "edge " + std::to_string(raw(e)) + " not in graph");
    return it->second;
}

const AdjacencyStore::VertexRecord& AdjacencyStore::vertex(VertexId v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end())
        throw GraphError(ErrorCode::MissingVertex,
                         "vertex " + std::to_string(raw(v)) + " not in graph");
    return it->second;
}

AdjacencyStore::VertexRecord& AdjacencyStore::vertex(VertexId v) {
    return const_cast<VertexRecord&>(std::as_const(*this).vertex(v));
}

std::vector<VertexId> AdjacencyStore::vertices() const {
    std::vector<VertexId> result;
    result.reserve(vertices_.size());
    for (std::uint64_t cur = vertex_order_.head; cur != kNone;) {
        result.push_back(vid(cur));
        cur = vertices_.find(vid(cur))->second.order.next;
    }
    return result;
}

std::vector<EdgeId> AdjacencyStore::edges() const {
    std::vector<EdgeId> result;
    result.reserve(edges_.size());
    for (std::uint64_t cur = edge_order_.head; cur != kNone;) {
        result.push_back(eid(cur));
        cur = edges_.find(eid(cur))->second.order.next;
    }
    return result;
}

double AdjacencyStore::weight(EdgeId e) const {
    const auto& rec = edge(e);
    return kind_.weighted ? rec.weight : kDefaultEdgeWeight;
}

int AdjacencyStore::side_at(const EdgeRecordData& rec, VertexId v) const {
    return rec.source == v ? 0 : 1;
}

template <typename F>
void AdjacencyStore::walk(const ListHead& list, VertexId owner, bool directed_in, F&& fn) const {
    for (std::uint64_t cur = list.head; cur != kNone;) {
        const auto& rec = edges_.find(eid(cur))->second;
        fn(eid(cur));
        int side = kind_.directed ? (directed_in ? 1 : 0) : side_at(rec, owner);
        cur = rec.slot[side].next;
    }
}

std::vector<EdgeId> AdjacencyStore::out_edges(VertexId v) const {
    const auto& rec = vertex(v);
    std::vector<EdgeId> result;
    result.reserve(rec.out_count);
    walk(rec.out, v, false, [&](EdgeId e) { result.push_back(e); });
    return result;
}

std::vector<EdgeId> AdjacencyStore::in_edges(VertexId v) const {
    if (!kind_.directed)
        return out_edges(v);
    const auto& rec = vertex(v);
    std::vector<EdgeId> result;
    result.reserve(rec.in_count);
    walk(rec.in, v, true, [&](EdgeId e) { result.push_back(e); });
    return result;
}

std::vector<EdgeId> AdjacencyStore::edges_of(VertexId v) const {
    if (!kind_.directed)
        return out_edges(v);
    const auto& rec = vertex(v);
    std::vector<EdgeId> result;
    result.reserve(rec.out_count + rec.in_count);
    walk(rec.out, v, false, [&](EdgeId e) { result.push_back(e); });
    walk(rec.in, v, true, [&](EdgeId e) {
        const auto& er = edges_.find(e)->second;
        if (er.source != er.target)
            result.push_back(e);
    });
    return result;
}

std::size_t AdjacencyStore::out_degree(VertexId v) const {
    const auto& rec = vertex(v);
    return kind_.directed ? rec.out_count : rec.out_count + rec.loop_count;
}

std::size_t AdjacencyStore::in_degree(VertexId v) const {
    const auto& rec = vertex(v);
    return kind_.directed ? rec.in_count : rec.out_count + rec.loop_count;
}

std::size_t AdjacencyStore::degree(VertexId v) const {
    const auto& rec = vertex(v);
    return kind_.directed ? rec.out_count + rec.in_count : rec.out_count + rec.loop_count;
}

std::pair<VertexId, VertexId> AdjacencyStore::index_key(VertexId u, VertexId v) const {
    if (!kind_.directed && raw(v) < raw(u))
        std::swap(u, v);
    return {u, v};
}

std::optional<EdgeId> AdjacencyStore::edge_between(VertexId u, VertexId v) const {
    const auto& ru = vertex(u);
    const auto& rv = vertex(v);
    if (options_.endpoint_index) {
        auto it = index_.find(index_key(u, v));
        if (it == index_.end())
            return std::nullopt;
        return it->second.front();
    }
    std::optional<EdgeId> found;
    if (kind_.directed) {
        // Scan the shorter of u's out-list and v's in-list; both are in
        // insertion order so the first hit is the earliest edge.
        if (ru.out_count <= rv.in_count) {
            for (std::uint64_t cur = ru.out.head; cur != kNone && !found;) {
                const auto& rec = edges_.find(eid(cur))->second;
                if (rec.target == v)
                    found = eid(cur);
                cur = rec.slot[0].next;
            }
        } else {
            for (std::uint64_t cur = rv.in.head; cur != kNone && !found;) {
                const auto& rec = edges_.find(eid(cur))->second;
                if (rec.source == u)
                    found = eid(cur);
                cur = rec.slot[1].next;
            }
        }
        return found;
    }
    VertexId owner = ru.out_count <= rv.out_count ? u : v;
    VertexId other = owner == u ? v : u;
    const auto& list = owner == u ? ru.out : rv.out;
    for (std::uint64_t cur = list.head; cur != kNone && !found;) {
        const auto& rec = edges_.find(eid(cur))->second;
        VertexId opp = rec.source == owner ? rec.target : rec.source;
        if (opp == other)
            found = eid(cur);
        cur = rec.slot[side_at(rec, owner)].next;
    }
    return found;
}

std::vector<EdgeId> AdjacencyStore::all_edges_between(VertexId u, VertexId v) const {
    vertex(u);
    vertex(v);
    if (options_.endpoint_index) {
        auto it = index_.find(index_key(u, v));
        if (it == index_.end())
            return {};
        return it->second;
    }
    return Graph::all_edges_between(u, v);
}

AddVertexResult AdjacencyStore::add_vertex(VertexId v) {
    auto [it, inserted] = vertices_.try_emplace(v);
    if (!inserted)
        return {v, false};
    it->second.order.prev = vertex_order_.tail;
    if (vertex_order_.tail != kNone)
        vertices_.find(vid(vertex_order_.tail))->second.order.next = raw(v);
    else
        vertex_order_.head = raw(v);
    vertex_order_.tail = raw(v);
    return {v, true};
}

void AdjacencyStore::link(ListHead& list, EdgeId e, int side) {
    auto& rec = edges_.find(e)->second;
    rec.slot[side].prev = list.tail;
    rec.slot[side].next = kNone;
    if (list.tail != kNone) {
        auto& tail = edges_.find(eid(list.tail))->second;
        // The tail edge may sit in this list through either of its slots.
        int tail_side = side;
        if (!kind_.directed) {
            VertexId owner = side == 0 ? rec.source : rec.target;
            tail_side = side_at(tail, owner);
        }
        tail.slot[tail_side].next = raw(e);
    } else {
        list.head = raw(e);
    }
    list.tail = raw(e);
}

void AdjacencyStore::unlink(ListHead& list, EdgeId e, int side) {
    auto& rec = edges_.find(e)->second;
    VertexId owner = side == 0 ? rec.source : rec.target;
    auto slot_of = [&](const EdgeRecordData& other) {
        return kind_.directed ? side : side_at(other, owner);
    };
    if (rec.slot[side].prev != kNone) {
        auto& prev = edges_.find(eid(rec.slot[side].prev))->second;
        prev.slot[slot_of(prev)].next = rec.slot[side].next;
    } else {
        list.head = rec.slot[side].next;
    }
    if (rec.slot[side].next != kNone) {
        auto& next = edges_.find(eid(rec.slot[side].next))->second;
        next.slot[slot_of(next)].prev = rec.slot[side].prev;
    } else {
        list.tail = rec.slot[side].prev;
    }
}

EdgeId AdjacencyStore::add_edge(VertexId u, VertexId v) {
    return add_edge(u, v, kDefaultEdgeWeight);
}

EdgeId AdjacencyStore::add_edge(VertexId u, VertexId v, double w) {
    vertex(u);
    vertex(v);
    if (u == v && !kind_.allows_self_loops)
        throw GraphError(ErrorCode::CapabilityViolation,
                         kind_name(kind_) + " does not allow self-loops");
    if (!kind_.allows_multiple_edges && edge_between(u, v))
        throw GraphError(ErrorCode::CapabilityViolation,
                         kind_name(kind_) + " does not allow multiple edges");
    if (!kind_.weighted && w != kDefaultEdgeWeight)
        throw GraphError(ErrorCode::CapabilityViolation, "weight supplied for an unweighted graph");
    return insert_edge(u, v, w);
}

void AdjacencyStore::add_edges(std::span<const EdgeRecord> batch) {
    std::unordered_set<std::pair<VertexId, VertexId>, PairHash> seen;
    if (!kind_.allows_multiple_edges) {
        seen.reserve(edges_.size() + batch.size());
        for (const auto& [e, rec] : edges_)
            seen.insert(index_key(rec.source, rec.target));
    }
    for (const auto& rec : batch) {
        VertexId u = vid(rec.source), v = vid(rec.target);
        vertex(u);
        vertex(v);
        if (u == v && !kind_.allows_self_loops)
            throw GraphError(ErrorCode::CapabilityViolation,
                             kind_name(kind_) + " does not allow self-loops");
        if (!kind_.allows_multiple_edges && !seen.insert(index_key(u, v)).second)
            throw GraphError(ErrorCode::CapabilityViolation,
                             kind_name(kind_) + " does not allow multiple edges");
        if (!kind_.weighted && rec.weight != kDefaultEdgeWeight)
            throw GraphError(ErrorCode::CapabilityViolation, "weight supplied for an unweighted graph");
    }
    for (const auto& rec : batch)
        insert_edge(vid(rec.source), vid(rec.target), rec.weight);
}

EdgeId AdjacencyStore::insert_edge(VertexId u, VertexId v, double w) {
    EdgeId e = eid(next_edge_++);
    auto& rec = edges_[e];
    rec.source = u;
    rec.target = v;
    rec.weight = w;
    rec.order.prev = edge_order_.tail;
    if (edge_order_.tail != kNone)
        edges_.find(eid(edge_order_.tail))->second.order.next = raw(e);
    else
        edge_order_.head = raw(e);
    edge_order_.tail = raw(e);

    auto& ru = vertices_.find(u)->second;
    link(ru.out, e, 0);
    ++ru.out_count;
    if (kind_.directed) {
        auto& rv = vertices_.find(v)->second;
        link(rv.in, e, 1);
        ++rv.in_count;
    } else if (u == v) {
        ++ru.loop_count;
    } else {
        auto& rv = vertices_.find(v)->second;
        link(rv.out, e, 1);
        ++rv.out_count;
    }
    if (options_.endpoint_index)
        index_[index_key(u, v)].push_back(e);
    return e;
}

bool AdjacencyStore::remove_edge(EdgeId e) {
    auto it = edges_.find(e);
    if (it == edges_.end())
        return false;
    VertexId u = it->second.source;
    VertexId v = it->second.target;
    auto& ru = vertices_.find(u)->second;
    unlink(ru.out, e, 0);
    --ru.out_count;
    if (kind_.directed) {
        auto& rv = vertices_.find(v)->second;
        unlink(rv.in, e, 1);
        --rv.in_count;
    } else if (u == v) {
        --ru.loop_count;
    } else {
        auto& rv = vertices_.find(v)->second;
        unlink(rv.out, e, 1);
        --rv.out_count;
    }
    if (options_.endpoint_index) {
        auto key = index_key(u, v);
        auto& bucket = index_[key];
        bucket.erase(std::find(bucket.begin(), bucket.end(), e));
        if (bucket.empty())
            index_.erase(key);
    }

    auto& rec = it->second;
    if (rec.order.prev != kNone)
        edges_.find(eid(rec.order.prev))->second.order.next = rec.order.next;
    else
        edge_order_.head = rec.order.next;
    if (rec.order.next != kNone)
        edges_.find(eid(rec.order.next))->second.order.prev = rec.order.prev;
    else
        edge_order_.tail = rec.order.prev;
    edges_.erase(it);
    return true;
}

bool AdjacencyStore::remove_vertex(VertexId v) {
    auto it = vertices_.find(v);
    if (it == vertices_.end())
        return false;
    for (EdgeId e : edges_of(v))
        remove_edge(e);
    auto& rec = vertices_.find(v)->second;
    if (rec.order.prev != kNone)
        vertices_.find(vid(rec.order.prev))->second.order.next = rec.order.next;
    else
        vertex_order_.head = rec.order.next;
    if (rec.order.next != kNone)
        vertices_.find(vid(rec.order.next))->second.order.prev = rec.order.prev;
    else
        vertex_order_.tail = rec.order.prev;
    vertices_.erase(v);
    return true;
}

void AdjacencyStore::set_weight(EdgeId e, double w) {
    if (!kind_.weighted)
        throw GraphError(ErrorCode::CapabilityViolation,
                         "set_weight on unweighted " + kind_name(kind_));
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw GraphError(ErrorCode::MissingEdge, "edge " + std::to_string(raw(e)) + " not in graph");
    it->second.weight = w;
}

} // namespace tessera
