#pragma once

#include "satedge/error.hpp"
#include "satedge/vertex_set.hpp"

#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#ifndef SATEDGE_DEFAULT_VERTEX_CAP
#define SATEDGE_DEFAULT_VERTEX_CAP 4096
#endif

namespace satedge {

using Edge = std::pair<int, int>;

namespace detail {
inline std::atomic<std::size_t>& vertex_cap_storage() {
    static std::atomic<std::size_t> cap{SATEDGE_DEFAULT_VERTEX_CAP};
    return cap;
}
}  // namespace detail

/// Largest vertex count a Graph may have. Process-wide, defaults to the build setting.
inline std::size_t vertex_cap() { return detail::vertex_cap_storage().load(std::memory_order_relaxed); }
inline void set_vertex_cap(std::size_t cap) { detail::vertex_cap_storage().store(cap, std::memory_order_relaxed); }

inline void check_vertex_cap(std::size_t n) {
    if (n > vertex_cap())
        throw invalid_argument("graph with " + std::to_string(n) + " vertices exceeds the vertex cap " +
                               std::to_string(vertex_cap()));
}

class GraphBuilder;

/// Undirected simple graph on vertices 0..n-1 with one adjacency bitset per vertex.
/// Immutable once built; safe to share between threads.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    std::size_t degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
    std::span<const VertexSet> rows() const noexcept { return adj_; }

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const { return VertexSet::full(order()); }

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (int u = 0; u < static_cast<int>(order()); ++u)
            for (int v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0; v = adj_[static_cast<std::size_t>(u)].next(v))
                out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced on `keep`, relabelled in increasing order.
    Graph induced(const VertexSet& keep) const;
    /// Copy with edge uv removed; uv must be an edge.
    Graph without_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

    /// Validates symmetry, loop-freeness and the vertex cap.
    static Graph from_rows(std::vector<VertexSet> rows);

private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

/// Mutable adjacency used while a graph is being assembled or edited.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : rows_(n, VertexSet(n)) { check_vertex_cap(n); }
    explicit GraphBuilder(const Graph& g) : rows_(g.adj_) {}

    std::size_t order() const noexcept { return rows_.size(); }

    void add_edge(int u, int v) {
        check_pair(u, v);
        rows_[static_cast<std::size_t>(u)].insert(v);
        rows_[static_cast<std::size_t>(v)].insert(u);
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        rows_[static_cast<std::size_t>(u)].erase(v);
        rows_[static_cast<std::size_t>(v)].erase(u);
    }
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
    /// Makes every vertex of `a` adjacent to every vertex of `b`; the sets must be disjoint.
    void join(const VertexSet& a, const VertexSet& b) {
        for (int u : a) rows_[static_cast<std::size_t>(u)] |= b;
        for (int v : b) rows_[static_cast<std::size_t>(v)] |= a;
    }

    std::span<const VertexSet> rows() const noexcept { return rows_; }
    const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }

    Graph build() const& { return Graph::from_rows(rows_); }
    Graph build() && { return Graph::from_rows(std::move(rows_)); }

private:
    void check_pair(int u, int v) const {
        int n = static_cast<int>(rows_.size());
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw invalid_argument("vertex out of range in pair (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") for n=" + std::to_string(n));
        if (u == v) throw invalid_argument("loop edge at vertex " + std::to_string(u));
    }

    std::vector<VertexSet> rows_;
};

inline Graph Graph::from_rows(std::vector<VertexSet> rows) {
    check_vertex_cap(rows.size());
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < rows.size(); ++v) {
        const VertexSet& row = rows[v];
        if (row.universe() != rows.size()) throw invalid_argument("adjacency row has the wrong universe");
        if (row.contains(static_cast<int>(v))) throw invalid_argument("loop at vertex " + std::to_string(v));
        for (int u : row)
            if (!rows[static_cast<std::size_t>(u)].contains(static_cast<int>(v)))
                throw invalid_argument("asymmetric adjacency between " + std::to_string(v) + " and " +
                                       std::to_string(u));
        degree_sum += row.count();
    }
    Graph g;
    g.adj_ = std::move(rows);
    g.edge_count_ = degree_sum / 2;
    return g;
}

inline Graph Graph::induced(const VertexSet& keep) const {
    std::vector<int> label(order(), -1);
    int next = 0;
    for (int v : keep) label[static_cast<std::size_t>(v)] = next++;
    GraphBuilder b(static_cast<std::size_t>(next));
    for (int u : keep)
        for (int v : adj_[static_cast<std::size_t>(u)] & keep)
            if (u < v) b.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    return std::move(b).build();
}

inline Graph Graph::without_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= static_cast<int>(order()) || v >= static_cast<int>(order()) || !adjacent(u, v))
        throw invalid_argument("without_edge: not an edge");
    GraphBuilder b(*this);
    b.remove_edge(u, v);
    return std::move(b).build();
}

/// Graph on n vertices with the given edges; duplicates (in either orientation) collapse.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Vertices adjacent to every member of U.
inline VertexSet common_neighborhood(const Graph& g, const VertexSet& U) {
    if (U.universe() != g.order()) throw invalid_argument("vertex set belongs to a different graph");
    if (U.empty()) throw invalid_argument("common_neighborhood of the empty set");
    VertexSet out = g.all_vertices();
    for (int v : U) out &= g.neighbors(v);
    return out;
}

/// Number of edges with one end in U and the other in W; U and W must be disjoint.
inline std::size_t edges_between(const Graph& g, const VertexSet& U, const VertexSet& W) {
    if (U.universe() != g.order() || W.universe() != g.order())
        throw invalid_argument("vertex set belongs to a different graph");
    if (U.intersects(W)) throw invalid_argument("edges_between: sets overlap");
    std::size_t total = 0;
    for (int u : U) total += g.neighbors(u).intersection_count(W);
    return total;
}

/// Number of edges of the subgraph induced on U.
inline std::size_t edges_within(const Graph& g, const VertexSet& U) {
    std::size_t twice = 0;
    for (int u : U) twice += g.neighbors(u).intersection_count(U);
    return twice / 2;
}

}  // namespace satedge
