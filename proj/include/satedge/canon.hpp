#pragma once

#include "satedge/error.hpp"
#include "satedge/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace satedge {

/// Graphs on at most 11 vertices as adjacency bitmasks; the upper triangle fits in 64 bits.
struct SmallGraph {
    static constexpr int max_order = 11;

    int n = 0;
    std::array<std::uint16_t, max_order> adj{};

    bool adjacent(int u, int v) const noexcept { return (adj[static_cast<std::size_t>(u)] >> v) & 1u; }
    void add_edge(int u, int v) noexcept {
        adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    }
    int size() const noexcept {
        int total = 0;
        for (int v = 0; v < n; ++v) total += std::popcount(adj[static_cast<std::size_t>(v)]);
        return total / 2;
    }

    /// Bit k of the code is the k-th pair in the order (0,1), (0,2), (1,2), (0,3), ...
    std::uint64_t code() const noexcept {
        std::uint64_t c = 0;
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (adjacent(i, j)) c |= std::uint64_t{1} << k;
        return c;
    }

    static SmallGraph from_code(int n, std::uint64_t c) {
        SmallGraph g;
        g.n = n;
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if ((c >> k) & 1u) g.add_edge(i, j);
        return g;
    }

    static SmallGraph from_graph(const Graph& g) {
        if (g.order() > static_cast<std::size_t>(max_order))
            throw invalid_argument("small graphs hold at most " + std::to_string(max_order) + " vertices");
        SmallGraph s;
        s.n = static_cast<int>(g.order());
        for (auto [u, v] : g.edges()) s.add_edge(u, v);
        return s;
    }

    Graph to_graph() const {
        GraphBuilder b(static_cast<std::size_t>(n));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (adjacent(i, j)) b.add_edge(i, j);
        return std::move(b).build();
    }
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

// Splits cells by the vector of neighbour counts into every cell until stable. The split
// order depends only on isomorphism-invariant data, so refinement commutes with relabeling.
inline void refine(const SmallGraph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint16_t> masks;
        for (const auto& c : cells) {
            std::uint16_t m = 0;
            for (int v : c) m |= static_cast<std::uint16_t>(1u << v);
            masks.push_back(m);
        }
        Cells next;
        for (const auto& c : cells) {
            if (c.size() == 1) {
                next.push_back(c);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int v : c) {
                std::vector<int> key;
                for (auto m : masks) key.push_back(std::popcount(static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(v)] & m)));
                keyed.emplace_back(std::move(key), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<int> cur{keyed[0].second};
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(std::move(cur));
                    cur.clear();
                    changed = true;
                }
                cur.push_back(keyed[i].second);
            }
            next.push_back(std::move(cur));
        }
        cells = std::move(next);
    }
}

inline bool twins(const SmallGraph& g, int u, int w) {
    const auto strip = static_cast<std::uint16_t>(~((1u << u) | (1u << w)));
    return (g.adj[static_cast<std::size_t>(u)] & strip) == (g.adj[static_cast<std::size_t>(w)] & strip);
}

inline std::uint64_t relabeled_code(const SmallGraph& g, const Cells& discrete) {
    std::array<int, SmallGraph::max_order> label{};
    for (std::size_t i = 0; i < discrete.size(); ++i) label[static_cast<std::size_t>(discrete[i][0])] = static_cast<int>(i);
    SmallGraph h;
    h.n = g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v)) h.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    return h.code();
}

inline void canon_search(const SmallGraph& g, Cells cells, std::uint64_t& best, bool& found) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1) {
            target = i;
            break;
        }
    if (target == cells.size()) {
        std::uint64_t c = relabeled_code(g, cells);
        if (!found || c > best) best = c;
        found = true;
        return;
    }
    const auto cell = cells[target];
    std::vector<int> tried;
    for (int v : cell) {
        // Swapping twins in one cell is an automorphism that fixes the partition.
        if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
        tried.push_back(v);
        Cells child;
        child.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != target) {
                child.push_back(cells[i]);
                continue;
            }
            child.push_back({v});
            std::vector<int> rest;
            for (int w : cell)
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
        }
        canon_search(g, std::move(child), best, found);
    }
}

}  // namespace detail

/// Canonical code: the largest upper-triangle code over the labelings reached by
/// degree refinement and individualization. Isomorphic graphs share it.
inline std::uint64_t canonical_code(const SmallGraph& g) {
    if (g.n <= 1) return 0;
    detail::Cells cells(1);
    for (int v = 0; v < g.n; ++v) cells[0].push_back(v);
    std::uint64_t best = 0;
    bool found = false;
    detail::canon_search(g, std::move(cells), best, found);
    return best;
}

inline SmallGraph canonical_form(const SmallGraph& g) { return SmallGraph::from_code(g.n, canonical_code(g)); }

inline bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    return a.n == b.n && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

}  // namespace satedge
