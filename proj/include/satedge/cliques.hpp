#pragma once

#include "satedge/error.hpp"
#include "satedge/graph.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

namespace satedge {

namespace detail {

// Greedy sequential colouring of `cand`; vertices are emitted colour class by colour
// class so `colors` is non-decreasing along `order`.
inline void color_sort(std::span<const VertexSet> rows, const VertexSet& cand, std::vector<int>& order,
                       std::vector<int>& colors) {
    order.clear();
    colors.clear();
    VertexSet uncolored = cand;
    int color = 0;
    while (!uncolored.empty()) {
        ++color;
        VertexSet q = uncolored;
        for (int v = q.first(); v >= 0; v = q.first()) {
            q.erase(v);
            q -= rows[static_cast<std::size_t>(v)];
            uncolored.erase(v);
            order.push_back(v);
            colors.push_back(color);
        }
    }
}

inline bool expand_clique(std::span<const VertexSet> rows, VertexSet cand, int k, std::vector<int>& stack) {
    if (k <= 0) return true;
    if (cand.count() < static_cast<std::size_t>(k)) return false;
    if (k == 1) {
        stack.push_back(cand.first());
        return true;
    }
    if (k == 2) {
        for (int v : cand) {
            int u = (rows[static_cast<std::size_t>(v)] & cand).first();
            if (u >= 0) {
                stack.push_back(v);
                stack.push_back(u);
                return true;
            }
        }
        return false;
    }
    std::vector<int> order, colors;
    color_sort(rows, cand, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
        if (colors[i] < k) return false;
        int v = order[i];
        stack.push_back(v);
        if (expand_clique(rows, cand & rows[static_cast<std::size_t>(v)], k - 1, stack)) return true;
        stack.pop_back();
        cand.erase(v);
    }
    return false;
}

// Cheap first attempt: always extend with the smallest candidate.
inline bool greedy_probe(std::span<const VertexSet> rows, VertexSet cand, int k, std::vector<int>& stack) {
    std::size_t base = stack.size();
    for (int depth = 0; depth < k; ++depth) {
        int v = cand.first();
        if (v < 0) {
            stack.resize(base);
            return false;
        }
        stack.push_back(v);
        cand &= rows[static_cast<std::size_t>(v)];
    }
    return true;
}

template <class F>
bool for_each_clique_rec(std::span<const VertexSet> rows, std::vector<int>& clique, VertexSet cand, int remaining,
                         F& f) {
    if (remaining == 0) {
        if constexpr (std::is_same_v<std::invoke_result_t<F&, const std::vector<int>&>, bool>) {
            return f(static_cast<const std::vector<int>&>(clique));
        } else {
            f(static_cast<const std::vector<int>&>(clique));
            return true;
        }
    }
    for (int v = cand.first(); v >= 0; v = cand.first()) {
        if (cand.count() < static_cast<std::size_t>(remaining)) break;
        cand.erase(v);
        VertexSet next = cand & rows[static_cast<std::size_t>(v)];
        if (next.count() + 1 < static_cast<std::size_t>(remaining)) continue;
        clique.push_back(v);
        bool keep_going = for_each_clique_rec(rows, clique, std::move(next), remaining - 1, f);
        clique.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace detail

/// Searches `within` for k pairwise adjacent vertices. On success the clique (sorted) is
/// written to `witness` when it is non-null.
inline bool find_clique(std::span<const VertexSet> rows, const VertexSet& within, int k,
                        std::vector<int>* witness = nullptr) {
    if (k < 0) throw invalid_argument("clique size must be non-negative");
    std::vector<int> stack;
    bool found = detail::greedy_probe(rows, within, k, stack) || detail::expand_clique(rows, within, k, stack);
    if (found && witness) {
        std::sort(stack.begin(), stack.end());
        *witness = std::move(stack);
    }
    return found;
}

/// Some p-clique of g, or nullopt when g is K_p-free.
inline std::optional<std::vector<int>> contains_clique(const Graph& g, int p) {
    if (p < 1) throw invalid_argument("clique size must be at least 1");
    std::vector<int> witness;
    if (find_clique(g.rows(), g.all_vertices(), p, &witness)) return witness;
    return std::nullopt;
}

/// Calls f(clique) for every p-clique inside `within`, each as a sorted vertex list, in
/// lexicographic order. If f returns bool, returning false stops the enumeration.
template <class F>
void for_each_clique(std::span<const VertexSet> rows, const VertexSet& within, int p, F&& f) {
    if (p < 1) throw invalid_argument("clique size must be at least 1");
    std::vector<int> clique;
    clique.reserve(static_cast<std::size_t>(p));
    detail::for_each_clique_rec(rows, clique, within, p, f);
}

template <class F>
void for_each_clique(const Graph& g, int p, F&& f) {
    for_each_clique(g.rows(), g.all_vertices(), p, std::forward<F>(f));
}

/// All p-cliques of g in lexicographic order.
inline std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int p) {
    std::vector<std::vector<int>> out;
    for_each_clique(g, p, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

inline std::size_t count_cliques(const Graph& g, int p) {
    std::size_t total = 0;
    for_each_clique(g, p, [&](const std::vector<int>&) { ++total; });
    return total;
}

inline bool is_clique(const Graph& g, std::span<const int> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

}  // namespace satedge
