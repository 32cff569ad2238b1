#pragma once

// Deliberately naive reference implementations used as test oracles. They share nothing
// with the library beyond the Graph container.

#include "satedge/graph.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using satedge::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges()) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    return m;
}

// Calls f on every k-subset of `pool` (as index lists into pool) until f returns true.
inline bool any_subset(const std::vector<int>& pool, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(pick.size()) == k) return f(pick);
        for (std::size_t i = start; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

inline bool all_adjacent(const std::vector<std::vector<bool>>& m, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!m[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])]) return false;
    return true;
}

inline bool has_clique(const Graph& g, int k) {
    auto m = matrix(g);
    std::vector<int> all;
    for (int v = 0; v < static_cast<int>(g.order()); ++v) all.push_back(v);
    return any_subset(all, k, [&](const std::vector<int>& s) { return all_adjacent(m, s); });
}

inline std::uint64_t count_cliques(const Graph& g, int k) {
    auto m = matrix(g);
    std::vector<int> all;
    for (int v = 0; v < static_cast<int>(g.order()); ++v) all.push_back(v);
    std::uint64_t total = 0;
    any_subset(all, k, [&](const std::vector<int>& s) {
        total += all_adjacent(m, s);
        return false;
    });
    return total;
}

// Non-edges uv such that adding uv creates a K_p: some (p-2)-set of common neighbours is a clique.
inline std::uint64_t count_saturating(const Graph& g, int p) {
    auto m = matrix(g);
    const int n = static_cast<int>(g.order());
    std::uint64_t total = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
            std::vector<int> common;
            for (int w = 0; w < n; ++w)
                if (m[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] && m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) common.push_back(w);
            total += any_subset(common, p - 2, [&](const std::vector<int>& s) { return all_adjacent(m, s); });
        }
    return total;
}

inline Graph random_graph(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(density * 18446744073709551615.0);
    satedge::GraphBuilder b(n);
    for (int u = 0; u < static_cast<int>(n); ++u)
        for (int v = u + 1; v < static_cast<int>(n); ++v)
            if (rng() <= threshold) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    satedge::GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return std::move(b).build();
}

inline std::vector<int> random_permutation(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    return perm;
}

}  // namespace oracle
