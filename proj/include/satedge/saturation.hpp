#pragma once

#include "satedge/blowup.hpp"
#include "satedge/cliques.hpp"
#include "satedge/error.hpp"
#include "satedge/graph.hpp"
#include "satedge/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace satedge {

/// Is the non-edge uv K_p-saturating, i.e. does N(u) ∩ N(v) contain a K_{p-2}?
/// Works on raw adjacency rows so callers editing a graph can reuse it.
inline bool saturating_pair(std::span<const VertexSet> rows, int p, int u, int v) {
    VertexSet common = rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)];
    return find_clique(rows, common, p - 2);
}

/// Precondition (not re-checked here): g is K_p-free.
inline bool is_saturating(const Graph& g, int p, int u, int v) {
    if (p < 2) throw invalid_argument("clique size must be at least 2");
    const int n = static_cast<int>(g.order());
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw invalid_argument("bad vertex pair");
    if (g.adjacent(u, v)) throw invalid_argument("is_saturating: uv is already an edge");
    return saturating_pair(g.rows(), p, u, v);
}

struct SaturationReport {
    int p = 0;
    std::size_t n = 0;
    std::uint64_t total = 0;
    std::optional<std::vector<Edge>> edges;  // materialised only on request and below the limit
};

struct SaturationOptions {
    unsigned threads = 0;
    bool materialize_edges = false;
    std::uint64_t materialize_limit = 1'000'000;
    bool share_twin_results = true;  // reuse the answer for pairs whose ends have identical rows
};

namespace detail {

// Class id per vertex, equal exactly when adjacency rows are equal; ids follow first occurrence.
inline std::vector<std::uint32_t> row_classes(const Graph& g, std::uint32_t& classes) {
    const std::size_t n = g.order();
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    auto words = [&](int v) { const auto& r = g.neighbors(v); return std::span<const VertexSet::word_type>(r.data(), r.word_count()); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto wa = words(a), wb = words(b);
        return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
    });
    std::vector<std::uint32_t> rep(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool same = i > 0 && g.neighbors(order[i]) == g.neighbors(order[i - 1]);
        rep[static_cast<std::size_t>(order[i])] = same ? rep[static_cast<std::size_t>(order[i - 1])] : static_cast<std::uint32_t>(order[i]);
    }
    std::vector<std::uint32_t> id(n), remap(n, UINT32_MAX);
    classes = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto r = rep[v];
        if (remap[r] == UINT32_MAX) remap[r] = classes++;
        id[v] = remap[r];
    }
    return id;
}

}  // namespace detail

/// f_p(g): the number of K_p-saturating non-edges. Throws clique_found if g contains K_p.
inline SaturationReport count_saturating(const Graph& g, int p, const SaturationOptions& options = {}) {
    if (p < 2) throw invalid_argument("clique size must be at least 2");
    if (auto k = contains_clique(g, p)) throw clique_found("graph contains K_" + std::to_string(p));
    const std::size_t n = g.order();
    std::vector<std::uint64_t> per_vertex(n, 0);
    std::vector<std::vector<int>> partners(options.materialize_edges ? n : 0);
    // Memo over pairs of row classes: 0 unknown, 1 saturating, 2 not. Only worth it with many twins.
    std::uint32_t classes = static_cast<std::uint32_t>(n);
    std::vector<std::uint32_t> cls;
    if (options.share_twin_results) cls = detail::row_classes(g, classes);
    const bool memo = options.share_twin_results && classes <= 4096 && classes * 2 <= n;
    std::vector<std::atomic<std::uint8_t>> known(memo ? std::size_t{classes} * classes : 0);
    auto saturates = [&](int u, int v) {
        if (!memo) return saturating_pair(g.rows(), p, u, v);
        auto a = cls[static_cast<std::size_t>(u)], b = cls[static_cast<std::size_t>(v)];
        auto& slot = known[std::size_t{std::min(a, b)} * classes + std::max(a, b)];
        auto state = slot.load(std::memory_order_relaxed);
        if (state == 0) {
            state = saturating_pair(g.rows(), p, u, v) ? 1 : 2;
            slot.store(state, std::memory_order_relaxed);
        }
        return state == 1;
    };
    parallel_for(n, options.threads, [&](std::size_t ui) {
        const int u = static_cast<int>(ui);
        VertexSet candidates = g.neighbors(u).complement();
        candidates.keep_above(u);
        std::uint64_t count = 0;
        for (int v : candidates) {
            if (saturates(u, v)) {
                ++count;
                if (options.materialize_edges) partners[ui].push_back(v);
            }
        }
        per_vertex[ui] = count;
    });
    SaturationReport report;
    report.p = p;
    report.n = n;
    for (auto c : per_vertex) report.total += c;
    if (options.materialize_edges && report.total <= options.materialize_limit) {
        std::vector<Edge> edges;
        edges.reserve(report.total);
        for (std::size_t u = 0; u < n; ++u)
            for (int v : partners[u]) edges.emplace_back(static_cast<int>(u), v);
        report.edges = std::move(edges);
    }
    return report;
}

/// Saturating non-edges of the current adjacency, without the K_p-freeness check.
inline std::vector<Edge> saturating_edges(std::span<const VertexSet> rows, int p) {
    std::vector<Edge> out;
    const int n = static_cast<int>(rows.size());
    for (int u = 0; u < n; ++u) {
        VertexSet candidates = rows[static_cast<std::size_t>(u)].complement();
        candidates.keep_above(u);
        for (int v : candidates)
            if (saturating_pair(rows, p, u, v)) out.emplace_back(u, v);
    }
    return out;
}

/// Closed-form f_{p+1} of a blow-up of base_graph(p). Only pairs inside a V-part can be
/// saturating: a pair inside V_0 needs every V_1..V_{p-1} non-empty, a pair inside V_i
/// (i >= 1) needs V_0 and every other V_j non-empty. Pairs touching a U-part or joining
/// V_i to U_i see a (p-2)-partite common neighbourhood and never close a K_{p+1}.
inline std::uint64_t count_saturating_blowup(const BlowupSpec& spec, std::span<const PartRange> parts, int p) {
    if (p < 3) throw invalid_argument("closed-form count needs p >= 3");
    if (spec.base.order() != static_cast<std::size_t>(2 * p - 1) || !(spec.base == base_graph(p)))
        throw invalid_argument("blow-up is not shaped on base_graph(" + std::to_string(p) + ")");
    if (spec.sizes.size() != parts.size()) throw invalid_argument("part map does not match the spec");
    int next = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].begin != next || parts[i].size() != static_cast<int>(spec.sizes[i]))
            throw invalid_argument("part map does not match the spec sizes");
        next = parts[i].end;
    }
    auto size = [&](int i) { return static_cast<std::uint64_t>(spec.sizes[static_cast<std::size_t>(i)]); };
    auto pairs = [](std::uint64_t s) { return s < 2 ? std::uint64_t{0} : s * (s - 1) / 2; };
    std::uint64_t total = 0;
    bool all_v_nonempty = true;
    for (int i = 1; i < p; ++i) all_v_nonempty = all_v_nonempty && size(i) > 0;
    if (all_v_nonempty) total += pairs(size(0));
    for (int i = 1; i < p; ++i) {
        bool others = size(0) > 0;
        for (int j = 1; j < p; ++j)
            if (j != i) others = others && size(j) > 0;
        if (others) total += pairs(size(i));
    }
    return total;
}

inline nlohmann::ordered_json to_json(const SaturationReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["n"] = r.n;
    j["total"] = r.total;
    if (r.edges) {
        auto arr = nlohmann::ordered_json::array();
        for (auto [u, v] : *r.edges) arr.push_back({u, v});
        j["edges"] = std::move(arr);
    }
    return j;
}

}  // namespace satedge
