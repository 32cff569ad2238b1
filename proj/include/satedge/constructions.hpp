#pragma once

#include "satedge/blowup.hpp"
#include "satedge/cliques.hpp"
#include "satedge/error.hpp"
#include "satedge/graph.hpp"
#include "satedge/rational.hpp"
#include "satedge/saturation.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace satedge {

/// ex(n, K_p) = e(T_{p-1}(n)).
inline std::uint64_t turan_number(std::uint64_t n, int p) {
    if (p < 2) throw invalid_argument("turan_number needs p >= 2");
    const std::uint64_t r = static_cast<std::uint64_t>(p - 1);
    const std::uint64_t q = n / r, t = n % r;
    return choose2(n) - t * choose2(q + 1) - (r - t) * choose2(q);
}

/// The defect in ex(n,K_p) = (p-2)n^2/(2(p-1)) - delta, with t = n mod (p-1).
inline Rational delta(std::uint64_t n, int p) {
    if (p < 3) throw invalid_argument("delta needs p >= 3");
    const std::int64_t k = p - 1;
    const std::int64_t t = static_cast<std::int64_t>(n % static_cast<std::uint64_t>(k));
    return Rational(t * (k - t), 2 * k);
}

/// Balanced complete r-partite blow-up of K_r; the first n mod r parts are the larger ones.
inline Blowup turan_blowup(std::size_t n, int r) {
    if (r < 1) throw invalid_argument("turan_graph needs r >= 1");
    GraphBuilder base(static_cast<std::size_t>(r));
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) base.add_edge(a, b);
    BlowupSpec spec{std::move(base).build(), {}, {}};
    const std::size_t q = n / static_cast<std::size_t>(r), t = n % static_cast<std::size_t>(r);
    for (int i = 0; i < r; ++i) {
        spec.sizes.push_back(q + (static_cast<std::size_t>(i) < t ? 1 : 0));
        spec.names.push_back("T" + std::to_string(i + 1));
    }
    return blow_up(std::move(spec));
}

inline Graph turan_graph(std::size_t n, int r) { return turan_blowup(n, r).graph; }

/// n = modulus * x + y with 0 <= y < modulus, modulus = p(p-1)(4p^2-11p+8).
struct TuranDecomposition {
    int p = 0;
    std::uint64_t n = 0;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t modulus = 0;
};

inline std::uint64_t construction_modulus(int p) {
    const std::uint64_t q = static_cast<std::uint64_t>(p);
    return q * (q - 1) * (4 * q * q - 11 * q + 8);
}

inline TuranDecomposition decompose_n(std::uint64_t n, int p) {
    if (p < 3) throw invalid_argument("decompose_n needs p >= 3");
    const std::uint64_t m = construction_modulus(p);
    return {p, n, n / m, n % m, m};
}

/// One of the named blow-ups of base_graph(p) with its parameters.
struct Construction {
    std::string name;
    int p = 0;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    Blowup blowup;

    const Graph& graph() const noexcept { return blowup.graph; }
    std::span<const PartRange> parts() const noexcept { return blowup.parts; }
};

namespace detail {

// H_0(p, x) with `extra_v0` vertices added to V_0 and `deleted` vertices removed from the
// U-parts, split as evenly as possible with the larger shares on lower-indexed parts.
inline Construction modified_h0(std::string name, int p, std::uint64_t x, std::uint64_t y, std::uint64_t extra_v0,
                                std::uint64_t deleted) {
    if (p < 3) throw invalid_argument(name + " needs p >= 3");
    const std::uint64_t q = static_cast<std::uint64_t>(p);
    const std::uint64_t k = q - 1;
    const std::uint64_t v0 = 2 * k * (q - 2) * (q - 2) * x;
    const std::uint64_t vi = 4 * k * k * (q - 2) * x;
    const std::uint64_t ui = q * (3 * q - 4) * x;
    BlowupSpec spec{base_graph(p), {}, base_graph_names(p)};
    spec.sizes.push_back(v0 + extra_v0);
    for (std::uint64_t i = 0; i < k; ++i) spec.sizes.push_back(vi);
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t share = deleted / k + (i < deleted % k ? 1 : 0);
        spec.sizes.push_back(ui - share);
    }
    check_vertex_cap(spec.vertex_count());
    return Construction{std::move(name), p, x, y, blow_up(std::move(spec))};
}

inline void check_h_guard(const char* name, int p, std::uint64_t x, std::uint64_t deleted) {
    const std::uint64_t q = static_cast<std::uint64_t>(p);
    if (p < 3) throw invalid_argument(std::string(name) + " needs p >= 3");
    if (!(q * (q - 1) * (3 * q - 4) * x > deleted))
        throw invalid_argument(std::string(name) + ": feasibility guard p(p-1)(3p-4)x > " + std::to_string(deleted) +
                               " fails for p=" + std::to_string(p) + ", x=" + std::to_string(x));
}

}  // namespace detail

/// |V_0| = 2(p-1)(p-2)^2 x, |V_i| = 4(p-1)^2(p-2) x, |U_i| = p(3p-4) x.
inline Construction h0(int p, std::uint64_t x) {
    if (x < 1) throw invalid_argument("h0 needs x >= 1");
    return detail::modified_h0("h0", p, x, 0, 0, 0);
}

/// H_0 with V_0 enlarged by 2y and a T_{p-1}(y) deleted from the U-parts: n = modulus*x + y
/// vertices and exactly ex(n, K_p) edges.
inline Construction h1(int p, std::uint64_t x, std::uint64_t y) {
    detail::check_h_guard("h1", p, x, y);
    return detail::modified_h0("h1", p, x, y, 2 * y, y);
}

/// H_0 with V_0 enlarged by 2y+1 and a T_{p-1}(y+1) deleted from the U-parts: again
/// n = modulus*x + y vertices, but more than ex(n, K_p) edges.
inline Construction h2(int p, std::uint64_t x, std::uint64_t y) {
    detail::check_h_guard("h2", p, x, y + 1);
    return detail::modified_h0("h2", p, x, y, 2 * y + 1, y + 1);
}

struct TrimResult {
    Graph graph;
    std::uint64_t saturating = 0;  // f_{p+1}, unchanged by every removal
    std::vector<Edge> removed;
};

/// Deletes edges with an endpoint in a U-part (parts named "U...") until `target` edges
/// remain, keeping f_{p+1} fixed. Candidates are scanned by (U-part, vertex, neighbour);
/// a removal that would change any saturating pair is undone and skipped.
inline TrimResult trim_to_target(const Graph& g, std::span<const PartRange> parts, std::uint64_t target, int p) {
    if (target > g.size()) throw invalid_argument("trim target exceeds the current edge count");
    if (contains_clique(g, p + 1)) throw clique_found("trim_to_target: graph contains K_" + std::to_string(p + 1));
    GraphBuilder work(g);
    std::vector<Edge> saturating = saturating_edges(work.rows(), p + 1);
    const std::uint64_t f0 = saturating.size();
    TrimResult result;
    std::uint64_t to_remove = g.size() - target;

    auto touches = [&](int a, int b, int w) {
        return w == a || w == b || (work.neighbors(a).contains(w) && work.neighbors(b).contains(w));
    };

    for (const PartRange& part : parts) {
        if (part.name.empty() || part.name[0] != 'U') continue;
        for (int u = part.begin; u < part.end && to_remove > 0; ++u) {
            std::vector<int> nbrs = work.neighbors(u).to_vector();
            for (int w : nbrs) {
                if (to_remove == 0) break;
                if (!work.adjacent(u, w)) continue;
                std::vector<std::size_t> affected;
                for (std::size_t i = 0; i < saturating.size(); ++i) {
                    auto [a, b] = saturating[i];
                    if (touches(a, b, u) && touches(a, b, w)) affected.push_back(i);
                }
                work.remove_edge(u, w);
                bool unchanged = !saturating_pair(work.rows(), p + 1, u, w);
                for (std::size_t i : affected) {
                    if (!unchanged) break;
                    unchanged = saturating_pair(work.rows(), p + 1, saturating[i].first, saturating[i].second);
                }
                if (!unchanged) {
                    work.add_edge(u, w);
                    continue;
                }
                result.removed.emplace_back(std::min(u, w), std::max(u, w));
                --to_remove;
            }
        }
    }
    if (to_remove > 0)
        throw infeasible_error("trim_to_target: cannot reach " + std::to_string(target) +
                               " edges without touching a protected edge or changing the saturating count");
    result.graph = std::move(work).build();
    result.saturating = count_saturating(result.graph, p + 1).total;
    if (result.saturating != f0) throw error("trim_to_target: saturating count drifted");  // unreachable
    return result;
}

}  // namespace satedge
