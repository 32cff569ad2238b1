#pragma once

#include "satedge/canon.hpp"
#include "satedge/constructions.hpp"
#include "satedge/error.hpp"
#include "satedge/io.hpp"
#include "satedge/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satedge {

struct SearchResult {
    int n = 0;
    std::uint64_t e = 0;
    int p = 0;
    std::optional<std::uint64_t> minimum;  // best value seen; exact only if `exact`
    std::vector<std::string> witnesses;    // sorted canonical graph6
    std::uint64_t explored = 0;
    bool exact = false;
    std::string note;  // why the search stopped early, if it did
};

struct SearchOptions {
    std::uint64_t budget = 1'000'000'000;
    unsigned threads = 0;
    bool emit_witnesses = true;
    std::size_t witness_limit = 1000;
};

namespace detail {

inline bool has_clique_mask(const SmallGraph& g, std::uint16_t cand, int k) {
    if (k <= 0) return true;
    if (std::popcount(cand) < k) return false;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= static_cast<std::uint16_t>(cand - 1);
        if (has_clique_mask(g, static_cast<std::uint16_t>(cand & g.adj[static_cast<std::size_t>(v)]), k - 1)) return true;
    }
    return false;
}

inline std::uint64_t count_saturating_small(const SmallGraph& g, int p) {
    std::uint64_t total = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.adjacent(u, v) &&
                has_clique_mask(g, static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(u)] & g.adj[static_cast<std::size_t>(v)]), p - 2))
                ++total;
    return total;
}

inline std::uint64_t pairs(std::uint64_t k) { return k * (k - 1) / 2; }

// Largest number of edges that can still be added once `k` of `n` vertices are placed.
inline std::uint64_t room(int n, int k) {
    const auto a = static_cast<std::uint64_t>(k), b = static_cast<std::uint64_t>(n - k);
    return a * b + (b ? pairs(b) : 0);
}

class SaturationSearch {
public:
    SaturationSearch(int n, std::uint64_t e, int p, std::optional<std::uint64_t> excluded, const SearchOptions& options)
        : n_(n), e_(e), p_(p), excluded_(excluded), options_(options) {}

    SearchResult run() {
        SearchResult result;
        result.n = n_;
        result.e = e_;
        result.p = p_;
        if (n_ > SmallGraph::max_order) {
            result.note = "n = " + std::to_string(n_) + " exceeds the exhaustive engine's limit of " +
                          std::to_string(SmallGraph::max_order) + " vertices";
            return result;
        }
        if (n_ == 0) {
            have_best_ = true;
            best_codes_ = {0};
        } else {
            // Level k holds canonical codes of K_p-free graphs on k vertices that can still reach e edges.
            std::vector<std::uint64_t> level{0};
            for (int k = 1; k < n_ && !stopped_; ++k) level = expand(level, k);
            if (!stopped_) finish(level, n_ - 1);
        }
        result.explored = explored_.load();
        result.exact = !stopped_;
        if (stopped_) result.note = "node budget of " + std::to_string(options_.budget) + " exhausted";
        if (have_best_) {
            result.minimum = best_;
            std::sort(best_codes_.begin(), best_codes_.end());
            best_codes_.erase(std::unique(best_codes_.begin(), best_codes_.end()), best_codes_.end());
            if (options_.emit_witnesses)
                for (auto c : best_codes_) {
                    if (result.witnesses.size() >= options_.witness_limit) break;
                    result.witnesses.push_back(graph6_encode(SmallGraph::from_code(n_, c).to_graph()));
                }
            std::sort(result.witnesses.begin(), result.witnesses.end());
        }
        return result;
    }

private:
    struct Local {
        bool have = false;
        std::uint64_t best = 0;
        std::vector<std::uint64_t> codes;
    };

    bool charge(std::uint64_t nodes) {
        if (explored_.fetch_add(nodes) + nodes > options_.budget) stopped_ = true;
        return !stopped_;
    }

    // Children on k+1 vertices of every graph in `level` (each on k vertices).
    std::vector<std::uint64_t> expand(const std::vector<std::uint64_t>& level, int k) {
        std::vector<std::vector<std::uint64_t>> per_parent(level.size());
        parallel_for(level.size(), options_.threads, [&](std::size_t i) {
            if (stopped_) return;
            SmallGraph parent = SmallGraph::from_code(k, level[i]);
            const auto ek = static_cast<std::uint64_t>(parent.size());
            const std::uint32_t subsets = 1u << k;
            if (!charge(subsets)) return;
            for (std::uint32_t s = 0; s < subsets; ++s) {
                const auto d = static_cast<std::uint64_t>(std::popcount(s));
                if (ek + d > e_ || ek + d + room(n_, k + 1) < e_) continue;
                if (has_clique_mask(parent, static_cast<std::uint16_t>(s), p_ - 1)) continue;
                SmallGraph child = parent;
                child.n = k + 1;
                for (int v = 0; v < k; ++v)
                    if ((s >> v) & 1u) child.add_edge(v, k);
                per_parent[i].push_back(canonical_code(child));
            }
        });
        std::vector<std::uint64_t> next;
        for (auto& v : per_parent) next.insert(next.end(), v.begin(), v.end());
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        return next;
    }

    // Last vertex: only children with exactly e edges matter and no deduplication is needed.
    void finish(const std::vector<std::uint64_t>& level, int k) {
        std::vector<Local> locals(level.size());
        parallel_for(level.size(), options_.threads, [&](std::size_t i) {
            if (stopped_) return;
            SmallGraph parent = SmallGraph::from_code(k, level[i]);
            const auto ek = static_cast<std::uint64_t>(parent.size());
            if (ek > e_ || e_ - ek > static_cast<std::uint64_t>(k)) return;
            const int d = static_cast<int>(e_ - ek);
            const std::uint32_t subsets = 1u << k;
            if (!charge(subsets)) return;
            for (std::uint32_t s = 0; s < subsets; ++s) {
                if (std::popcount(s) != d) continue;
                if (has_clique_mask(parent, static_cast<std::uint16_t>(s), p_ - 1)) continue;
                SmallGraph child = parent;
                child.n = k + 1;
                for (int v = 0; v < k; ++v)
                    if ((s >> v) & 1u) child.add_edge(v, k);
                consider(child, &locals[i]);
            }
        });
        for (auto& l : locals) {
            if (!l.have) continue;
            if (!have_best_ || l.best < best_) {
                have_best_ = true;
                best_ = l.best;
                best_codes_.clear();
            }
            if (l.best == best_) best_codes_.insert(best_codes_.end(), l.codes.begin(), l.codes.end());
        }
    }

    void consider(const SmallGraph& g, Local* local) {
        std::uint64_t value = count_saturating_small(g, p_);
        if (local->have && value > local->best) return;
        const std::uint64_t c = canonical_code(g);
        if (excluded_ && c == *excluded_) return;
        if (!local->have || value < local->best) {
            local->have = true;
            local->best = value;
            local->codes.clear();
        }
        local->codes.push_back(c);
    }

    int n_;
    std::uint64_t e_;
    int p_;
    std::optional<std::uint64_t> excluded_;
    SearchOptions options_;
    std::atomic<std::uint64_t> explored_{0};
    std::atomic<bool> stopped_{false};
    bool have_best_ = false;
    std::uint64_t best_ = 0;
    std::vector<std::uint64_t> best_codes_;
};

inline void check_search_args(int n, std::uint64_t e, int p) {
    if (n < 0) throw invalid_argument("search needs n >= 0");
    if (p < 2) throw invalid_argument("search needs p >= 2");
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    if (e > nn * (nn - (nn ? 1 : 0)) / 2)
        throw infeasible_error("no graph on " + std::to_string(n) + " vertices has " + std::to_string(e) + " edges");
    if (e > turan_number(nn, p))
        throw infeasible_error("no K_" + std::to_string(p) + "-free graph on " + std::to_string(n) + " vertices has " +
                               std::to_string(e) + " edges (maximum " + std::to_string(turan_number(nn, p)) + ")");
}

}  // namespace detail

/// f_p(n, e): the fewest K_p-saturating non-edges over K_p-free graphs with n vertices and
/// e edges, by exhaustive isomorph-free generation. A result with exact = false is partial.
inline SearchResult min_saturating(int n, std::uint64_t e, int p, const SearchOptions& options = {}) {
    detail::check_search_args(n, e, p);
    return detail::SaturationSearch(n, e, p, std::nullopt, options).run();
}

/// f_{p+1}(n, ex(n, K_p) + 1).
inline SearchResult min_saturating_at_jump(int n, int p, const SearchOptions& options = {}) {
    if (p < 2) throw invalid_argument("search needs p >= 2");
    return min_saturating(n, turan_number(static_cast<std::uint64_t>(n), p) + 1, p + 1, options);
}

/// f_{p+1} minimised over K_{p+1}-free graphs with ex(n, K_p) edges other than T_{p-1}(n).
inline SearchResult min_saturating_constrained(int n, int p, const SearchOptions& options = {}) {
    if (p < 3) throw invalid_argument("constrained search needs p >= 3");
    const std::uint64_t e = turan_number(static_cast<std::uint64_t>(n), p);
    detail::check_search_args(n, e, p + 1);
    std::optional<std::uint64_t> excluded;
    if (n <= SmallGraph::max_order)
        excluded = canonical_code(SmallGraph::from_graph(turan_graph(static_cast<std::size_t>(n), p - 1)));
    return detail::SaturationSearch(n, e, p + 1, excluded, options).run();
}

inline nlohmann::ordered_json to_json(const SearchResult& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["e"] = r.e;
    j["p"] = r.p;
    j["minimum"] = r.minimum ? nlohmann::ordered_json(*r.minimum) : nlohmann::ordered_json(nullptr);
    j["witnesses"] = r.witnesses;
    j["explored"] = r.explored;
    j["exact"] = r.exact;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace satedge
