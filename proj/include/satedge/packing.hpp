#pragma once

#include "satedge/cliques.hpp"
#include "satedge/constructions.hpp"
#include "satedge/error.hpp"
#include "satedge/formulas.hpp"
#include "satedge/graph.hpp"
#include "satedge/rational.hpp"
#include "satedge/saturation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace satedge {

/// A family of vertex-disjoint p-cliques of a host graph together with the uncovered
/// vertices. `certified` is set only when an exact search proved the family maximum.
struct CliquePacking {
    int p = 0;
    std::size_t n = 0;
    std::vector<std::vector<int>> cliques;  // each sorted ascending
    VertexSet remainder;
    bool certified = false;

    std::size_t size() const noexcept { return cliques.size(); }
    VertexSet covered() const { return remainder.complement(); }
    /// r = |packing| / n.
    Rational r() const { return n ? Rational(static_cast<std::int64_t>(cliques.size()), static_cast<std::int64_t>(n)) : Rational(0); }
};

struct PackingOptions {
    std::uint64_t node_budget = 50'000'000;
};

inline CliquePacking make_packing(const Graph& g, int p, std::vector<std::vector<int>> cliques, bool certified) {
    CliquePacking out;
    out.p = p;
    out.n = g.order();
    out.remainder = g.all_vertices();
    for (auto& c : cliques) {
        std::sort(c.begin(), c.end());
        if (static_cast<int>(c.size()) != p || !is_clique(g, c))
            throw invalid_argument("packing member is not a " + std::to_string(p) + "-clique");
        for (int v : c) {
            if (!out.remainder.contains(v)) throw invalid_argument("packing cliques overlap");
            out.remainder.erase(v);
        }
    }
    out.cliques = std::move(cliques);
    out.certified = certified;
    return out;
}

namespace detail {

class PackingSearch {
public:
    PackingSearch(const Graph& g, int p, std::uint64_t budget) : g_(g), p_(p), budget_(budget) {
        for_each_clique(g, p, [&](const std::vector<int>& c) {
            cliques_.push_back(c);
            masks_.push_back(VertexSet::of(g.order(), c));
        });
    }

    const std::vector<std::vector<int>>& cliques() const { return cliques_; }
    std::uint64_t explored() const { return explored_; }

    /// First-fit over the lex-ordered cliques. This is the first leaf the DFS reaches, so when
    /// it is optimal it is also the lexicographically least optimal family.
    std::vector<std::size_t> greedy() const {
        VertexSet used(g_.order());
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < masks_.size(); ++i)
            if (!masks_[i].intersects(used)) {
                used |= masks_[i];
                out.push_back(i);
            }
        return out;
    }

    std::size_t greedy_size() const { return greedy().size(); }

    /// Lexicographically least family of `target` disjoint cliques, if one exists.
    std::optional<std::vector<std::size_t>> find(std::size_t target) {
        std::vector<std::size_t> chosen;
        if (dfs(0, VertexSet(g_.order()), target, chosen)) return chosen;
        return std::nullopt;
    }

    /// Every family of exactly `target` disjoint cliques, in lexicographic order.
    std::vector<std::vector<std::size_t>> all(std::size_t target) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> chosen;
        collect(0, VertexSet(g_.order()), target, chosen, out);
        return out;
    }

    /// Upper bound on the number of disjoint cliques among `avail`: the smaller of
    /// |covered vertices| / p and the size of a greedy hitting set.
    std::size_t upper_bound(const std::vector<std::size_t>& avail) const {
        if (avail.empty()) return 0;
        VertexSet uni(g_.order());
        for (auto i : avail) uni |= masks_[i];
        std::size_t by_vertices = uni.count() / static_cast<std::size_t>(p_);
        std::vector<std::size_t> live = avail;
        std::vector<std::size_t> hits(g_.order(), 0);
        std::size_t hitting = 0;
        while (!live.empty() && hitting < by_vertices) {
            std::fill(hits.begin(), hits.end(), 0);
            for (auto i : live)
                for (int v : cliques_[i]) ++hits[static_cast<std::size_t>(v)];
            auto best = static_cast<int>(std::max_element(hits.begin(), hits.end()) - hits.begin());
            std::erase_if(live, [&](std::size_t i) { return masks_[i].contains(best); });
            ++hitting;
        }
        return std::min(by_vertices, hitting);
    }

private:
    std::vector<std::size_t> available(std::size_t start, const VertexSet& used) const {
        std::vector<std::size_t> avail;
        for (std::size_t i = start; i < masks_.size(); ++i)
            if (!masks_[i].intersects(used)) avail.push_back(i);
        return avail;
    }

    void tick() {
        if (++explored_ > budget_)
            throw budget_exceeded("clique packing search exceeded its node budget of " + std::to_string(budget_),
                                  explored_);
    }

    bool dfs(std::size_t start, const VertexSet& used, std::size_t need, std::vector<std::size_t>& chosen) {
        if (need == 0) return true;
        tick();
        auto avail = available(start, used);
        if (avail.size() < need || upper_bound(avail) < need) return false;
        for (std::size_t i : avail) {
            chosen.push_back(i);
            if (dfs(i + 1, used | masks_[i], need - 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    void collect(std::size_t start, const VertexSet& used, std::size_t need, std::vector<std::size_t>& chosen,
                 std::vector<std::vector<std::size_t>>& out) {
        if (need == 0) {
            out.push_back(chosen);
            return;
        }
        tick();
        auto avail = available(start, used);
        if (avail.size() < need || upper_bound(avail) < need) return;
        for (std::size_t i : avail) {
            chosen.push_back(i);
            collect(i + 1, used | masks_[i], need - 1, chosen, out);
            chosen.pop_back();
        }
    }

    const Graph& g_;
    int p_;
    std::uint64_t budget_;
    std::uint64_t explored_ = 0;
    std::vector<std::vector<int>> cliques_;
    std::vector<VertexSet> masks_;
};

inline std::vector<std::vector<int>> pick(const std::vector<std::vector<int>>& cliques, const std::vector<std::size_t>& idx) {
    std::vector<std::vector<int>> out;
    for (auto i : idx) out.push_back(cliques[i]);
    return out;
}

}  // namespace detail

/// Maximum family of vertex-disjoint p-cliques, exact. Among optimal families the one whose
/// sorted clique list is lexicographically least is returned. Throws budget_exceeded rather
/// than returning an uncertified answer.
inline CliquePacking max_packing(const Graph& g, int p, const PackingOptions& options = {}) {
    if (p < 1) throw invalid_argument("clique size must be at least 1");
    detail::PackingSearch search(g, p, options.node_budget);
    std::vector<std::size_t> all(search.cliques().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const std::size_t ceiling = search.upper_bound(all);
    auto greedy = search.greedy();
    std::size_t best = greedy.size();
    while (best < ceiling && search.find(best + 1)) ++best;
    auto chosen = best == greedy.size() ? std::optional(greedy) : search.find(best);
    return make_packing(g, p, detail::pick(search.cliques(), chosen.value_or(std::vector<std::size_t>{})), true);
}

/// Every maximum packing of g (exponential; meant for small certification instances).
inline std::vector<CliquePacking> all_maximum_packings(const Graph& g, int p, const PackingOptions& options = {}) {
    CliquePacking best = max_packing(g, p, options);
    detail::PackingSearch search(g, p, options.node_budget);
    std::vector<CliquePacking> out;
    for (const auto& idx : search.all(best.size())) out.push_back(make_packing(g, p, detail::pick(search.cliques(), idx), true));
    return out;
}

/// e(R, H) for the clique at `index`: edges from it into the remainder.
inline std::size_t clique_to_remainder_edges(const Graph& g, const CliquePacking& packing, std::size_t index) {
    std::size_t total = 0;
    for (int v : packing.cliques.at(index)) total += g.neighbors(v).intersection_count(packing.remainder);
    return total;
}

inline std::size_t remainder_edges(const Graph& g, const CliquePacking& packing) {
    return edges_within(g, packing.remainder);
}

/// Replace C ⊆ R by a clique C' of the same size taken from the remainder.
struct SwitchMove {
    std::size_t clique = 0;
    std::vector<int> removed;  // C
    std::vector<int> added;    // C'
};

inline CliquePacking apply_switch(const Graph& g, const CliquePacking& packing, const SwitchMove& move) {
    if (move.clique >= packing.size()) throw invalid_argument("switch: no such packed clique");
    const auto& R = packing.cliques[move.clique];
    if (move.removed.size() != move.added.size()) throw invalid_argument("switch: |C| != |C'|");
    std::vector<int> next;
    for (int v : R)
        if (std::find(move.removed.begin(), move.removed.end(), v) == move.removed.end()) next.push_back(v);
    if (next.size() + move.removed.size() != R.size()) throw invalid_argument("switch: C is not a subset of R");
    for (int v : move.added) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.order() || !packing.remainder.contains(v))
            throw invalid_argument("switch: C' meets the packed vertices");
        next.push_back(v);
    }
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end() || !is_clique(g, next))
        throw invalid_argument("switch: R' is not a clique");
    CliquePacking out = packing;
    for (int v : move.removed) out.remainder.insert(v);
    for (int v : move.added) out.remainder.erase(v);
    out.cliques[move.clique] = std::move(next);
    return out;
}

struct SwitchInequality {
    std::size_t lhs = 0;  // e(R', H')
    std::size_t rhs = 0;  // e(R, H)
    bool holds = false;
};

inline SwitchInequality check_switch_inequality(const Graph& g, const CliquePacking& packing, const SwitchMove& move) {
    CliquePacking after = apply_switch(g, packing, move);
    SwitchInequality s;
    s.rhs = clique_to_remainder_edges(g, packing, move.clique);
    s.lhs = clique_to_remainder_edges(g, after, move.clique);
    s.holds = s.lhs >= s.rhs;
    return s;
}

/// Calls f(move) for every non-empty switch of the packing, scanning cliques in order, C by
/// increasing bitmask over R's sorted vertices, and C' lexicographically. f may return
/// false to stop.
template <class F>
void for_each_switch(const Graph& g, const CliquePacking& packing, F&& f) {
    const int p = packing.p;
    for (std::size_t ri = 0; ri < packing.size(); ++ri) {
        const auto& R = packing.cliques[ri];
        for (unsigned mask = 1; mask < (1u << p); ++mask) {
            SwitchMove move{ri, {}, {}};
            VertexSet cand = packing.remainder;
            for (int i = 0; i < p; ++i) {
                if (mask & (1u << i))
                    move.removed.push_back(R[static_cast<std::size_t>(i)]);
                else
                    cand &= g.neighbors(R[static_cast<std::size_t>(i)]);
            }
            bool keep_going = true;
            for_each_clique(g.rows(), cand, static_cast<int>(move.removed.size()), [&](const std::vector<int>& c) {
                move.added = c;
                if constexpr (std::is_same_v<std::invoke_result_t<F&, const SwitchMove&>, bool>) {
                    keep_going = f(static_cast<const SwitchMove&>(move));
                } else {
                    f(static_cast<const SwitchMove&>(move));
                }
                return keep_going;
            });
            if (!keep_going) return;
        }
    }
}

inline std::vector<SwitchMove> enumerate_switches(const Graph& g, const CliquePacking& packing) {
    std::vector<SwitchMove> out;
    for_each_switch(g, packing, [&](const SwitchMove& m) { out.push_back(m); });
    return out;
}

/// Change in e(H) if the switch were applied: e(C, H \ C') - e(C', H \ C').
inline long long remainder_gain(const Graph& g, const CliquePacking& packing, const SwitchMove& move) {
    VertexSet rest = packing.remainder;
    for (int v : move.added) rest.erase(v);
    long long gain = 0;
    for (int v : move.removed) gain += static_cast<long long>(g.neighbors(v).intersection_count(rest));
    for (int v : move.added) gain -= static_cast<long long>(g.neighbors(v).intersection_count(rest));
    return gain;
}

/// Applies improving switches (first found in for_each_switch order) until none raises
/// e(H). The size of the packing never changes and e(H) never decreases.
inline CliquePacking refine_packing(const Graph& g, const CliquePacking& packing) {
    CliquePacking cur = packing;
    while (true) {
        std::optional<SwitchMove> improving;
        for_each_switch(g, cur, [&](const SwitchMove& m) {
            if (remainder_gain(g, cur, m) > 0) {
                improving = m;
                return false;
            }
            return true;
        });
        if (!improving) return cur;
        cur = apply_switch(g, cur, *improving);
    }
}

/// Whether no single switch raises e(H).
inline bool is_switch_stable(const Graph& g, const CliquePacking& packing) {
    bool stable = true;
    for_each_switch(g, packing, [&](const SwitchMove& m) {
        stable = remainder_gain(g, packing, m) <= 0;
        return stable;
    });
    return stable;
}

struct EllSplit {
    std::uint64_t ell1 = 0;  // saturating edges with an end in V(R)
    std::uint64_t ell2 = 0;  // saturating edges inside the remainder
};

/// Splits the K_{p+1}-saturating edges of g by whether they touch the packed vertices.
inline EllSplit ell_split(const Graph& g, const CliquePacking& packing) {
    if (contains_clique(g, packing.p + 1)) throw clique_found("ell_split: graph contains K_" + std::to_string(packing.p + 1));
    EllSplit s;
    for (auto [u, v] : saturating_edges(g.rows(), packing.p + 1)) {
        if (packing.remainder.contains(u) && packing.remainder.contains(v))
            ++s.ell2;
        else
            ++s.ell1;
    }
    return s;
}

struct PackingAnalysis {
    std::size_t clique = 0;
    std::vector<int> R;
    std::vector<VertexSet> Z;  // Z[j], j = 0..p: remainder vertices with exactly j neighbours in R
    std::vector<Rational> z;   // |Z_j| / n
    std::vector<VertexSet> A;  // A[i-1] = common neighbourhood of R \ {v_i} in the remainder
    Rational r;
    std::uint64_t ell1 = 0;
    std::uint64_t ell2 = 0;
    bool z_sum_holds = false;         // sum_{j<p} z_j == 1 - p r
    bool a_mass_holds = false;         // sum |A_i| / n == z_{p-1}
    bool a_sets_valid = false;      // pairwise disjoint, independent, inside Z_{p-1}
    bool a_pairs_saturating = false;
};

/// Partition data for the packed clique at `index`. Throws clique_found when the local
/// data exposes a K_{p+1} (Z_p non-empty or an edge inside some A_i).
inline PackingAnalysis analyze(const Graph& g, const CliquePacking& packing, std::size_t index,
                               std::optional<EllSplit> split = std::nullopt) {
    if (index >= packing.size()) throw invalid_argument("analyze: no such packed clique");
    const int p = packing.p;
    const auto n = static_cast<std::int64_t>(g.order());
    PackingAnalysis a;
    a.clique = index;
    a.R = packing.cliques[index];
    a.r = packing.r();
    a.Z.assign(static_cast<std::size_t>(p + 1), VertexSet(g.order()));
    for (int w : packing.remainder) {
        std::size_t j = 0;
        for (int v : a.R) j += g.adjacent(v, w) ? 1 : 0;
        a.Z[j].insert(w);
    }
    if (!a.Z[static_cast<std::size_t>(p)].empty())
        throw clique_found("analyze: a remainder vertex sees all of R, so the host contains K_" + std::to_string(p + 1));
    Rational zsum = 0;
    for (const auto& zj : a.Z) {
        a.z.emplace_back(static_cast<std::int64_t>(zj.count()), n);
        zsum += a.z.back();
    }
    a.z_sum_holds = zsum == 1 - p * a.r;

    VertexSet seen(g.order());
    bool disjoint = true, independent = true, inside = true, saturating = true;
    std::size_t a_total = 0;
    for (int i = 0; i < p; ++i) {
        VertexSet Ai = packing.remainder;
        for (int k = 0; k < p; ++k)
            if (k != i) Ai &= g.neighbors(a.R[static_cast<std::size_t>(k)]);
        disjoint = disjoint && !Ai.intersects(seen);
        seen |= Ai;
        inside = inside && Ai.is_subset_of(a.Z[static_cast<std::size_t>(p - 1)]);
        for (int u : Ai) {
            if (g.neighbors(u).intersects(Ai)) independent = false;
            for (int w = Ai.next(u); w >= 0; w = Ai.next(w))
                if (!g.adjacent(u, w) && !saturating_pair(g.rows(), p + 1, u, w)) saturating = false;
        }
        a_total += Ai.count();
        a.A.push_back(std::move(Ai));
    }
    if (!independent || !disjoint)
        throw clique_found("analyze: A-sets overlap or contain an edge, so the host contains K_" + std::to_string(p + 1));
    a.a_sets_valid = disjoint && independent && inside;
    a.a_pairs_saturating = saturating;
    a.a_mass_holds = Rational(static_cast<std::int64_t>(a_total), n) == a.z[static_cast<std::size_t>(p - 1)];
    EllSplit s = split ? *split : ell_split(g, packing);
    a.ell1 = s.ell1;
    a.ell2 = s.ell2;
    return a;
}

struct RStar {
    std::size_t clique = 0;
    std::size_t edges_to_remainder = 0;  // e(R*, H)
    Rational edge_bound;
    bool edge_bound_holds = false;
    Rational z_top;  // z_{p-1}(R*)
    Rational top_bound;
    bool top_bound_holds = false;
};

/// The packed clique with the most edges into the remainder (lowest index on ties), with the
/// two lower bounds that hold for it when e(g) = ex(n, K_p).
inline RStar best_r_star(const Graph& g, const CliquePacking& packing) {
    const int p = packing.p;
    if (p < 3) throw invalid_argument("best_r_star needs p >= 3");
    if (g.size() != turan_number(g.order(), p))
        throw hypothesis_error("best_r_star: e(G) = " + std::to_string(g.size()) + " differs from ex(n,K_p) = " +
                               std::to_string(turan_number(g.order(), p)));
    if (packing.size() == 0) throw hypothesis_error("best_r_star: the packing is empty (G is K_p-free)");
    RStar best;
    for (std::size_t i = 0; i < packing.size(); ++i) {
        std::size_t e = clique_to_remainder_edges(g, packing, i);
        if (i == 0 || e > best.edges_to_remainder) {
            best.clique = i;
            best.edges_to_remainder = e;
        }
    }
    const auto n = static_cast<std::int64_t>(g.order());
    Rational r = packing.r();
    Rational d = delta(g.order(), p);
    best.edge_bound = formulas::r_star_edge_bound(n, p, r, d);
    best.edge_bound_holds = Rational(static_cast<std::int64_t>(best.edges_to_remainder)) >= best.edge_bound;
    std::size_t top = 0;
    const auto& R = packing.cliques[best.clique];
    for (int w : packing.remainder) {
        int j = 0;
        for (int v : R) j += g.adjacent(v, w) ? 1 : 0;
        if (j == p - 1) ++top;
    }
    best.z_top = Rational(static_cast<std::int64_t>(top), n);
    best.top_bound = formulas::r_star_top_bound(n, p, r, d);
    best.top_bound_holds = best.z_top >= best.top_bound;
    return best;
}

struct ConditionTwoCertificate {
    bool certified = false;              // packing is maximum and attains the largest e(H)
    std::size_t packing_remainder_edges = 0;
    std::size_t best_remainder_edges = 0;
    std::size_t maximum_packings = 0;
    CliquePacking best;                  // lexicographically first packing attaining the maximum
};

/// Checks, by enumerating every maximum packing, whether `packing` maximises e(H).
inline ConditionTwoCertificate certify_condition_ii(const Graph& g, const CliquePacking& packing,
                                                    const PackingOptions& options = {}) {
    auto all = all_maximum_packings(g, packing.p, options);
    ConditionTwoCertificate c;
    c.maximum_packings = all.size();
    c.packing_remainder_edges = remainder_edges(g, packing);
    bool first = true;
    for (auto& candidate : all) {
        std::size_t e = remainder_edges(g, candidate);
        if (first || e > c.best_remainder_edges) {
            c.best_remainder_edges = e;
            c.best = candidate;
            first = false;
        }
    }
    if (first) c.best = packing;
    bool is_maximum = all.empty() ? packing.size() == 0 : packing.size() == all.front().size();
    c.certified = is_maximum && c.packing_remainder_edges == c.best_remainder_edges;
    return c;
}

inline nlohmann::ordered_json to_json(const CliquePacking& packing) {
    nlohmann::ordered_json j;
    j["p"] = packing.p;
    j["cliques"] = packing.cliques;
    j["remainder"] = packing.remainder.to_vector();
    j["certified"] = packing.certified;
    return j;
}

}  // namespace satedge
