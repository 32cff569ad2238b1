#pragma once

#include "satedge/constructions.hpp"
#include "satedge/formulas.hpp"
#include "satedge/io.hpp"
#include "satedge/packing.hpp"
#include "satedge/parallel.hpp"
#include "satedge/rational.hpp"
#include "satedge/saturation.hpp"
#include "satedge/search.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace satedge {

enum class CheckStatus { pass, fail, skipped, informational };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::informational: return "informational";
    }
    return "?";
}

/// One verified relation `lhs relation rhs` on one instance.
struct CheckReport {
    std::string id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    CheckStatus status = CheckStatus::skipped;
    std::string relation;
    std::string lhs;
    std::string rhs;
    std::string reason;  // why skipped, or which standing hypothesis is out of range
    double elapsed_ms = 0;
};

namespace detail {

inline bool relation_holds(const Rational& lhs, const std::string& rel, const Rational& rhs) {
    if (rel == "==") return lhs == rhs;
    if (rel == ">=") return lhs >= rhs;
    if (rel == "<=") return lhs <= rhs;
    if (rel == ">") return lhs > rhs;
    if (rel == "<") return lhs < rhs;
    throw invalid_argument("unknown relation " + rel);
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Builds a report for `lhs rel rhs`. With `out_of_range` set, a violated relation is
/// recorded as informational instead of a failure.
inline CheckReport make_check(std::string id, nlohmann::ordered_json params, const Rational& lhs, const std::string& rel,
                              const Rational& rhs, const std::string& out_of_range = {}) {
    CheckReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.relation = rel;
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    bool holds = detail::relation_holds(lhs, rel, rhs);
    r.status = holds ? CheckStatus::pass : (out_of_range.empty() ? CheckStatus::fail : CheckStatus::informational);
    r.reason = out_of_range;
    return r;
}

inline CheckReport make_flag(std::string id, nlohmann::ordered_json params, bool holds, std::string detail_text = {}) {
    CheckReport r = make_check(std::move(id), std::move(params), holds ? 1 : 0, "==", 1);
    r.reason = std::move(detail_text);
    return r;
}

inline CheckReport make_skipped(std::string id, nlohmann::ordered_json params, std::string reason) {
    CheckReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.status = CheckStatus::skipped;
    r.reason = std::move(reason);
    return r;
}

inline Rational count_rat(std::uint64_t v) { return Rational(BigInt(v)); }

// ---- Constructions ------------------------------------------------------------------------

struct ConstructionSweep {
    int p_min = 3;
    int p_max = 5;
    std::vector<std::uint64_t> xs{1};
    std::vector<std::uint64_t> ys{0, 1, 2};
    unsigned threads = 0;
    bool share_twin_results = true;
};

/// Checks one h1(p, x, y): order, edge count, clique-freeness, the saturating count against
/// both closed forms, and that every saturating pair lies inside a V-part.
inline std::vector<CheckReport> verify_construction(int p, std::uint64_t x, std::uint64_t y, unsigned threads = 0,
                                                    bool share_twin_results = true) {
    nlohmann::ordered_json params{{"p", p}, {"x", x}, {"y", y}};
    std::vector<CheckReport> out;
    const auto q = static_cast<std::uint64_t>(p);
    if (p < 3 || x < 1 || !(q * (q - 1) * (3 * q - 4) * x > y)) {
        out.push_back(make_skipped("construction.h1", params, "infeasible parameters: need p >= 3, x >= 1 and p(p-1)(3p-4)x > y"));
        return out;
    }
    detail::Stopwatch clock;
    Construction c = h1(p, x, y);
    const Graph& g = c.graph();
    const std::uint64_t n = g.order();
    out.push_back(make_check("construction.order", params, count_rat(n), "==", count_rat(construction_modulus(p) * x + y)));
    out.push_back(make_check("construction.edges", params, count_rat(g.size()), "==", count_rat(turan_number(n, p))));
    auto clique = contains_clique(g, p + 1);
    out.push_back(make_flag("construction.clique_free", params, !clique, clique ? "found K_{p+1}" : ""));
    if (clique) return out;
    SaturationOptions so;
    so.threads = threads;
    so.materialize_edges = true;
    so.share_twin_results = share_twin_results;
    SaturationReport rep = count_saturating(g, p + 1, so);
    const auto pi = static_cast<std::int64_t>(p), xi = static_cast<std::int64_t>(x), yi = static_cast<std::int64_t>(y);
    out.push_back(make_check("construction.count_closed_form", params, count_rat(rep.total), "==", formulas::f_h1_closed(pi, xi, yi)));
    out.push_back(make_check("construction.count_binomial", params, count_rat(rep.total), "==", formulas::f_h1_binomial(pi, xi, yi)));
    out.push_back(make_check("construction.count_part_sizes", params, count_rat(rep.total), "==",
                             count_rat(count_saturating_blowup(c.blowup.spec, c.parts(), p))));
    if (rep.edges) {
        std::uint64_t outside = 0;
        for (auto [u, v] : *rep.edges) {
            auto a = c.blowup.part_of(u), b = c.blowup.part_of(v);
            if (a != b || c.parts()[a].name[0] != 'V') ++outside;
        }
        out.push_back(make_check("construction.pairs_inside_v_parts", params, count_rat(outside), "==", 0));
    }
    if (y == 0)
        out.push_back(make_check("construction.divisible_minimum", params, count_rat(rep.total), "==",
                                 formulas::divisible_minimum(static_cast<std::int64_t>(n), pi)));
    const double ms = clock.ms();
    for (auto& r : out) r.elapsed_ms = ms;
    return out;
}

inline std::vector<CheckReport> verify_constructions(const ConstructionSweep& sweep = {}) {
    std::vector<CheckReport> out;
    for (int p = sweep.p_min; p <= sweep.p_max; ++p)
        for (auto x : sweep.xs)
            for (auto y : sweep.ys) {
                auto part = verify_construction(p, x, y, sweep.threads, sweep.share_twin_results);
                out.insert(out.end(), part.begin(), part.end());
            }
    return out;
}

// ---- Reduction ----------------------------------------------------------------------------

/// Removes one edge of g that keeps a K_p and checks f_{p+1}(g) >= f_{p+1}(g - e). Edges
/// whose removal makes the edge itself saturating are avoided when possible, since that is
/// the one pair that can push the inequality the wrong way.
inline CheckReport verify_reduction(const Graph& g, int p, nlohmann::ordered_json params = nlohmann::ordered_json::object()) {
    detail::Stopwatch clock;
    params["p"] = p;
    params["n"] = g.order();
    if (contains_clique(g, p + 1)) throw hypothesis_error("reduction: the instance contains K_" + std::to_string(p + 1));
    if (g.size() != turan_number(g.order(), p) + 1)
        throw hypothesis_error("reduction: the instance has " + std::to_string(g.size()) + " edges, not ex(n,K_p)+1 = " +
                               std::to_string(turan_number(g.order(), p) + 1));
    if (!contains_clique(g, p)) throw hypothesis_error("reduction: the instance contains no K_" + std::to_string(p));
    std::optional<Edge> chosen, fallback;
    for (auto [u, v] : g.edges()) {
        Graph h = g.without_edge(u, v);
        if (!contains_clique(h, p)) continue;
        if (!fallback) fallback = Edge{u, v};
        if (!saturating_pair(h.rows(), p + 1, u, v)) {
            chosen = Edge{u, v};
            break;
        }
    }
    if (!chosen) chosen = fallback;
    if (!chosen) throw hypothesis_error("reduction: no edge removal keeps a K_" + std::to_string(p));
    Graph h = g.without_edge(chosen->first, chosen->second);
    params["removed"] = {chosen->first, chosen->second};
    auto r = make_check("reduction.monotone", params, count_rat(count_saturating(g, p + 1).total), ">=",
                        count_rat(count_saturating(h, p + 1).total));
    r.elapsed_ms = clock.ms();
    return r;
}

// ---- Packing checks -----------------------------------------------------------------------

/// Random K_p-free graph: pairs are visited in a seeded shuffle, each kept with probability
/// `keep` unless it would close a K_p. Uses raw engine output only, so it is portable.
inline Graph random_clique_free_graph(std::size_t n, int p, double keep, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> pairs;
    for (int v = 1; v < static_cast<int>(n); ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
    const auto threshold = static_cast<std::uint64_t>(keep * 18446744073709551615.0);
    GraphBuilder b(n);
    for (auto [u, v] : pairs) {
        if (rng() > threshold) continue;
        VertexSet common = b.rows()[static_cast<std::size_t>(u)] & b.rows()[static_cast<std::size_t>(v)];
        if (find_clique(b.rows(), common, p - 2)) continue;
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

struct PackingCheckOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t exhaustive_up_to = 14;  // certify the packing over all maximum packings up to this order
    PackingOptions packing{};
};

/// Builds a packing satisfying both extremal conditions (exhaustively for small graphs, by
/// switch-stability otherwise) and checks the partition identities, sampled switch
/// inequalities and, at the Turán edge count, the bounds for the best clique R*.
inline std::vector<CheckReport> verify_packing_checks(const Graph& g, int p, const PackingCheckOptions& options = {},
                                                      nlohmann::ordered_json params = nlohmann::ordered_json::object()) {
    detail::Stopwatch clock;
    params["p"] = p;
    params["n"] = g.order();
    params["seed"] = options.seed;
    std::vector<CheckReport> out;
    if (contains_clique(g, p + 1)) throw hypothesis_error("packing checks need a K_" + std::to_string(p + 1) + "-free graph");

    CliquePacking packing;
    try {
        packing = refine_packing(g, max_packing(g, p, options.packing));
        if (g.order() <= options.exhaustive_up_to) {
            auto cert = certify_condition_ii(g, packing, options.packing);
            packing = cert.best;
            params["packing"] = "exhaustive";
        } else {
            params["packing"] = "switch-stable";
        }
    } catch (const budget_exceeded& e) {
        out.push_back(make_skipped("packing.build", params, e.what()));
        return out;
    }
    out.push_back(make_flag("packing.switch_stable", params, is_switch_stable(g, packing)));

    EllSplit split = ell_split(g, packing);
    const std::uint64_t f = count_saturating(g, p + 1).total;
    out.push_back(make_check("packing.ell_split_total", params, count_rat(split.ell1 + split.ell2), "==", count_rat(f)));

    std::size_t z_ok = 0, a_mass_ok = 0, a_valid = 0, a_sat = 0;
    for (std::size_t i = 0; i < packing.size(); ++i) {
        PackingAnalysis a = analyze(g, packing, i, split);
        z_ok += a.z_sum_holds;
        a_mass_ok += a.a_mass_holds;
        a_valid += a.a_sets_valid;
        a_sat += a.a_pairs_saturating;
    }
    const auto k = count_rat(packing.size());
    out.push_back(make_check("packing.z_partition", params, count_rat(z_ok), "==", k));
    out.push_back(make_check("packing.a_mass", params, count_rat(a_mass_ok), "==", k));
    out.push_back(make_check("packing.a_sets_independent", params, count_rat(a_valid), "==", k));
    out.push_back(make_check("packing.a_pairs_saturating", params, count_rat(a_sat), "==", k));

    auto moves = enumerate_switches(g, packing);
    std::mt19937_64 rng(options.seed);
    std::size_t sampled = 0, held = 0;
    if (!moves.empty())
        for (std::size_t t = 0; t < options.trials; ++t) {
            const auto& m = moves[rng() % moves.size()];
            ++sampled;
            held += check_switch_inequality(g, packing, m).holds;
        }
    auto sw = make_check("packing.switch_inequality", params, count_rat(held), "==", count_rat(sampled));
    sw.reason = std::to_string(moves.size()) + " admissible switches";
    out.push_back(sw);

    const std::uint64_t n = g.order();
    if (p >= 3 && g.size() == turan_number(n, p) && packing.size() > 0) {
        const std::string range =
            n >= 120 * static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p) ? "" : "hypothesis-out-of-range: n < 120p^2";
        RStar rs = best_r_star(g, packing);
        params["r"] = to_string(packing.r());
        out.push_back(make_check("packing.r_star_edges", params, count_rat(rs.edges_to_remainder), ">=", rs.edge_bound, range));
        out.push_back(make_check("packing.r_star_top", params, rs.z_top, ">=", rs.top_bound, range));
        const auto ni = static_cast<std::int64_t>(n);
        out.push_back(make_check("packing.ell1_bound", params, count_rat(split.ell1), ">=",
                                 formulas::ell1_bound(ni, p, packing.r(), delta(n, p)), range));
        PackingAnalysis a = analyze(g, packing, rs.clique, split);
        std::vector<int> empty;
        Rational pairs_in_a = 0;
        for (std::size_t i = 0; i < a.A.size(); ++i) {
            if (a.A[i].empty()) empty.push_back(static_cast<int>(i + 1));
            pairs_in_a += choose2(count_rat(a.A[i].count()));
        }
        out.push_back(make_check("packing.a_pairs_convexity", params, pairs_in_a, ">=",
                                 formulas::jensen_pairs(ni, p, a.z[static_cast<std::size_t>(p - 1)])));
        CheckReport probe;
        probe.id = "packing.empty_a_probe";
        probe.params = params;
        probe.status = CheckStatus::informational;
        probe.relation = "observed";
        probe.lhs = nlohmann::json(empty).dump();
        probe.rhs = "indices i with A_i(R*) empty";
        out.push_back(probe);
        if (!empty.empty())
            out.push_back(make_check("packing.ell2_bound", params, count_rat(split.ell2), ">=",
                                     formulas::ell2_bound(ni, p, packing.r(), delta(n, p)), range));
    }
    const double ms = clock.ms();
    for (auto& r : out) r.elapsed_ms = ms;
    return out;
}

// ---- Formula identities -------------------------------------------------------------------

/// Compares two forms of one polynomial at every integer in [lo, hi].
inline CheckReport compare_forms(std::string id, const std::function<Rational(const Rational&)>& factored,
                                 const std::function<Rational(const Rational&)>& expanded, std::int64_t lo, std::int64_t hi) {
    std::int64_t bad = 0, first_bad = 0;
    for (std::int64_t p = lo; p <= hi; ++p)
        if (factored(Rational(p)) != expanded(Rational(p))) {
            if (!bad) first_bad = p;
            ++bad;
        }
    auto r = make_check(std::move(id), {{"p_min", lo}, {"p_max", hi}}, Rational(bad), "==", 0);
    if (bad) r.reason = "first mismatch at p=" + std::to_string(first_bad);
    return r;
}

struct FormulaSweep {
    std::int64_t positivity_p_max = 10000;
    std::int64_t quadratic_p_max = 20;
    std::vector<std::int64_t> quadratic_n{1, 66, 1000};
};

inline std::vector<CheckReport> verify_formulas(const FormulaSweep& sweep = {}) {
    std::vector<CheckReport> out;
    detail::Stopwatch clock;
    auto s = formulas::sweep_positivity(sweep.positivity_p_max);
    nlohmann::ordered_json sp{{"p_min", s.p_min}, {"p_max", s.p_max}};
    auto sweep_report = make_flag("positivity.sweep", sp, s.covers_all_p(),
                                  "dominance from p=" + std::to_string(std::max(s.f_dominance_from, s.g_dominance_from)));
    out.push_back(sweep_report);
    out.push_back(make_check("positivity.f_min", sp, s.f_min, ">=", 0));
    out.push_back(make_check("positivity.g_min", sp, s.g_min, ">=", 0));
    out.push_back(make_check("positivity.f_margin", {{"p", 3}}, formulas::positivity_f(3), "==", rat(7, 10)));
    out.push_back(make_check("positivity.g_margin", {{"p", 3}}, formulas::positivity_g(3), "==", 4));
    out.push_back(compare_forms("positivity.f_forms", formulas::positivity_f, formulas::positivity_f_expanded, 3, 200));
    out.push_back(compare_forms("positivity.g_forms", formulas::positivity_g, formulas::positivity_g_expanded, 3, 200));

    for (std::int64_t p = 3; p <= sweep.quadratic_p_max; ++p)
        for (auto n : sweep.quadratic_n) {
            auto c = formulas::quadratic_identity(p, n);
            nlohmann::ordered_json qp{{"p", p}, {"n", n}};
            out.push_back(make_check("quadratic.value_at_minimizer", qp, c.H_at_r_star, "==", c.rhs));
            out.push_back(make_check("quadratic.stationary", qp, c.H_prime_at_r_star, "==", 0));
            out.push_back(make_check("quadratic.convex", qp, c.H_second, ">", 0));
            out.push_back(make_flag("quadratic.scaling", qp, c.scaling_matches));
        }

    out.push_back(make_check("formula.main_term", {{"p", 3}}, formulas::main_term(3), "==", rat(2, 33)));
    out.push_back(make_check("formula.divisible_minimum", {{"n", 66}, {"p", 3}}, formulas::divisible_minimum(66, 3), "==", 246));
    for (std::int64_t p = 3; p <= 8; ++p)
        for (std::int64_t x = 1; x <= 3; ++x)
            for (std::int64_t y : {0, 1, 2, 5}) {
                nlohmann::ordered_json fp{{"p", p}, {"x", x}, {"y", y}};
                out.push_back(make_check("formula.h1_forms", fp, formulas::f_h1_closed(p, x, y), "==", formulas::f_h1_binomial(p, x, y)));
            }
    const double ms = clock.ms();
    for (auto& r : out) r.elapsed_ms = ms;
    return out;
}

// ---- Small exhaustive search --------------------------------------------------------------

/// Zero region and jump positivity of f_{p+1}(n, e) around e = ex(n, K_p).
inline std::vector<CheckReport> verify_jump(int n_min, int n_max, int p, const SearchOptions& options = {}) {
    std::vector<CheckReport> out;
    for (int n = n_min; n <= n_max; ++n) {
        detail::Stopwatch clock;
        const auto ex = turan_number(static_cast<std::uint64_t>(n), p);
        std::uint64_t worst = 0;
        bool exact = true;
        for (std::uint64_t e = 0; e <= ex; ++e) {
            auto r = min_saturating(n, e, p + 1, options);
            exact = exact && r.exact;
            worst = std::max(worst, r.minimum.value_or(0));
        }
        nlohmann::ordered_json params{{"n", n}, {"p", p}};
        if (!exact) {
            out.push_back(make_skipped("search.zero_region", params, "search budget exhausted"));
            continue;
        }
        out.push_back(make_check("search.zero_region", params, count_rat(worst), "==", 0));
        auto jump = min_saturating_at_jump(n, p, options);
        if (!jump.exact) {
            out.push_back(make_skipped("search.jump_positive", params, "search budget exhausted"));
            continue;
        }
        auto r = make_check("search.jump_positive", params, count_rat(*jump.minimum), ">", 0);
        r.elapsed_ms = clock.ms();
        out.push_back(r);
    }
    return out;
}

// ---- Orchestration ------------------------------------------------------------------------

struct VerifyOptions {
    bool small = true;
    unsigned threads = 0;
    std::uint64_t seed = 20240601;
    std::size_t random_graphs = 0;  // 0: 10 when small, 50 otherwise
};

/// The full harness. Sections run concurrently; the report order is fixed by section and
/// then by check id, independent of scheduling.
inline std::vector<CheckReport> verify_all(const VerifyOptions& options = {}) {
    using Section = std::function<std::vector<CheckReport>()>;
    std::vector<Section> sections;
    sections.push_back([&] {
        ConstructionSweep s;
        s.p_max = options.small ? 4 : 5;
        s.xs = options.small ? std::vector<std::uint64_t>{1} : std::vector<std::uint64_t>{1, 2};
        s.threads = 1;
        return verify_constructions(s);
    });
    sections.push_back([&] {
        Construction c = h2(3, 1, 0);
        std::vector<CheckReport> out;
        auto trimmed = trim_to_target(c.graph(), c.parts(), turan_number(c.graph().order(), 3) + 1, 3);
        out.push_back(verify_reduction(trimmed.graph, 3, {{"instance", "h2(3,1,0) trimmed"}}));
        return out;
    });
    sections.push_back([&] {
        std::vector<CheckReport> out;
        PackingCheckOptions po;
        po.seed = options.seed;
        auto add = [&](std::vector<CheckReport> part) { out.insert(out.end(), part.begin(), part.end()); };
        add(verify_packing_checks(h1(3, 1, 0).graph(), 3, po, {{"instance", "h1(3,1,0)"}}));
        GraphBuilder k6(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) k6.add_edge(u, v);
        add(verify_packing_checks(std::move(k6).build(), 6, po, {{"instance", "K6"}}));
        const std::size_t count = options.random_graphs ? options.random_graphs : (options.small ? 10 : 50);
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint64_t seed = options.seed + i;
            const std::size_t n = 8 + i % 7;
            Graph g = random_clique_free_graph(n, 4, 0.6, seed);
            po.seed = seed;
            add(verify_packing_checks(g, 3, po, {{"instance", "random"}, {"graph6", graph6_encode(g)}}));
        }
        return out;
    });
    sections.push_back([&] { return verify_formulas(options.small ? FormulaSweep{100, 20, {1, 66, 1000}} : FormulaSweep{}); });
    sections.push_back([&] {
        SearchOptions so;
        so.threads = 1;
        so.emit_witnesses = false;
        return verify_jump(5, options.small ? 7 : 8, 3, so);
    });
    std::vector<std::vector<CheckReport>> results(sections.size());
    parallel_for(sections.size(), options.threads, [&](std::size_t i) { results[i] = sections[i](); });
    std::vector<CheckReport> out;
    for (auto& part : results) {
        std::stable_sort(part.begin(), part.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline bool any_failure(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.status == CheckStatus::fail) return true;
    return false;
}

inline nlohmann::ordered_json to_json(const CheckReport& r, bool with_timing = true) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["relation"] = r.relation;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<CheckReport>& reports, bool with_timing = true) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, with_timing));
    return arr;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::string to_csv(const std::vector<CheckReport>& reports, bool with_timing = true) {
    std::ostringstream os;
    os << "id,params,status,lhs,relation,rhs,reason" << (with_timing ? ",elapsed_ms" : "") << "\n";
    for (const auto& r : reports) {
        os << csv_field(r.id) << ',' << csv_field(r.params.dump()) << ',' << to_string(r.status) << ',' << csv_field(r.lhs)
           << ',' << csv_field(r.relation) << ',' << csv_field(r.rhs) << ',' << csv_field(r.reason);
        if (with_timing) os << ',' << r.elapsed_ms;
        os << "\n";
    }
    return os.str();
}

}  // namespace satedge
