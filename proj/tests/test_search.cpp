#include "oracles.hpp"

#include "satedge/canon.hpp"
#include "satedge/constructions.hpp"
#include "satedge/io.hpp"
#include "satedge/search.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace satedge;

namespace {

// f_p(n, e) by scanning every labelled graph on n vertices.
std::map<std::uint64_t, std::uint64_t> brute_minimum_by_edges(int n, int p) {
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    std::map<std::uint64_t, std::uint64_t> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> chosen;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1u) chosen.push_back(pairs[k]);
        Graph g = build_graph(static_cast<std::size_t>(n), chosen);
        if (oracle::has_clique(g, p)) continue;
        const std::uint64_t f = oracle::count_saturating(g, p);
        auto [it, fresh] = best.emplace(chosen.size(), f);
        if (!fresh) it->second = std::min(it->second, f);
    }
    return best;
}

SmallGraph random_small(int n, double density, std::uint64_t seed) {
    return SmallGraph::from_graph(oracle::random_graph(static_cast<std::size_t>(n), density, seed));
}

}  // namespace

TEST(Canon, InvariantUnderRelabelling) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int n = 2 + static_cast<int>(seed % 10);
        Graph g = oracle::random_graph(static_cast<std::size_t>(n), 0.2 + 0.003 * static_cast<double>(seed), seed);
        Graph h = oracle::relabel(g, oracle::random_permutation(static_cast<std::size_t>(n), seed + 1000));
        EXPECT_EQ(canonical_code(SmallGraph::from_graph(g)), canonical_code(SmallGraph::from_graph(h))) << seed;
        EXPECT_TRUE(isomorphic(SmallGraph::from_graph(g), SmallGraph::from_graph(h)));
    }
}

TEST(Canon, CountsIsomorphismClasses) {
    // Unlabelled graphs on 1..6 vertices: 1, 2, 4, 11, 34, 156.
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        const int m = n * (n - 1) / 2;
        std::set<std::uint64_t> classes;
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << m); ++c) classes.insert(canonical_code(SmallGraph::from_code(n, c)));
        EXPECT_EQ(classes.size(), expected[n - 1]) << n;
    }
}

TEST(Canon, FormIsAFixedPointAndPreservesSize) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        SmallGraph g = random_small(11, 0.5, seed);
        SmallGraph c = canonical_form(g);
        EXPECT_EQ(c.size(), g.size());
        EXPECT_EQ(canonical_code(c), c.code());
    }
    EXPECT_FALSE(isomorphic(SmallGraph::from_graph(turan_graph(6, 2)), SmallGraph::from_graph(turan_graph(6, 3))));
    EXPECT_THROW(SmallGraph::from_graph(turan_graph(12, 2)), invalid_argument);
}

TEST(MinSaturating, Examples) {
    SearchResult a = min_saturating(6, 9, 4);
    ASSERT_TRUE(a.exact);
    EXPECT_EQ(a.minimum, 0u);
    ASSERT_FALSE(a.witnesses.empty());
    EXPECT_EQ(count_saturating(graph6_decode(a.witnesses[0]), 4).total, 0u);
    SearchResult b = min_saturating(5, 7, 4);
    ASSERT_TRUE(b.exact);
    EXPECT_GT(*b.minimum, 0u);
    EXPECT_THROW(min_saturating(5, 11, 4), infeasible_error);
    EXPECT_THROW(min_saturating(4, 6, 4), infeasible_error);
}

TEST(MinSaturating, MatchesLabelledBruteForce) {
    for (int n = 1; n <= 6; ++n)
        for (int p = 3; p <= 4; ++p)
            for (auto [e, f] : brute_minimum_by_edges(n, p)) {
                SearchResult r = min_saturating(n, e, p);
                ASSERT_TRUE(r.exact);
                EXPECT_EQ(r.minimum, f) << "n=" << n << " e=" << e << " p=" << p;
            }
}

TEST(MinSaturating, WitnessesAttainTheMinimumAndAreDistinct) {
    SearchResult r = min_saturating(7, 13, 4);
    ASSERT_TRUE(r.exact);
    std::set<std::string> seen(r.witnesses.begin(), r.witnesses.end());
    EXPECT_EQ(seen.size(), r.witnesses.size());
    EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
    for (const auto& w : r.witnesses) {
        Graph g = graph6_decode(w);
        EXPECT_EQ(g.order(), 7u);
        EXPECT_EQ(g.size(), 13u);
        EXPECT_FALSE(contains_clique(g, 4));
        EXPECT_EQ(count_saturating(g, 4).total, *r.minimum);
    }
    SearchOptions quiet;
    quiet.emit_witnesses = false;
    EXPECT_TRUE(min_saturating(7, 13, 4, quiet).witnesses.empty());
}

TEST(MinSaturating, ThreadCountDoesNotChangeTheResult) {
    SearchOptions one;
    one.threads = 1;
    SearchOptions many;
    many.threads = 8;
    for (int n = 6; n <= 8; ++n) {
        const std::uint64_t e = static_cast<std::uint64_t>(n * n / 4 - 1);
        SearchResult a = min_saturating(n, e, 4, one), b = min_saturating(n, e, 4, many);
        EXPECT_EQ(a.minimum, b.minimum);
        EXPECT_EQ(a.witnesses, b.witnesses);
        EXPECT_EQ(a.explored, b.explored);
    }
}

TEST(MinSaturating, BudgetAndOrderLimitsAreReported) {
    SearchOptions tight;
    tight.budget = 10;
    SearchResult r = min_saturating(8, 10, 4, tight);
    EXPECT_FALSE(r.exact);
    EXPECT_FALSE(r.note.empty());
    SearchResult big = min_saturating(12, 30, 4);
    EXPECT_FALSE(big.exact);
    EXPECT_FALSE(big.note.empty());
}

TEST(Jump, SmallOrders) {
    // K4-saturating count at one edge past the bipartite Turán number.
    const std::uint64_t expected[] = {1, 1, 2, 3};
    for (int n = 5; n <= 8; ++n) {
        SearchResult r = min_saturating_at_jump(n, 3);
        ASSERT_TRUE(r.exact);
        EXPECT_EQ(r.e, turan_number(static_cast<std::uint64_t>(n), 3) + 1);
        EXPECT_EQ(r.minimum, expected[n - 5]) << n;
    }
}

TEST(Constrained, ExcludesTheTuranGraph) {
    SearchResult r = min_saturating_constrained(6, 3);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.minimum, 0u);
    const std::string turan = graph6_encode(SmallGraph::from_graph(turan_graph(6, 2)).to_graph());
    for (const auto& w : r.witnesses) {
        EXPECT_FALSE(isomorphic(SmallGraph::from_graph(graph6_decode(w)), SmallGraph::from_graph(turan_graph(6, 2))));
        EXPECT_NE(w, turan);
    }
    // At n = 4 the K4-free graphs with four edges are C4 and the paw; only the paw remains.
    SearchResult paw = min_saturating_constrained(4, 3);
    ASSERT_TRUE(paw.exact);
    EXPECT_EQ(paw.minimum, 0u);
    ASSERT_EQ(paw.witnesses.size(), 1u);
    EXPECT_TRUE(contains_clique(graph6_decode(paw.witnesses[0]), 3));
    EXPECT_THROW(min_saturating_constrained(6, 2), invalid_argument);
}
