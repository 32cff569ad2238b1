#include "oracles.hpp"

#include "satedge/constructions.hpp"

#include <gtest/gtest.h>

using namespace satedge;

TEST(TuranGraph, Examples) {
    Graph k33 = turan_graph(6, 2);
    EXPECT_EQ(k33.size(), 9u);
    EXPECT_FALSE(contains_clique(k33, 3));
    Blowup t73 = turan_blowup(7, 3);
    EXPECT_EQ(t73.parts[0].size(), 3);
    EXPECT_EQ(t73.parts[1].size(), 2);
    EXPECT_EQ(t73.parts[2].size(), 2);
    EXPECT_EQ(t73.graph.size(), 16u);
    EXPECT_EQ(turan_graph(4, 4).size(), 6u);
}

TEST(TuranGraph, EdgeCountMatchesTuranNumber) {
    for (std::size_t n = 0; n <= 40; ++n)
        for (int r = 1; r <= 7; ++r) {
            Graph t = turan_graph(n, r);
            EXPECT_EQ(t.size(), turan_number(n, r + 1));
            if (n > static_cast<std::size_t>(r)) {
                EXPECT_FALSE(contains_clique(t, r + 1));
            }
        }
}

TEST(TuranNumber, Examples) {
    EXPECT_EQ(turan_number(66, 3), 1089u);
    EXPECT_EQ(turan_number(7, 3), 12u);
    EXPECT_EQ(turan_number(5, 6), 10u);
    EXPECT_THROW(turan_number(5, 1), invalid_argument);
}

TEST(TuranNumber, IsTheExtremalNumberForSmallGraphs) {
    // Brute force over all labelled graphs on up to 6 vertices.
    for (int n = 1; n <= 6; ++n) {
        std::vector<Edge> pairs;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
        for (int p = 3; p <= 4; ++p) {
            std::size_t best = 0;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
                std::vector<Edge> chosen;
                for (std::size_t k = 0; k < pairs.size(); ++k)
                    if ((mask >> k) & 1u) chosen.push_back(pairs[k]);
                if (chosen.size() <= best) continue;
                if (!oracle::has_clique(build_graph(static_cast<std::size_t>(n), chosen), p)) best = chosen.size();
            }
            EXPECT_EQ(turan_number(static_cast<std::uint64_t>(n), p), best) << "n=" << n << " p=" << p;
        }
    }
}

TEST(Delta, Examples) {
    EXPECT_EQ(delta(66, 3), 0);
    EXPECT_EQ(delta(7, 3), rat(1, 4));
    EXPECT_EQ(delta(8, 4), rat(1, 3));
    EXPECT_THROW(delta(8, 2), invalid_argument);
}

TEST(Delta, ExactTuranIdentity) {
    for (std::int64_t n = 0; n <= 500; ++n)
        for (int p = 3; p <= 10; ++p) {
            Rational nn(n), q(p);
            Rational d = delta(static_cast<std::uint64_t>(n), p);
            EXPECT_EQ(Rational(static_cast<std::int64_t>(turan_number(static_cast<std::uint64_t>(n), p))),
                      (q - 2) * nn * nn / (2 * (q - 1)) - d);
            EXPECT_GE(d, 0);
            EXPECT_LE(d, (q - 1) / 8);
            EXPECT_EQ(d == 0, n % (p - 1) == 0);
        }
}

TEST(BaseGraph, Examples) {
    Graph b3 = base_graph(3);
    EXPECT_EQ(b3.order(), 5u);
    EXPECT_EQ(b3.size(), 6u);
    EXPECT_EQ(b3.degree(0), 2u);
    Graph b4 = base_graph(4);
    EXPECT_EQ(b4.order(), 7u);
    EXPECT_EQ(b4.degree(0), 3u);
    EXPECT_EQ(b4.size(), 12u + 3u);
    for (int p = 3; p <= 7; ++p) {
        Graph b = base_graph(p);
        EXPECT_FALSE(contains_clique(b, p + 1));
        for (int i = 1; i < p; ++i) EXPECT_FALSE(b.adjacent(i, p - 1 + i));  // v_i and u_i share a part
    }
    EXPECT_THROW(base_graph(2), invalid_argument);
}

TEST(BlowUp, Examples) {
    Blowup k33 = blow_up({build_graph(2, {{0, 1}}), {3, 3}, {}});
    EXPECT_EQ(k33.graph, turan_graph(6, 2));
    Blowup h = blow_up({base_graph(3), {4, 16, 16, 15, 15}, base_graph_names(3)});
    EXPECT_EQ(h.graph.order(), 66u);
    EXPECT_EQ(h.graph.size(), 1089u);
    Graph g = oracle::random_graph(9, 0.5, 3);
    EXPECT_EQ(blow_up({g, std::vector<std::size_t>(9, 1), {}}).graph, g);
}

TEST(BlowUp, EdgeCountIsSumOverBaseEdges) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph base = oracle::random_graph(6, 0.5, seed);
        std::vector<std::size_t> sizes;
        for (int i = 0; i < 6; ++i) sizes.push_back((seed * 7 + static_cast<std::uint64_t>(i) * 3) % 5);
        BlowupSpec spec{base, sizes, {}};
        Blowup b = blow_up(spec);
        EXPECT_EQ(b.graph.size(), spec.edge_count());
        EXPECT_EQ(b.graph.order(), spec.vertex_count());
        for (const auto& part : b.parts) EXPECT_EQ(edges_within(b.graph, part.as_set(b.graph.order())), 0u);
    }
}

TEST(H0, Examples) {
    Construction a = h0(3, 1);
    EXPECT_EQ(a.graph().order(), 66u);
    EXPECT_EQ(a.graph().size(), 1089u);
    EXPECT_FALSE(contains_clique(a.graph(), 4));
    EXPECT_EQ(h0(4, 1).graph().order(), 336u);
    Construction b = h0(3, 2);
    EXPECT_EQ(b.graph().order(), 132u);
    EXPECT_EQ(b.graph().size(), 4356u);
    EXPECT_THROW(h0(3, 0), invalid_argument);
}

TEST(H0, EdgeCountFormula) {
    for (int p = 3; p <= 6; ++p) {
        Construction c = h0(p, 1);
        const std::uint64_t m = construction_modulus(p);
        EXPECT_EQ(Rational(static_cast<std::int64_t>(c.graph().size())), Rational(p - 2, 2 * (p - 1)) * Rational(static_cast<std::int64_t>(m * m)));
    }
}

TEST(H1, Examples) {
    EXPECT_EQ(h1(3, 1, 0).graph(), h0(3, 1).graph());
    Construction c = h1(3, 1, 2);
    EXPECT_EQ(c.graph().order(), 68u);
    EXPECT_EQ(c.graph().size(), 1156u);
    EXPECT_THROW(h1(3, 1, 31), invalid_argument);
    EXPECT_NO_THROW(h1(3, 1, 29));
}

TEST(H1, ExtremalAndCliqueFreeAcrossParameters) {
    for (int p = 3; p <= 6; ++p)
        for (std::uint64_t x = 1; x <= 2; ++x) {
            if (p >= 5 && x == 2) continue;  // covered by the acceptance sweep
            for (std::uint64_t y : {0u, 1u, 2u, 5u}) {
                Construction c = h1(p, x, y);
                const std::uint64_t n = construction_modulus(p) * x + y;
                ASSERT_EQ(c.graph().order(), n);
                EXPECT_EQ(c.graph().size(), turan_number(n, p)) << p << " " << x << " " << y;
                EXPECT_FALSE(contains_clique(c.graph(), p + 1));
            }
        }
}

TEST(H1, DeletedVerticesInduceBalancedSplit) {
    Construction c = h1(4, 1, 5);
    // U-parts shrink by 2, 2, 1.
    const auto ui = static_cast<int>(4 * (3 * 4 - 4));
    EXPECT_EQ(c.parts()[4].size(), ui - 2);
    EXPECT_EQ(c.parts()[5].size(), ui - 2);
    EXPECT_EQ(c.parts()[6].size(), ui - 1);
}

TEST(H2, Examples) {
    Construction c = h2(3, 1, 0);
    EXPECT_EQ(c.graph().order(), 66u);
    EXPECT_EQ(c.parts()[0].size(), 5);
    EXPECT_GT(c.graph().size(), turan_number(66, 3));
    EXPECT_FALSE(contains_clique(c.graph(), 4));
    EXPECT_THROW(h2(3, 1, 30), invalid_argument);
    EXPECT_NO_THROW(h2(3, 1, 28));
}

TEST(H2, SurplusOverTuranGrowsWithN) {
    for (int p = 3; p <= 5; ++p) {
        Construction c = h2(p, 1, 1);
        EXPECT_GT(c.graph().size(), turan_number(c.graph().order(), p));
        EXPECT_FALSE(contains_clique(c.graph(), p + 1));
    }
}

TEST(Trim, ReachesJumpWithoutChangingTheCount) {
    Construction c = h2(3, 2, 0);
    const std::uint64_t target = turan_number(c.graph().order(), 3) + 1;
    ASSERT_GT(c.graph().size(), target);
    const std::uint64_t before = count_saturating(c.graph(), 4).total;
    TrimResult t = trim_to_target(c.graph(), c.parts(), target, 3);
    EXPECT_EQ(t.graph.size(), target);
    EXPECT_EQ(t.saturating, before);
    EXPECT_EQ(count_saturating(t.graph, 4).total, before);
    EXPECT_EQ(t.removed.size(), c.graph().size() - target);
    for (auto [u, v] : t.removed) {
        bool touches_u = false;
        for (const auto& part : c.parts())
            if (part.name[0] == 'U' && (part.contains(u) || part.contains(v))) touches_u = true;
        EXPECT_TRUE(touches_u);
    }
}

TEST(Trim, NoOpAndInfeasibleTargets) {
    Construction c = h2(3, 1, 0);
    TrimResult same = trim_to_target(c.graph(), c.parts(), c.graph().size(), 3);
    EXPECT_EQ(same.graph, c.graph());
    EXPECT_TRUE(same.removed.empty());
    EXPECT_THROW(trim_to_target(c.graph(), c.parts(), 0, 3), infeasible_error);
    EXPECT_THROW(trim_to_target(c.graph(), c.parts(), c.graph().size() + 1, 3), invalid_argument);
}

TEST(Decompose, Examples) {
    auto a = decompose_n(66, 3);
    EXPECT_EQ(a.x, 1u);
    EXPECT_EQ(a.y, 0u);
    auto b = decompose_n(68, 3);
    EXPECT_EQ(b.x, 1u);
    EXPECT_EQ(b.y, 2u);
    auto c = decompose_n(65, 3);
    EXPECT_EQ(c.x, 0u);
    EXPECT_EQ(c.y, 65u);
    for (std::uint64_t n = 0; n < 2000; n += 7) {
        auto d = decompose_n(n, 4);
        EXPECT_EQ(d.modulus * d.x + d.y, n);
        EXPECT_LT(d.y, d.modulus);
    }
}
