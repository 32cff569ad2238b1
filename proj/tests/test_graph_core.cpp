#include "oracles.hpp"

#include "satedge/cliques.hpp"
#include "satedge/constructions.hpp"
#include "satedge/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace satedge;

namespace {

Graph cycle(int n) {
    GraphBuilder b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph complete(int n) {
    GraphBuilder b(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

void expect_well_formed(const Graph& g) {
    std::size_t degree_sum = 0;
    for (int v = 0; v < static_cast<int>(g.order()); ++v) {
        EXPECT_FALSE(g.adjacent(v, v));
        for (int u : g.neighbors(v)) EXPECT_TRUE(g.adjacent(u, v));
        degree_sum += g.degree(v);
    }
    EXPECT_EQ(degree_sum, 2 * g.size());
}

}  // namespace

TEST(VertexSet, BasicOperations) {
    VertexSet s(130, {0, 64, 129});
    EXPECT_EQ(s.count(), 3u);
    EXPECT_EQ(s.first(), 0);
    EXPECT_EQ(s.next(0), 64);
    EXPECT_EQ(s.next(64), 129);
    EXPECT_EQ(s.next(129), -1);
    EXPECT_EQ(s.complement().count(), 127u);
    VertexSet t(130, {64, 100});
    EXPECT_EQ((s & t).to_vector(), std::vector<int>({64}));
    EXPECT_EQ((s | t).count(), 4u);
    EXPECT_EQ((s - t).to_vector(), std::vector<int>({0, 129}));
    EXPECT_TRUE(s.intersects(t));
    s.keep_above(0);
    EXPECT_EQ(s.to_vector(), std::vector<int>({64, 129}));
    EXPECT_TRUE(VertexSet(130).empty());
    EXPECT_EQ(VertexSet::full(130).count(), 130u);
}

TEST(BuildGraph, Triangle) {
    Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(g.size(), 3u);
    EXPECT_TRUE(contains_clique(g, 3));
}

TEST(BuildGraph, FiveCycle) {
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_EQ(g.size(), 5u);
    EXPECT_EQ(g, cycle(5));
}

TEST(BuildGraph, SymmetricPairIsDeduplicated) {
    Graph g = build_graph(2, {{0, 1}, {1, 0}});
    EXPECT_EQ(g.size(), 1u);
}

TEST(BuildGraph, RejectsOutOfRangeAndLoops) {
    EXPECT_THROW(build_graph(3, {{0, 3}}), invalid_argument);
    EXPECT_THROW(build_graph(3, {{-1, 0}}), invalid_argument);
    EXPECT_THROW(build_graph(3, {{1, 1}}), invalid_argument);
}

TEST(BuildGraph, VertexCapIsEnforced) {
    const auto saved = vertex_cap();
    set_vertex_cap(10);
    EXPECT_THROW(GraphBuilder(11), invalid_argument);
    EXPECT_NO_THROW(GraphBuilder(10));
    set_vertex_cap(saved);
}

TEST(BuildGraph, RandomGraphsAreWellFormed) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) expect_well_formed(oracle::random_graph(3 + seed % 40, 0.4, seed));
}

TEST(CommonNeighborhood, Examples) {
    Graph c5 = cycle(5);
    EXPECT_EQ(common_neighborhood(c5, VertexSet(5, {0, 2})).to_vector(), std::vector<int>({1}));
    EXPECT_EQ(common_neighborhood(complete(4), VertexSet(4, {0, 1})).to_vector(), std::vector<int>({2, 3}));
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(common_neighborhood(path, VertexSet(3, {0, 2})).to_vector(), std::vector<int>({1}));
    EXPECT_THROW(common_neighborhood(c5, VertexSet(5)), invalid_argument);
}

TEST(CommonNeighborhood, MatchesRowIntersectionExhaustively) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracle::random_graph(10, 0.5, seed);
        for (int u = 0; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v) {
                VertexSet expected(10);
                for (int w = 0; w < 10; ++w)
                    if (g.adjacent(u, w) && g.adjacent(v, w)) expected.insert(w);
                EXPECT_EQ(common_neighborhood(g, VertexSet(10, {u, v})), expected);
            }
    }
}

TEST(EdgesBetween, Examples) {
    Graph k33 = turan_graph(6, 2);
    EXPECT_EQ(edges_between(k33, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})), 9u);
    Graph c5 = cycle(5);
    EXPECT_EQ(edges_between(c5, VertexSet(5, {0}), VertexSet(5, {2, 3})), 0u);
    EXPECT_EQ(edges_between(c5, VertexSet(5, {0, 1}), VertexSet(5, {2, 4})), 2u);
    EXPECT_THROW(edges_between(c5, VertexSet(5, {0, 1}), VertexSet(5, {1, 2})), invalid_argument);
}

TEST(Cliques, ContainsCliqueExamples) {
    EXPECT_FALSE(contains_clique(cycle(5), 3));
    Graph k4_minus = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto w = contains_clique(k4_minus, 3);
    ASSERT_TRUE(w);
    EXPECT_TRUE(is_clique(k4_minus, *w));
    EXPECT_FALSE(contains_clique(turan_graph(6, 2), 3));
    EXPECT_TRUE(contains_clique(cycle(5), 1));
}

TEST(Cliques, EnumerationExamples) {
    EXPECT_EQ(enumerate_cliques(complete(4), 3).size(), 4u);
    EXPECT_TRUE(enumerate_cliques(cycle(5), 3).empty());
    EXPECT_EQ(count_cliques(h1(3, 1, 0).graph(), 3), 1024u);
}

TEST(Cliques, EnumerationIsLexicographicAndComplete) {
    auto cliques = enumerate_cliques(complete(5), 3);
    ASSERT_EQ(cliques.size(), 10u);
    EXPECT_EQ(cliques.front(), std::vector<int>({0, 1, 2}));
    EXPECT_TRUE(std::is_sorted(cliques.begin(), cliques.end()));
}

TEST(Cliques, AgreeWithSubsetOracle) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t n = 5 + seed % 8;
        Graph g = oracle::random_graph(n, 0.3 + 0.01 * static_cast<double>(seed % 40), seed);
        for (int p = 1; p <= 5; ++p) {
            const auto expected = oracle::count_cliques(g, p);
            EXPECT_EQ(count_cliques(g, p), expected) << "seed " << seed << " p " << p;
            EXPECT_EQ(static_cast<bool>(contains_clique(g, p)), expected > 0) << "seed " << seed << " p " << p;
        }
    }
}

TEST(Graph6, TriangleEncoding) { EXPECT_EQ(graph6_encode(complete(3)), "Bw"); }

TEST(Graph6, RoundTrips) {
    EXPECT_EQ(graph6_decode(graph6_encode(cycle(5))), cycle(5));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracle::random_graph(seed * 17, 0.3, seed);  // crosses the 63-vertex long form
        EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
    }
    EXPECT_EQ(graph6_decode(graph6_encode(Graph{})).order(), 0u);
}

TEST(Graph6, RejectsMalformedInput) {
    EXPECT_THROW(graph6_decode("junk\x01"), parse_error);
    EXPECT_THROW(graph6_decode("B"), parse_error);
    EXPECT_THROW(graph6_decode(""), parse_error);
}

TEST(EdgeList, RoundTripAndAutoDetect) {
    Graph g = oracle::random_graph(12, 0.4, 7);
    std::istringstream edge_in(edge_list_encode(g));
    EXPECT_EQ(read_graph(edge_in), g);
    std::istringstream g6_in("\n" + graph6_encode(g) + "\r\n");
    EXPECT_EQ(read_graph(g6_in), g);
    std::istringstream empty_in("");
    EXPECT_THROW(read_graph(empty_in), parse_error);
    std::istringstream bad_count("3 2\n0 1\n");
    EXPECT_THROW(read_graph(bad_count), parse_error);
}
