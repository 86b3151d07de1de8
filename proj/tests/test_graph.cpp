#include <gtest/gtest.h>

#include "hypnet/distance.hpp"
#include "hypnet/generators.hpp"
#include "hypnet/graph.hpp"
#include "hypnet/half_int.hpp"
#include "oracles.hpp"

using namespace hypnet;

TEST(HalfInt, Arithmetic)
{
    EXPECT_EQ((HalfInt(2) + half).str(), "5/2");
    EXPECT_EQ((HalfInt(2) - half - half).str(), "1");
    EXPECT_EQ((3 * half).twice(), 3);
    EXPECT_TRUE(HalfInt(1) > half);
    EXPECT_EQ(HalfInt::from_twice(5).floor(), 2);
    EXPECT_EQ(HalfInt::from_twice(-1).str(), "-1/2");
}

TEST(Graph, RejectsSelfLoopAndDropsRepeats)
{
    EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
    EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
    Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    EXPECT_EQ(g.m(), 2u);
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, ParseAndReindex)
{
    auto le = parse_edge_list("# comment\n10 20\n20 30\n  \n30 10\n10 20\n");
    auto b = build_graph(le);
    EXPECT_EQ(b.graph.n(), 3);
    EXPECT_EQ(b.graph.m(), 3u);
    ASSERT_EQ(b.warnings.size(), 1u);
    EXPECT_EQ(b.graph.label(2), 30);
    EXPECT_EQ(*b.graph.index_of(20), 1);
    EXPECT_FALSE(b.graph.index_of(15));
    EXPECT_EQ(edge_list_string(b.graph), "10 20\n10 30\n20 30\n");
}

TEST(Graph, BadInput)
{
    EXPECT_THROW(parse_edge_list("0 1 2\n"), InputError);
    EXPECT_THROW(parse_edge_list("0\n"), InputError);
    EXPECT_THROW(parse_edge_list("0 -1\n"), InputError);
    EXPECT_THROW(parse_edge_list("a b\n"), InputError);
    EXPECT_THROW(build_graph(parse_edge_list("")), InputError);
    EXPECT_THROW(build_graph(parse_edge_list("0 1\n2 3\n")), InputError);
    EXPECT_THROW(build_graph(parse_edge_list("4 4\n")), InputError);
}

TEST(Graph, SplitComponentsKeepsLabels)
{
    auto parts = split_components(parse_edge_list("0 1\n5 6\n6 7\n"));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].n(), 2);
    EXPECT_EQ(parts[1].n(), 3);
    EXPECT_EQ(parts[1].label(0), 5);
}

TEST(Graph, RoundTrip)
{
    brute::GraphGen gen(7);
    for (int i = 0; i < 30; ++i) {
        const Graph g = gen.next(2, 20);
        const auto b = build_graph(parse_edge_list(edge_list_string(g)));
        EXPECT_EQ(b.graph.edges(), g.edges());
    }
}

TEST(Distance, MatchesFloyd)
{
    brute::GraphGen gen(11);
    for (int i = 0; i < 40; ++i) {
        const Graph g = gen.next(2, 25);
        const auto dm = all_pairs(g, true, 1 + i % 3);
        const auto f = brute::floyd(g);
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v = 0; v < g.n(); ++v) {
                ASSERT_EQ(dm(u, v), f[u][v]);
                ASSERT_EQ(dm.sigma(u, v), BigInt(brute::all_geodesics(g, f, u, v).size()));
            }
    }
}

TEST(Distance, FrozenCounts)
{
    auto c4 = all_pairs(cycle(4));
    EXPECT_EQ(c4.sigma(0, 2), 2);
    auto g3 = all_pairs(grid(3, 3));
    EXPECT_EQ(g3.sigma(0, 8), 6);
    EXPECT_EQ(count_paths_through(g3, 0, 8, 4), Rational(4, 6));
    EXPECT_EQ(count_paths_through(g3, 0, 8, 0), Rational(1));
    EXPECT_EQ(count_paths_through(g3, 0, 2, 4), Rational(0));
    EXPECT_THROW(count_paths_through(g3, 1, 1, 4), InputError);
}

TEST(Distance, DisconnectedThrows) { EXPECT_THROW(all_pairs(Graph(3, {{0, 1}})), InputError); }

TEST(Distance, DiameterAndCanonicalGeodesic)
{
    const Graph g = grid(3, 4);
    const auto dm = all_pairs(g);
    const auto p = diameter(dm);
    EXPECT_EQ(p.diameter, 5);
    EXPECT_EQ(p.u, 0);
    EXPECT_EQ(p.v, 11);
    const auto path = canonical_geodesic(g, dm, 0, 11);
    EXPECT_EQ(path, (std::vector<Vertex>{0, 1, 2, 3, 7, 11}));
}

TEST(Distance, WorkerCountDoesNotMatter)
{
    const Graph g = random_connected(60, 0.05, 3);
    const auto a = all_pairs(g, true, 1);
    const auto b = all_pairs(g, true, 4);
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v) {
            ASSERT_EQ(a(u, v), b(u, v));
            ASSERT_EQ(a.sigma(u, v), b.sigma(u, v));
        }
}
