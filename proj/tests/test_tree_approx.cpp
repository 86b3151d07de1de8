#include <gtest/gtest.h>

#include "hypnet/generators.hpp"
#include "hypnet/hyperbolicity.hpp"
#include "hypnet/repro.hpp"
#include "hypnet/tree_approx.hpp"
#include "oracles.hpp"

using namespace hypnet;

TEST(Bottleneck, MatchesMaxMinClosure)
{
    brute::GraphGen gen(8);
    for (int i = 0; i < 60; ++i) {
        const Graph g = gen.next(2, 14);
        const auto d = brute::floyd(g);
        for (Vertex r = 0; r < g.n(); ++r) {
            const BottleneckTree bt(g, r);
            const auto mm = brute::maxmin_products(d, r);
            for (Vertex x = 0; x < g.n(); ++x)
                for (Vertex y = 0; y < g.n(); ++y)
                    ASSERT_EQ(bt.f(x, y).twice(), mm[x][y]) << "graph " << i << " root " << r;
        }
    }
}

TEST(Bottleneck, FreeFunctions)
{
    const Graph g = cycle(5);
    EXPECT_EQ(f_value(g, 0, 2, 2), HalfInt(2));
    EXPECT_EQ(f_value(g, 0, 2, 3), HalfInt::from_twice(3));
    EXPECT_EQ(d_prime(g, 0, 2, 3), HalfInt(1));
    EXPECT_EQ(f_value(cycle(6), 0, 2, 4), HalfInt(2));
}

TEST(LayeringTree, DistanceEqualsGromovConstruction)
{
    brute::GraphGen gen(9);
    for (int i = 0; i < 60; ++i) {
        const Graph g = gen.next(2, 16);
        for (Vertex r = 0; r < g.n(); ++r) {
            const BottleneckTree bt(g, r);
            const auto t = layering_tree(g, r);
            for (Vertex x = 0; x < g.n(); ++x)
                for (Vertex y = 0; y < g.n(); ++y)
                    ASSERT_EQ(tree_distance(t, x, y), bt.d_prime(x, y)) << "graph " << i;
        }
    }
}

TEST(LayeringTree, ClassesMatchDefinition)
{
    brute::GraphGen gen(10);
    for (int i = 0; i < 60; ++i) {
        const Graph g = gen.next(2, 12);
        for (Vertex r = 0; r < g.n(); ++r) {
            const auto t = layering_tree(g, r);
            EXPECT_TRUE(oracle::same_partition(t.vmap, oracle::layering_classes(g, r, false)));
            EXPECT_TRUE(oracle::same_partition(t.cluster_of, oracle::layering_classes(g, r, true)));
        }
    }
}

TEST(LayeringTree, NeverLongerThanGraph)
{
    brute::GraphGen gen(12);
    for (int i = 0; i < 40; ++i) {
        const Graph g = gen.next(3, 30);
        const auto dm = all_pairs_distances(g);
        const HalfInt d = delta_four_point_pruned(g, dm).delta;
        const auto q = tree_quality(dm, layering_tree(g, default_root(dm)), d);
        EXPECT_GE(q.min_gap, HalfInt(0));
        EXPECT_LE(q.eps_max.to_double(), q.log_bound + 1e-9);
    }
}

TEST(LayeringTree, ExactOnTrees)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = random_connected(3 + static_cast<int>(seed), 0.0, seed);
        const auto dm = all_pairs_distances(t);
        for (Vertex r = 0; r < t.n(); ++r) {
            const auto lt = layering_tree(t, r);
            for (Vertex x = 0; x < t.n(); ++x)
                for (Vertex y = 0; y < t.n(); ++y)
                    ASSERT_EQ(tree_distance(lt, x, y), HalfInt(dm(x, y)));
        }
    }
}

TEST(LayeringTree, CompleteGraphIsHalfStar)
{
    const auto t = layering_tree(complete(6), 2);
    ASSERT_EQ(t.nodes.size(), 7u);
    EXPECT_TRUE(t.nodes[1].steiner);
    EXPECT_EQ(t.nodes[1].level, half);
    for (std::size_t i = 2; i < t.nodes.size(); ++i) {
        EXPECT_EQ(t.nodes[i].parent, 1);
        EXPECT_EQ(t.nodes[i].weight, half);
    }
    EXPECT_EQ(tree_distance(t, 0, 1), HalfInt(1));
    EXPECT_EQ(tree_distance(t, 0, 2), HalfInt(1));
}

TEST(LayeringTree, FrozenCycle)
{
    const Graph g = cycle(4);
    const auto dm = all_pairs_distances(g);
    const auto t = layering_tree(g, 0);
    EXPECT_EQ(t.nodes.size(), 3u);
    EXPECT_EQ(t.vmap[1], t.vmap[3]);
    EXPECT_EQ(tree_distance(t, 1, 3), HalfInt(0));
    EXPECT_EQ(cluster_diameter(dm, t), 2);
    const auto q = tree_quality(dm, t, HalfInt(1));
    EXPECT_EQ(q.class_diameter, 2);
    EXPECT_EQ(q.collapsed_pairs, 1u);
    EXPECT_EQ(q.eps_max, HalfInt(2));
}

TEST(LayeringTree, ApproximateClassDiameter)
{
    for (const Graph& g : {ringed_tree(4), grid(5, 7), cycle(11), lexicographic_cycle_clique(7, 2)}) {
        const auto dm = all_pairs_distances(g);
        const auto t = layering_tree(g, default_root(dm));
        const Dist D = tree_quality(dm, t, HalfInt(0)).class_diameter;
        const Dist a = d_approx2(dm, t);
        EXPECT_LE(a, D);
        EXPECT_GE(2 * a, D);
    }
}

TEST(LayeringTree, RootOutOfRange)
{
    EXPECT_THROW(layering_tree(path(3), 5), InputError);
    EXPECT_THROW(layering_tree(Graph(3, {{0, 1}}), 0), InputError);
}
