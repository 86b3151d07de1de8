#include <gtest/gtest.h>

#include "hypnet/generators.hpp"
#include "hypnet/hyperbolicity.hpp"
#include "hypnet/tree_length.hpp"
#include "oracles.hpp"

using namespace hypnet;

namespace {

// Longest induced cycle by checking every vertex subset.
int induced_cycle_by_subsets(const Graph& g)
{
    const int n = g.n();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < 3 || size <= best)
            continue;
        std::vector<Vertex> keep;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                keep.push_back(v);
        const Graph h = induced_subgraph(g, keep);
        bool two_regular = true;
        for (Vertex v = 0; v < h.n(); ++v)
            two_regular = two_regular && h.degree(v) == 2;
        if (two_regular && is_connected(h))
            best = size;
    }
    return best;
}

} // namespace

TEST(Decomposition, LayeringDecompositionIsValid)
{
    brute::GraphGen gen(14);
    for (int i = 0; i < 50; ++i) {
        const Graph g = gen.next(1, 30);
        const auto dm = all_pairs_distances(g);
        for (Vertex r : {Vertex{0}, static_cast<Vertex>(g.n() - 1)}) {
            const auto td = layering_decomposition(g, dm, layering_tree(g, r));
            const auto errs = validate_decomposition(g, td);
            ASSERT_TRUE(errs.empty()) << errs.front();
        }
    }
}

TEST(Decomposition, ValidatorCatchesDefects)
{
    const Graph g = cycle(4);
    const auto dm = all_pairs_distances(g);
    TreeDecomposition ok{{{0, 1, 2}, {0, 2, 3}}, {{0, 1}}, 0, 0};
    EXPECT_TRUE(validate_decomposition(g, ok).empty());
    auto missing_vertex = ok;
    missing_vertex.bags[1] = {0, 2};
    EXPECT_FALSE(validate_decomposition(g, missing_vertex).empty());
    TreeDecomposition missing_edge{{{0, 1, 2}, {2, 3}}, {{0, 1}}, 0, 0};
    EXPECT_FALSE(validate_decomposition(g, missing_edge).empty());
    TreeDecomposition broken_path{{{0, 1}, {1, 2}, {2, 3, 0}}, {{0, 1}, {1, 2}}, 0, 0};
    EXPECT_FALSE(validate_decomposition(g, broken_path).empty());
    TreeDecomposition forest{{{0, 1, 2}, {0, 2, 3}}, {}, 0, 0};
    EXPECT_FALSE(validate_decomposition(g, forest).empty());
    measure(ok, dm);
    EXPECT_EQ(ok.length, 2);
    EXPECT_EQ(ok.width, 2);
}

TEST(TreeLength, UpperBoundAgainstCycleBounds)
{
    brute::GraphGen gen(15);
    for (int i = 0; i < 40; ++i) {
        const Graph g = gen.next(3, 14);
        const auto dm = all_pairs_distances(g);
        const HalfInt d = delta_four_point_pruned(g, dm).delta;
        const auto tl = tree_length_upper(g, dm, d);
        EXPECT_GE(HalfInt(tl.upper), d);
        const int lambda = induced_cycle_by_subsets(g);
        EXPECT_LE(4 * d, HalfInt(lambda));
        EXPECT_LE(2 * tl.upper, 6 + lambda);
        EXPECT_LE(tl.upper, tl.cluster_bound + 1);
        EXPECT_TRUE(validate_decomposition(g, tl.decomposition).empty());
    }
}

TEST(TreeLength, FrozenValues)
{
    const auto c9 = cycle(9);
    const auto dm9 = all_pairs_distances(c9);
    EXPECT_EQ(tree_length_upper(c9, dm9, HalfInt(0)).upper, 4);
    const auto k5 = complete(5);
    EXPECT_EQ(tree_length_upper(k5, all_pairs_distances(k5), HalfInt(0)).upper, 1);
    const auto t = random_connected(20, 0.0, 4);
    EXPECT_EQ(tree_length_upper(t, all_pairs_distances(t), HalfInt(0)).upper, 1);
}

TEST(TreeLength, CylinderPathDecomposition)
{
    const Graph g = cylinder_grid(4, 8);
    const auto dm = all_pairs_distances(g);
    const auto td = cylinder_path_decomposition(8, 32, dm);
    EXPECT_TRUE(validate_decomposition(g, td).empty());
    EXPECT_EQ(td.length, 5);
}

TEST(InducedCycle, MatchesSubsetSearch)
{
    EXPECT_EQ(longest_induced_cycle(cycle(9)).length, 9);
    EXPECT_EQ(longest_induced_cycle(complete(5)).length, 3);
    EXPECT_EQ(longest_induced_cycle(path(6)).length, 0);
    EXPECT_EQ(longest_induced_cycle(grid(3, 3)).length, 8);
    brute::GraphGen gen(16);
    for (int i = 0; i < 60; ++i) {
        const Graph g = gen.next(3, 12);
        const auto ic = longest_induced_cycle(g);
        ASSERT_EQ(ic.length, induced_cycle_by_subsets(g)) << "graph " << i;
        if (ic.length) {
            ASSERT_EQ(static_cast<int>(ic.cycle.size()), ic.length);
            const Graph h = induced_subgraph(g, [&] {
                auto c = ic.cycle;
                std::sort(c.begin(), c.end());
                return c;
            }());
            for (Vertex v = 0; v < h.n(); ++v)
                EXPECT_EQ(h.degree(v), 2);
        }
    }
    EXPECT_THROW(longest_induced_cycle(path(30)), InputError);
}

TEST(DiskTree, StallsOnCylinderFromMiddle)
{
    const Graph g = cylinder_grid(4, 8);
    const auto dm = all_pairs_distances(g);
    for (int k = 1; k < 6; ++k) {
        const auto res = disk_tree(g, dm, k, k, 128);
        EXPECT_TRUE(res.stalled) << "k=" << k;
        EXPECT_FALSE(res.reason.empty());
    }
    for (int k = 13; k <= 15; ++k) {
        const auto res = disk_tree(g, dm, k, k, 128);
        ASSERT_FALSE(res.stalled) << "k=" << k;
        EXPECT_TRUE(validate_decomposition(g, res.decomposition).empty());
        EXPECT_LE(res.decomposition.length, 2 * k);
    }
}

TEST(DiskTree, OutputsValidWheneverItFinishes)
{
    brute::GraphGen gen(17);
    int finished = 0;
    for (int i = 0; i < 60; ++i) {
        const Graph g = gen.next(2, 40);
        const auto dm = all_pairs_distances(g);
        for (int k = 1; k <= 4; ++k) {
            const auto res = disk_tree(g, dm, k, 2 * k, std::nullopt, static_cast<std::uint64_t>(i));
            if (res.stalled)
                continue;
            ++finished;
            const auto errs = validate_decomposition(g, res.decomposition);
            ASSERT_TRUE(errs.empty()) << errs.front();
            EXPECT_LE(res.decomposition.length, 3 * k);
        }
    }
    EXPECT_GT(finished, 0);
}

TEST(DiskTree, LargeRadiusIsOneBag)
{
    const Graph g = grid(4, 5);
    const auto dm = all_pairs_distances(g);
    const auto res = disk_tree(g, dm, 7, 7, 0);
    ASSERT_FALSE(res.stalled);
    EXPECT_EQ(res.decomposition.bags.size(), 1u);
    EXPECT_THROW(disk_tree(g, dm, -1, 2), InputError);
    EXPECT_THROW(disk_tree(g, dm, 1, 2, 99), InputError);
}
