#include <gtest/gtest.h>

#include "hypnet/congestion.hpp"
#include "hypnet/generators.hpp"
#include "hypnet/hyperbolicity.hpp"
#include "oracles.hpp"

using namespace hypnet;

TEST(Demand, MatchesPathEnumeration)
{
    brute::GraphGen gen(18);
    for (int i = 0; i < 40; ++i) {
        const Graph g = gen.next(2, 14);
        const auto dm = all_pairs(g);
        const auto fast = demand_profile(g, dm);
        const auto slow = brute::demand_by_paths(g);
        for (Vertex w = 0; w < g.n(); ++w) {
            ASSERT_EQ(fast[w], slow[w]) << "graph " << i << " vertex " << w;
            ASSERT_EQ(demand_at(dm, w), slow[w]);
        }
    }
}

TEST(Demand, SumsToTotal)
{
    brute::GraphGen gen(19);
    for (int i = 0; i < 20; ++i) {
        const Graph g = gen.next(2, 30);
        const auto dm = all_pairs(g);
        Rational sum = 0;
        for (const auto& d : demand_profile(g, dm))
            sum += d;
        EXPECT_EQ(sum, total_demand(dm));
    }
}

TEST(Demand, ClosedForms)
{
    for (int n = 3; n <= 12; ++n) {
        const Graph c = cycle(2 * n);
        for (const auto& d : demand_profile(c, all_pairs(c)))
            EXPECT_EQ(d, Rational((n - 1) * (n - 1), 2));
        const Graph p = path(n + 1);
        const auto d = demand_profile(p, all_pairs(p));
        EXPECT_EQ(d[n / 2], Rational((n / 2) * ((n + 1) / 2)));
        EXPECT_EQ(d[0], Rational(0));
    }
    const Graph s = star(6);
    const auto d = demand_profile(s, all_pairs(s));
    EXPECT_EQ(d[0], Rational(15));
}

TEST(Demand, GridCentre)
{
    const auto gd = grid_center_demand(5);
    const Graph g = grid(5, 5);
    EXPECT_EQ(gd.demand, demand_profile(g, all_pairs(g))[12]);
    EXPECT_EQ(gd.center, 12);
    EXPECT_GT(gd.ratio, 0.25);
    EXPECT_LT(gd.ratio, 1.125);
    EXPECT_THROW(grid_center_demand(4), InputError);
    EXPECT_THROW(grid_center_demand(1), InputError);
}

TEST(Demand, BetweennessAndInertia)
{
    const Graph p = path(3);
    const auto dm = all_pairs(p);
    const auto b = betweenness(demand_profile(p, dm));
    EXPECT_EQ(b[1], Rational(1, 3));
    EXPECT_EQ(inertia(dm), (std::vector<std::int64_t>{5, 2, 5}));
    EXPECT_EQ(inertia_argmin(dm), std::vector<Vertex>{1});
    EXPECT_EQ(argmax_set(std::vector<int>{1, 3, 3, 2}), (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(argmin_set(std::vector<int>{1, 3, 1, 2}), (std::vector<Vertex>{0, 2}));
}

TEST(Demand, VertexTransitiveGraphsAreUniform)
{
    for (const Graph& g : {lexicographic_cycle_clique(8, 3), chord_cycle(16), cycle(9), complete(5)}) {
        const auto dm = all_pairs(g);
        const auto d = demand_profile(g, dm);
        const auto in = inertia(dm);
        for (Vertex v = 1; v < g.n(); ++v) {
            EXPECT_EQ(d[v], d[0]);
            EXPECT_EQ(in[v], in[0]);
        }
    }
}

TEST(HalfSpace, PartitionAndValues)
{
    const Graph g = path(6);
    const auto dm = all_pairs(g);
    const auto h = halfspace(g, dm, 0, 4);
    EXPECT_EQ(h.midpoint, 2);
    EXPECT_EQ(h.positive, (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(h.zero, std::vector<Vertex>{2});
    EXPECT_EQ(h.negative, (std::vector<Vertex>{3, 4, 5}));
    EXPECT_EQ(h.f[0], HalfInt(2));
    EXPECT_EQ(h.f[5], HalfInt(-2));
    EXPECT_THROW(halfspace(g, dm, 0, 1), InputError);
    const Graph c = cycle(5);
    const auto hc = halfspace(c, all_pairs(c), 0, 2);
    EXPECT_EQ(hc.f[4], half);
}

TEST(Centre, Broom)
{
    const Graph g = broom(40, 9);
    const auto dm = all_pairs(g);
    const auto c = congestion_center(g, dm);
    EXPECT_EQ(c.pair.diameter, 10);
    EXPECT_EQ(c.center, 44);
    EXPECT_EQ(argmax_set(demand_profile(g, dm)), std::vector<Vertex>{0});
}

TEST(Centre, RadiusBound)
{
    EXPECT_EQ(radius_bound(2, HalfInt(1), half, 6), HalfInt(6));
    EXPECT_EQ(radius_bound(2, HalfInt(1), half, 7), HalfInt::from_twice(13));
}

TEST(Coverage, PathCentre)
{
    const Graph g = path(5);
    const auto dm = all_pairs(g);
    const auto demand = demand_profile(g, dm);
    const auto c0 = coverage_fraction(g, dm, demand, 2, 0);
    EXPECT_EQ(c0.strict, Rational(4, 5));
    EXPECT_EQ(c0.weak, Rational(4, 5));
    EXPECT_EQ(c0.ball_demand, Rational(4));
    const auto all = coverage_fraction(g, dm, demand, 2, 2);
    EXPECT_EQ(all.strict, Rational(1));
    const Graph c = cycle(6);
    const auto cdm = all_pairs(c);
    const auto cc = coverage_fraction(c, cdm, demand_profile(c, cdm), 0, 0);
    EXPECT_LT(cc.strict, cc.weak);
}

TEST(Balance, GridIsBalanced)
{
    const Graph g = grid(9, 9);
    const auto dm = all_pairs(g);
    const auto rep = balance_check(g, dm, 40, 1);
    EXPECT_GT(rep.pairs_checked, 0u);
    EXPECT_LE(rep.c_halfspace, Rational(1, 2));
    EXPECT_TRUE(rep.halfspace_ok);
    EXPECT_FALSE(rep.shells.empty());
    EXPECT_EQ(rep.shells[0], 1);
}

TEST(Lemmas, NoViolationsOnSmallGraphs)
{
    for (const Graph& g : {cycle(9), grid(4, 5), ringed_tree(3), broom(6, 5), lexicographic_cycle_clique(6, 2)}) {
        const auto dm = all_pairs_distances(g);
        const auto lc = check_congestion_lemmas(g, dm, thin_triangles_constant(dm).value,
                                                delta_four_point_pruned(g, dm).delta);
        for (const auto* rep : {&lc.congested_balls, &lc.halfspace, &lc.r_approximation}) {
            EXPECT_GT(rep->checked, 0u) << rep->name;
            EXPECT_EQ(rep->violations, 0u) << rep->name << ": " << rep->first_violation;
        }
    }
}

TEST(Lemmas, DetectsViolationWithZeroConstants)
{
    // zero constants on a long cycle
    const Graph g = cycle(12);
    const auto dm = all_pairs_distances(g);
    const auto lc = check_congestion_lemmas(g, dm, HalfInt(0), HalfInt(0));
    EXPECT_GT(lc.congested_balls.violations, 0u);
    EXPECT_FALSE(lc.congested_balls.first_violation.empty());
}
