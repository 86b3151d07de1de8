#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hypnet/curvature.hpp"
#include "hypnet/generators.hpp"
#include "hypnet/repro.hpp"
#include "oracles.hpp"

using namespace hypnet;

namespace {

// Scaled hyperbolicity over explicit geodesic triangles and explicit side points.
Rational scaled_by_paths(const Graph& g, int R)
{
    const auto d = brute::floyd(g);
    const int n = g.n();
    Rational best = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int span = std::max({d[a][b], d[b][c], d[a][c]});
                if (span <= R)
                    continue;
                int worst = 0;
                for (const auto& p : brute::all_geodesics(g, d, a, b))
                    for (const auto& q : brute::all_geodesics(g, d, b, c))
                        for (const auto& s : brute::all_geodesics(g, d, a, c)) {
                            int m = brute::inf;
                            for (Vertex u : p)
                                for (Vertex v : q)
                                    for (Vertex w : s)
                                        m = std::min(m, d[u][v] + d[v][w] + d[u][w]);
                            worst = std::max(worst, m);
                        }
                best = std::max(best, Rational(worst, span));
            }
    return best;
}

double closed_form(int deg) { return 4 * std::numbers::pi / std::pow(3.0, 1.5) * (6.0 / deg - 1); }

} // namespace

TEST(Alexandrov, WheelClosedForm)
{
    for (int deg = 4; deg <= 9; ++deg) {
        const auto eg = wheel(deg);
        const auto dm = all_pairs_distances(eg.graph);
        EXPECT_NEAR(alexandrov_curvature(eg, dm, 0, CurvatureMetric::hop), closed_form(deg), 1e-12);
        EXPECT_NEAR(alexandrov_curvature(eg, dm, 0), closed_form(deg), 1e-12);
        EXPECT_THROW(alexandrov_curvature(eg, dm, 1), InputError);
    }
}

TEST(Alexandrov, MetricLengths)
{
    EXPECT_EQ(metric_length(3, CurvatureMetric::hop), 3.0);
    EXPECT_EQ(metric_length(3, CurvatureMetric::half_ceil), 2.0);
    EXPECT_EQ(metric_length(1, CurvatureMetric::half_ceil), 1.0);
}

TEST(Gaussian, OctahedronAndWheel)
{
    const auto oct = gaussian_total(octahedron());
    EXPECT_EQ(oct.euler, 2);
    EXPECT_EQ(oct.total, Rational(2));
    for (const auto& k : oct.per_vertex)
        EXPECT_EQ(k, Rational(1, 3));
    const auto w = wheel(6);
    EXPECT_EQ(gaussian_curvature(w, 0), Rational(0));
    EXPECT_EQ(gaussian_curvature(wheel(5), 0), Rational(1, 6));
    EXPECT_EQ(gaussian_curvature(wheel(7), 0), Rational(-1, 6));
}

TEST(Gaussian, TotalEqualsEulerCharacteristic)
{
    for (int d = 4; d <= 8; ++d)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto t = triangulation_growth(d, 30, seed);
            check_rotation(t.embedded);
            const auto gt = gaussian_total(t.embedded);
            EXPECT_EQ(gt.euler, 2) << "d=" << d;
            EXPECT_EQ(gt.total, Rational(gt.euler));
        }
}

TEST(Rotation, RoundTripAndErrors)
{
    const auto w = wheel(5);
    std::ostringstream out;
    write_rotation(out, w);
    std::istringstream in(out.str());
    const auto back = parse_rotation(in, w.graph);
    EXPECT_EQ(back.rotation, w.rotation);
    EXPECT_TRUE(is_interior(back, 0));
    EXPECT_FALSE(is_interior(back, 1));

    const Graph tri = cycle(3);
    auto parse = [&](const std::string& s) {
        std::istringstream is(s);
        return parse_rotation(is, tri);
    };
    EXPECT_NO_THROW(parse("# triangle\n0 1 2\n1 2 0\n2 0 1\n"));
    EXPECT_THROW(parse("0 1 2\n1 2 0\n"), InputError);
    EXPECT_THROW(parse("0 1 2\n0 2 1\n1 2 0\n2 0 1\n"), InputError);
    EXPECT_THROW(parse("0 1 7\n1 2 0\n2 0 1\n"), InputError);
    EXPECT_THROW(parse("0 1\n1 2 0\n2 0 1\n"), InputError);
    EXPECT_THROW(parse("0 1 x\n1 2 0\n2 0 1\n"), InputError);
}

TEST(Interconnection, SmallCases)
{
    for (int m = 3; m <= 6; ++m) {
        const Graph g = complete(m);
        EXPECT_EQ(interconnection(g, all_pairs(g), 0, 1, 2), Dist{2});
    }
    const Graph c = cycle(12);
    const auto dm = all_pairs(c);
    EXPECT_EQ(interconnection(c, dm, 0, 4, 8), Dist{8});
    EXPECT_EQ(interconnection(c, dm, 0, 1, 2), Dist{0});
    const Graph g = grid(4, 4);
    EXPECT_FALSE(interconnection(g, all_pairs(g), 0, 15, 5, 2));
}

TEST(Scaled, MatchesPathEnumeration)
{
    brute::GraphGen gen(23);
    for (int i = 0; i < 30; ++i) {
        const Graph g = gen.next(3, 10);
        const auto dm = all_pairs(g);
        for (int R : {0, 1, 2}) {
            const auto r = scaled_hyperbolicity(g, dm, R);
            ASSERT_FALSE(r.capped);
            ASSERT_TRUE(r.exact()) << "graph " << i << " R=" << R;
            ASSERT_EQ(r.lower, scaled_by_paths(g, R)) << "graph " << i << " R=" << R;
        }
    }
}

TEST(Scaled, CycleIsTwo)
{
    for (int k = 3; k <= 6; ++k) {
        const Graph c = cycle(3 * k);
        const auto r = scaled_hyperbolicity(c, all_pairs(c), k - 1);
        EXPECT_TRUE(r.exact());
        EXPECT_EQ(r.lower, Rational(2));
        EXPECT_EQ(r.witness_span, k);
    }
}

TEST(Scaled, BoundedAndMonotone)
{
    for (const Graph& g : {grid(6, 5), ringed_tree(4), lexicographic_cycle_clique(9, 2)}) {
        const auto dm = all_pairs(g);
        Rational prev = 3;
        for (int R = 0; R < dm.diameter(); ++R) {
            const auto r = scaled_hyperbolicity(g, dm, R);
            EXPECT_LE(r.lower, r.upper);
            EXPECT_LE(r.upper, Rational(2));
            EXPECT_LE(r.lower, prev);
            prev = r.lower;
        }
        const auto none = scaled_hyperbolicity(g, dm, dm.diameter());
        EXPECT_EQ(none.triples, 0u);
    }
}

TEST(Scaled, StripBelowThreeHalves)
{
    const Graph g = grid(21, 4);
    const auto r = scaled_hyperbolicity(g, all_pairs(g), 8);
    EXPECT_FALSE(r.capped);
    EXPECT_LT(r.upper, Rational(3, 2));
}

TEST(Scaled, CapAndErrors)
{
    const Graph g = grid(13, 4);
    const auto dm = all_pairs(g);
    const auto capped = scaled_hyperbolicity(g, dm, 4, 1);
    EXPECT_TRUE(capped.capped);
    EXPECT_LE(capped.lower, capped.upper);
    const auto full = scaled_hyperbolicity(g, dm, 4);
    EXPECT_GE(capped.upper, full.lower);
    EXPECT_THROW(scaled_hyperbolicity(g, all_pairs_distances(g), 4), InputError);
}
