#ifndef HYPNET_REPRO_HPP
#define HYPNET_REPRO_HPP

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypnet/congestion.hpp"
#include "hypnet/curvature.hpp"
#include "hypnet/generators.hpp"
#include "hypnet/hyperbolicity.hpp"
#include "hypnet/tree_approx.hpp"
#include "hypnet/tree_length.hpp"
#include "hypnet/union_find.hpp"

namespace hypnet {

enum class Scale { smoke, desk };

struct Criterion {
    std::string id;
    bool pass = false;
    std::string measured;
    std::string expected;
    double seconds = 0;
};

struct NamedGraph {
    std::string name;
    Graph graph;
};

namespace oracle {

// Same-shell classes straight from the definition: x ~ y when they are joined in
// G minus the shells up to theirs, x and y themselves kept. With `direct` false
// the edge xy itself does not count. Returns a class id per vertex.
inline std::vector<int> layering_classes(const Graph& g, Vertex root, bool direct)
{
    const int n = g.n();
    const auto lvl = bfs(g, root);
    UnionFind uf(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (lvl[x] != lvl[y])
                continue;
            std::vector<char> keep(static_cast<std::size_t>(n), 0);
            for (Vertex z = 0; z < n; ++z)
                keep[z] = lvl[z] > lvl[x];
            keep[x] = keep[y] = 1;
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            std::vector<Vertex> stack{x};
            seen[x] = 1;
            while (!stack.empty()) {
                const Vertex a = stack.back();
                stack.pop_back();
                for (Vertex b : g.neighbors(a)) {
                    if (!keep[b] || seen[b])
                        continue;
                    if (!direct && ((a == x && b == y) || (a == y && b == x)))
                        continue;
                    seen[b] = 1;
                    stack.push_back(b);
                }
            }
            if (seen[y])
                uf.unite(x, y);
        }
    std::vector<int> id(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        id[v] = uf.find(v);
    return id;
}

// True when the two labellings induce the same partition.
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b)
{
    const std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if ((a[x] == a[y]) != (b[x] == b[y]))
                return false;
    return true;
}

} // namespace oracle

// Two copies of K_m glued at vertex 0.
inline Graph two_clique_block(int m)
{
    std::vector<Edge> e;
    for (int c = 0; c < 2; ++c) {
        std::vector<Vertex> vs{0};
        for (int i = 1; i < m; ++i)
            vs.push_back(c * (m - 1) + i);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                e.emplace_back(vs[i], vs[j]);
    }
    return Graph(2 * m - 1, e);
}

// Wheel with hub 0 and rim 1..k, oriented so the hub is interior.
inline EmbeddedGraph wheel(int k)
{
    std::vector<std::array<Vertex, 3>> tris;
    for (int i = 0; i < k; ++i)
        tris.push_back({0, 1 + i, 1 + (i + 1) % k});
    return from_oriented_triangles(k + 1, tris);
}

// Octahedron: poles 0 and 5, equator 1..4.
inline EmbeddedGraph octahedron()
{
    std::vector<std::array<Vertex, 3>> tris;
    for (int i = 0; i < 4; ++i) {
        const Vertex a = 1 + i, b = 1 + (i + 1) % 4;
        tris.push_back({0, a, b});
        tris.push_back({5, b, a});
    }
    return from_oriented_triangles(6, tris);
}

// Graphs shared by the suite-wide criteria.
inline std::vector<NamedGraph> test_suite(Scale scale)
{
    std::vector<NamedGraph> s;
    auto add = [&](std::string name, Graph g) { s.push_back({std::move(name), std::move(g)}); };
    for (int n = 3; n <= 12; ++n)
        add("cycle(" + std::to_string(n) + ")", cycle(n));
    for (int n = 2; n <= 6; ++n)
        add("complete(" + std::to_string(n) + ")", complete(n));
    for (int n = 2; n <= 8; n += 3)
        add("path(" + std::to_string(n) + ")", path(n));
    add("star(5)", star(5));
    for (int m = 2; m <= 6; ++m)
        add("grid(" + std::to_string(m) + "," + std::to_string(m + 1) + ")", grid(m, m + 1));
    for (int d = 2; d <= 4; ++d)
        add("ringed_tree(" + std::to_string(d) + ")", ringed_tree(d));
    add("cartesian_cycle_path(6,3)", cartesian_cycle_path(6, 3));
    add("lexicographic_cycle_clique(5,2)", lexicographic_cycle_clique(5, 2));
    add("lexicographic_cycle_clique(8,3)", lexicographic_cycle_clique(8, 3));
    add("chord_cycle(8)", chord_cycle(8));
    add("chord_cycle(16)", chord_cycle(16));
    add("y_graph(1,3)", y_graph(1, 3));
    add("broom(5,4)", broom(5, 4));
    add("broom(40,9)", broom(40, 9));
    add("subdivision(complete(4),2)", subdivision(complete(4), 2));
    add("subdivision(two_clique_block(4),2)", subdivision(two_clique_block(4), 2));
    const int randoms = scale == Scale::smoke ? 6 : 20;
    for (int i = 0; i < randoms; ++i) {
        const int n = 8 + (i * 7) % 33;
        const double p = 0.04 + 0.03 * (i % 5);
        add("random_connected(" + std::to_string(n) + ",seed=" + std::to_string(i) + ")",
            random_connected(n, p, 1000 + static_cast<std::uint64_t>(i)));
    }
    if (scale == Scale::desk) {
        add("ringed_tree(5)", ringed_tree(5));
        add("ringed_tree(6)", ringed_tree(6));
        add("grid(10,10)", grid(10, 10));
        add("cylinder_grid(1,8)", cylinder_grid(1, 8));
        add("cylinder_grid(2,6)", cylinder_grid(2, 6));
        add("y_graph(2,6)", y_graph(2, 6));
        for (int i = 0; i < 6; ++i)
            add("random_connected(" + std::to_string(60 + 12 * i) + ",seed=" + std::to_string(2000 + i) + ")",
                random_connected(60 + 12 * i, 0.02 + 0.01 * i, 2000 + static_cast<std::uint64_t>(i)));
    }
    return s;
}

namespace detail {

inline std::string str(HalfInt h) { return h.str(); }

template <class Fn>
Criterion timed(std::string id, Fn&& fn)
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c = fn();
    c.id = std::move(id);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

inline bool in_time(const Criterion& c, double limit) { return c.seconds < limit; }

} // namespace detail

inline Criterion check_a1(Scale scale)
{
    auto c = detail::timed("A1", [&] {
        Criterion c;
        const int count = scale == Scale::smoke ? 40 : 200;
        int agree = 0;
        std::string bad;
        for (int i = 0; i < count; ++i) {
            const int n = 5 + i % 26;
            const Graph g = random_connected(n, 0.05 + 0.08 * (i % 7), static_cast<std::uint64_t>(i));
            const auto dm = all_pairs_distances(g);
            const auto fast = delta_four_point_pruned(g, dm).delta;
            const auto slow = delta_four_point(dm).delta;
            if (fast == slow)
                ++agree;
            else if (bad.empty())
                bad = " first mismatch seed " + std::to_string(i);
        }
        auto pruned = [](const Graph& g) { return delta_four_point_pruned(g, all_pairs_distances(g)).delta; };
        const HalfInt c5 = pruned(cycle(5));
        bool cliques = true, trees = true;
        for (int m = 2; m <= 9; ++m)
            cliques = cliques && pruned(complete(m)) == HalfInt(0);
        for (int i = 0; i < 20; ++i)
            trees = trees && pruned(random_connected(5 + i, 0.0, 500 + static_cast<std::uint64_t>(i))) == HalfInt(0);
        c.pass = agree == count && c5 == half && cliques && trees;
        c.measured = std::to_string(agree) + "/" + std::to_string(count) + " agree; C5 " + c5.str() + "; K_m " +
                     (cliques ? "0" : "nonzero") + "; trees " + (trees ? "0" : "nonzero") + bad;
        c.expected = "all agree; C5 1/2; K_m 0; trees 0";
        return c;
    });
    c.pass = c.pass && detail::in_time(c, 120);
    return c;
}

inline Criterion check_a2(Scale scale)
{
    auto c = detail::timed("A2", [&] {
        Criterion c;
        int ok = 0, total = 0;
        std::string bad;
        for (const auto& [name, g] : test_suite(scale)) {
            if (g.n() > 130)
                continue;
            ++total;
            const auto dm = all_pairs_distances(g);
            const HalfInt d = delta_four_point_pruned(g, dm).delta;
            const HalfInt thin = thin_triangles_constant(dm).value;
            const HalfInt slim = slim_triangles_constant(g, dm).value;
            if (d <= thin && thin <= 4 * d + half && slim <= thin)
                ++ok;
            else if (bad.empty())
                bad = "; fails on " + name + " (delta " + d.str() + ", thin " + thin.str() + ", slim " + slim.str() +
                      ")";
        }
        const HalfInt c5 = thin_triangles_constant(all_pairs_distances(cycle(5))).value;
        c.pass = ok == total && c5 == HalfInt(2);
        c.measured = std::to_string(ok) + "/" + std::to_string(total) + " graphs satisfy the chain; C5 thin " +
                     c5.str() + bad;
        c.expected = "delta <= thin <= 4 delta + 1/2 and slim <= thin everywhere; C5 thin 2";
        return c;
    });
    c.pass = c.pass && detail::in_time(c, 300);
    return c;
}

inline Criterion check_a3(Scale scale)
{
    return detail::timed("A3", [&] {
        Criterion c;
        int ok = 0, total = 0;
        std::string bad;
        for (const auto& [name, g] : test_suite(scale)) {
            if (g.n() > 130)
                continue;
            ++total;
            const auto roots = delta_all_roots(all_pairs_distances(g));
            const auto [lo, hi] = std::minmax_element(roots.begin(), roots.end());
            if (*hi <= 2 * *lo)
                ++ok;
            else if (bad.empty())
                bad = "; fails on " + name + " (min " + lo->str() + ", max " + hi->str() + ")";
        }
        c.pass = ok == total;
        c.measured = std::to_string(ok) + "/" + std::to_string(total) + " graphs" + bad;
        c.expected = "max_r delta_r <= 2 min_r delta_r on every graph";
        return c;
    });
}

inline Criterion check_a4(Scale scale)
{
    return detail::timed("A4", [&] {
        Criterion c;
        auto graphs = test_suite(scale);
        graphs.push_back({"ringed_tree(7)", ringed_tree(7)});
        graphs.push_back({"grid(15,20)", grid(15, 20)});
        int ok = 0, total = 0;
        std::string bad;
        for (const auto& [name, g] : graphs) {
            if (g.n() > 300)
                continue;
            ++total;
            const auto dm = all_pairs_distances(g);
            const HalfInt d = delta_four_point_pruned(g, dm).delta;
            const auto q = tree_quality(dm, layering_tree(g, default_root(dm)), d);
            if (q.min_gap >= HalfInt(0) && q.eps_max.to_double() <= q.log_bound + 1e-9)
                ++ok;
            else if (bad.empty())
                bad = "; fails on " + name + " (gap " + q.min_gap.str() + ".." + q.eps_max.str() + ", bound " +
                      std::to_string(q.log_bound) + ")";
        }
        bool trees_exact = true;
        for (int i = 0; i < 20; ++i) {
            const Graph t = random_connected(6 + 3 * i, 0.0, 700 + static_cast<std::uint64_t>(i));
            const auto dm = all_pairs_distances(t);
            for (Vertex r : {Vertex{0}, static_cast<Vertex>(t.n() - 1)}) {
                const auto q = tree_quality(dm, layering_tree(t, r), HalfInt(0));
                trees_exact = trees_exact && q.min_gap == HalfInt(0) && q.eps_max == HalfInt(0);
            }
        }
        bool star = true;
        for (int n = 2; n <= 12; ++n) {
            const auto t = layering_tree(complete(n + 1), 0);
            int steiner = 0;
            for (std::size_t i = 1; i < t.nodes.size(); ++i) {
                star = star && t.nodes[i].weight == half;
                steiner += t.nodes[i].steiner;
                if (!t.nodes[i].steiner)
                    star = star && t.nodes[i].members.size() == 1 && t.nodes[t.nodes[i].parent].steiner;
            }
            star = star && steiner == 1 && t.nodes.size() == static_cast<std::size_t>(n + 2);
        }
        c.pass = ok == total && trees_exact && star;
        c.measured = std::to_string(ok) + "/" + std::to_string(total) + " graphs in band; trees " +
                     (trees_exact ? "exact" : "inexact") + "; K_{n+1} " + (star ? "half-weight star" : "other") +
                     bad;
        c.expected = "0 <= d_G - d_T <= 2 delta log2(n-1); trees exact; K_{n+1} half-weight star";
        return c;
    });
}

inline Criterion check_a5(Scale scale)
{
    return detail::timed("A5", [&] {
        Criterion c;
        std::vector<Graph> graphs;
        const int randoms = scale == Scale::smoke ? 30 : 100;
        for (int i = 0; i < randoms; ++i)
            graphs.push_back(random_connected(4 + i % 9, 0.1 + 0.05 * (i % 8), 300 + static_cast<std::uint64_t>(i)));
        for (const auto& [name, g] : test_suite(Scale::smoke))
            if (g.n() <= 12)
                graphs.push_back(g);
        graphs.push_back(ringed_tree(2));
        graphs.push_back(grid(3, 4));
        graphs.push_back(lexicographic_cycle_clique(4, 3));
        int checked = 0, ok = 0;
        for (const auto& g : graphs)
            for (Vertex r = 0; r < g.n(); ++r) {
                ++checked;
                const auto t = layering_tree(g, r);
                const bool classes = oracle::same_partition(t.vmap, oracle::layering_classes(g, r, false));
                const bool clusters = oracle::same_partition(t.cluster_of, oracle::layering_classes(g, r, true));
                ok += classes && clusters;
            }
        c.pass = ok == checked;
        c.measured = std::to_string(ok) + "/" + std::to_string(checked) + " rooted graphs match (" +
                     std::to_string(graphs.size()) + " graphs, every root)";
        c.expected = "tree nodes and clusters equal the brute-force classes";
        return c;
    });
}

inline Criterion check_a6(Scale)
{
    return detail::timed("A6", [&] {
        Criterion c;
        const int r = 4, ell = 8;
        const Graph g = cylinder_grid(r, ell);
        const auto dm = all_pairs_distances(g);
        const int len = ell, width = r * ell;
        const Vertex start = (width / 2) * len; // middle ring
        const int tl = cylinder_path_decomposition(len, width, dm).length;
        std::string stalls, runs;
        bool ok = tl == 5;
        for (int k = 1; k < 6; ++k) {
            const auto res = disk_tree(g, dm, k, k, start);
            ok = ok && res.stalled;
            stalls += res.stalled ? "S" : "T";
        }
        for (int k = 3 * tl - 2; k <= 3 * tl + 1; ++k) {
            const auto res = disk_tree(g, dm, k, k, start);
            const bool good = !res.stalled && validate_decomposition(g, res.decomposition).empty() &&
                              res.decomposition.length <= 2 * k;
            ok = ok && good;
            runs += " k=" + std::to_string(k) + ":" +
                    (res.stalled ? std::string("stall") : "len " + std::to_string(res.decomposition.length));
        }
        c.pass = ok;
        c.measured = "tl <= " + std::to_string(tl) + "; k=1..5 " + stalls + ";" + runs;
        c.expected = "tl <= 5; k=1..5 all stall (SSSSS); k >= 13 valid with length <= 2k";
        return c;
    });
}

inline Criterion check_a7(Scale scale)
{
    auto c = detail::timed("A7", [&] {
        Criterion c;
        std::vector<HalfInt> delta;
        std::vector<int> cls, tl;
        std::string row;
        for (int depth = 3; depth <= 8; ++depth) {
            const Graph g = ringed_tree(depth);
            const auto dm = all_pairs_distances(g);
            delta.push_back(delta_four_point_pruned(g, dm).delta);
            cls.push_back(tree_quality(dm, layering_tree(g, 0), delta.back()).class_diameter);
            std::vector<Vertex> roots;
            if (scale == Scale::smoke || depth > 7)
                roots = {0};
            tl.push_back(tree_length_upper(g, dm, delta.back(), roots).upper);
            row += " l=" + std::to_string(depth) + ":" + delta.back().str() + "/" + std::to_string(cls.back()) + "/" +
                   std::to_string(tl.back());
        }
        bool ok = true;
        for (std::size_t i = 0; i < delta.size(); ++i)
            ok = ok && delta[i] <= delta[1] + half;
        for (std::size_t i = 0; i + 2 < delta.size(); ++i)
            ok = ok && cls[i + 2] >= cls[i] + 1 && tl[i + 2] >= tl[i] + 1;
        c.pass = ok;
        c.measured = "delta/D/tl_upper" + row;
        c.expected = "delta <= delta(l=4) + 1/2; D and tl_upper grow by >= 1 per 2 levels";
        return c;
    });
    c.pass = c.pass && detail::in_time(c, 600);
    return c;
}

inline Criterion check_a8(Scale)
{
    return detail::timed("A8", [&] {
        Criterion c;
        bool cycles = true, paths = true;
        for (int n = 3; n <= 40; ++n) {
            const Graph g = cycle(2 * n);
            const auto d = demand_profile(g, all_pairs(g));
            const Rational want(static_cast<long long>(n - 1) * (n - 1), 2);
            for (const auto& x : d)
                cycles = cycles && x == want;
        }
        for (int n = 2; n <= 40; ++n) {
            const Graph g = path(n + 1);
            const auto d = demand_profile(g, all_pairs(g));
            const long long want = static_cast<long long>(n / 2) * ((n + 1) / 2);
            paths = paths && d[n / 2] == Rational(want) && 9 * want >= 2LL * n * n;
        }
        c.pass = cycles && paths;
        c.measured = std::string("C_2n ") + (cycles ? "all (n-1)^2/2" : "mismatch") + "; P_{n+1} centre " +
                     (paths ? "floor*ceil >= 2n^2/9" : "mismatch");
        c.expected = "C_2n every vertex (n-1)^2/2 for n=3..40; P_{n+1} centre floor(n/2)ceil(n/2) >= 2n^2/9, n=2..40";
        return c;
    });
}

inline Criterion check_a9(Scale scale)
{
    auto c = detail::timed("A9", [&] {
        Criterion c;
        const std::vector<int> sides = scale == Scale::smoke ? std::vector<int>{11, 15, 21} : std::vector<int>{21, 31, 41};
        const double lo = 0.25 * 0.65, hi = 1.125 * 1.35;
        bool ok = true;
        double prev = 1e9;
        std::ostringstream m;
        for (int side : sides) {
            const auto gd = grid_center_demand(side);
            const double gap = std::max({0.0, 0.25 - gd.ratio, gd.ratio - 1.125});
            ok = ok && gd.ratio > lo && gd.ratio < hi && gap <= prev;
            prev = gap;
            m << " m=" << side << ":" << gd.ratio;
        }
        c.pass = ok;
        c.measured = "demand/n^1.5" + m.str();
        c.expected = "in (0.1625, 1.51875), distance to [0.25, 1.125] non-increasing";
        return c;
    });
    c.pass = c.pass && detail::in_time(c, 300);
    return c;
}

inline Criterion check_a10(Scale)
{
    return detail::timed("A10", [&] {
        Criterion c;
        std::string m;
        bool ok = true;
        for (const auto& [name, g] : {NamedGraph{"lexicographic_cycle_clique(8,3)", lexicographic_cycle_clique(8, 3)},
                                      NamedGraph{"chord_cycle(16)", chord_cycle(16)}}) {
            const auto dm = all_pairs(g);
            const auto d = demand_profile(g, dm);
            const auto in = inertia(dm);
            const bool same = std::all_of(d.begin(), d.end(), [&](const Rational& x) { return x == d[0]; }) &&
                              std::all_of(in.begin(), in.end(), [&](auto x) { return x == in[0]; });
            ok = ok && same;
            m += " " + name + ": demand " + rational_str(d[0]) + ", inertia " + std::to_string(in[0]) +
                 (same ? "" : " (not uniform)");
        }
        c.pass = ok;
        c.measured = "uniform;" + m;
        c.expected = "identical demand and inertia at every vertex";
        if (!ok)
            c.measured = "non-uniform;" + m;
        return c;
    });
}

inline Criterion check_a11(Scale scale)
{
    auto c = detail::timed("A11", [&] {
        Criterion c;
        std::uint64_t checked = 0, violations = 0;
        int graphs = 0;
        std::string first;
        for (const auto& [name, g] : test_suite(scale)) {
            if (g.n() > 60)
                continue;
            ++graphs;
            const auto dm = all_pairs_distances(g);
            const HalfInt thin = thin_triangles_constant(dm).value;
            const HalfInt d = delta_four_point_pruned(g, dm).delta;
            const auto lc = check_congestion_lemmas(g, dm, thin, d);
            for (const auto* rep : {&lc.congested_balls, &lc.halfspace, &lc.r_approximation}) {
                checked += rep->checked;
                violations += rep->violations;
                if (rep->violations && first.empty())
                    first = "; first on " + name + " " + rep->name + ": " + rep->first_violation;
            }
        }
        c.pass = violations == 0;
        c.measured = std::to_string(violations) + " violations in " + std::to_string(checked) + " checks over " +
                     std::to_string(graphs) + " graphs" + first;
        c.expected = "0 violations";
        return c;
    });
    c.pass = c.pass && detail::in_time(c, 600);
    return c;
}

inline Criterion check_a12(Scale)
{
    return detail::timed("A12", [&] {
        Criterion c;
        const int k = 40, len = 9;
        const Graph g = broom(k, len);
        const auto dm = all_pairs(g);
        const auto cc = congestion_center(g, dm);
        const auto top = argmax_set(demand_profile(g, dm));
        const Vertex v4 = k + 4;
        c.pass = cc.center == v4 && top == std::vector<Vertex>{0};
        c.measured = "centre " + std::to_string(cc.center) + ", demand argmax " + std::to_string(top.front()) +
                     (top.size() > 1 ? " (tie)" : "");
        c.expected = "centre " + std::to_string(v4) + " (v_4), demand argmax 0 (hub r')";
        return c;
    });
}

// Closed form as given for unit corner triangles.
inline double curvature_closed_form(int deg) { return 2 * std::numbers::pi / std::pow(3.0, 1.5) * (6.0 / deg - 1); }

inline Criterion check_a13(Scale)
{
    return detail::timed("A13", [&] {
        Criterion c;
        std::ostringstream m;
        m.precision(15);
        bool alex = true;
        for (int deg : {5, 6, 7}) {
            const auto eg = wheel(deg);
            const double k = alexandrov_curvature(eg, all_pairs_distances(eg.graph), 0);
            const double want = curvature_closed_form(deg);
            alex = alex && std::abs(k - want) <= 1e-12;
            m << " deg " << deg << ": " << k << " vs " << want << ";";
        }
        bool gauss = true;
        const auto oct = gaussian_total(octahedron());
        gauss = gauss && oct.total == Rational(oct.euler) && oct.euler == 2;
        for (int d : {5, 6, 7})
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const auto gt = gaussian_total(triangulation_growth(d, 25, seed).embedded);
                gauss = gauss && gt.total == Rational(gt.euler);
            }
        c.pass = alex && gauss;
        m << " gaussian_total " << (gauss ? "= V-E+F" : "!= V-E+F");
        c.measured = m.str();
        c.expected = "Alexandrov = (2pi/3^1.5)(6/deg-1) within 1e-12; gaussian_total = V-E+F";
        return c;
    });
}

inline Criterion check_a14(Scale)
{
    auto c = detail::timed("A14", [&] {
        Criterion c;
        bool triangles = true;
        for (int m = 3; m <= 6; ++m) {
            const Graph g = complete(m);
            const auto dm = all_pairs(g);
            triangles = triangles && interconnection(g, dm, 0, 1, 2) == Dist{2};
        }
        const Graph strip = grid(41, 6);
        const auto sr = scaled_hyperbolicity(strip, all_pairs(strip), 10);
        const bool strip_ok = !sr.capped && sr.upper < Rational(3, 2);
        const int R = 9, k = (R + 2) / 3;
        const Graph blk = subdivision(two_clique_block(4), k);
        const auto bdm = all_pairs(blk);
        const auto br = scaled_hyperbolicity(blk, bdm, R);
        const bool blk_ok = br.triples > 0 && br.exact() && br.lower == Rational(2);
        const Graph wide = subdivision(two_clique_block(4), R + 1);
        const auto wr = scaled_hyperbolicity(wide, all_pairs(wide), R);
        c.pass = triangles && strip_ok && blk_ok;
        c.measured = std::string("triangle ratio ") + (triangles ? "2" : "not 2") + "; strip H_10 " +
                     rational_str(sr.upper) + "; k=" + std::to_string(k) + " block: " + std::to_string(br.triples) +
                     " triples with vd > " + std::to_string(R) + " (diameter " +
                     std::to_string(diameter(bdm).diameter) + ")" +
                     (br.triples ? ", H_R " + rational_str(br.lower) : std::string(", H_R undefined")) +
                     "; k=" + std::to_string(R + 1) + " block H_R " + rational_str(wr.lower);
        c.expected = "triangle ratio 2; strip H_10 < 3/2; k=ceil(R/3) block H_9 = 2";
        return c;
    });
    c.pass = c.pass && detail::in_time(c, 300);
    return c;
}

inline Criterion check_a15(Scale scale)
{
    return detail::timed("A15", [&] {
        Criterion c;
        const int count = scale == Scale::smoke ? 30 : 100;
        int single_ok = 0, pair_ok = 0, pairs = 0;
        std::string bad;
        for (int i = 0; i < count; ++i) {
            const Graph g = random_with_cut_vertex(4 + i % 12, 4 + (i * 5) % 11, 0.15 + 0.05 * (i % 5),
                                                   900 + static_cast<std::uint64_t>(i));
            const auto dm = all_pairs_distances(g);
            const HalfInt d = delta_four_point(dm).delta;
            const auto sb = separator_bound(g, {0});
            HalfInt mx;
            for (HalfInt x : sb.component_delta)
                mx = max(mx, x);
            if (d == mx && d <= sb.bound)
                ++single_ok;
            else if (bad.empty())
                bad = "; seed " + std::to_string(i) + " delta " + d.str() + " vs " + mx.str();
            for (Vertex w : g.neighbors(0)) {
                try {
                    const auto pb = separator_bound(g, {0, w});
                    ++pairs;
                    pair_ok += d <= pb.bound;
                } catch (const InputError&) {
                    // {0, w} need not separate
                }
                break;
            }
        }
        c.pass = single_ok == count && pair_ok == pairs;
        c.measured = "cut vertex: " + std::to_string(single_ok) + "/" + std::to_string(count) +
                     " equal max over pieces; two-vertex separators: " + std::to_string(pair_ok) + "/" +
                     std::to_string(pairs) + " within k + max" + bad;
        c.expected = "delta = max over pieces for cut vertices; delta <= k + max otherwise";
        return c;
    });
}

inline Criterion check_a16(Scale)
{
    return detail::timed("A16", [&] {
        Criterion c;
        const auto s = simplicial_counterexample_search(6);
        bool ok = false;
        if (s.first) {
            const auto& h = *s.first;
            const HalfInt before = delta_four_point(all_pairs_distances(h.graph)).delta;
            const Graph rest = remove_vertex(h.graph, h.vertex);
            const HalfInt after = delta_four_point(all_pairs_distances(rest)).delta;
            ok = is_simplicial(h.graph, h.vertex) && after < before && before == h.delta_before &&
                 after == h.delta_after;
            c.measured = std::to_string(s.hits) + " hits in " + std::to_string(s.graphs_checked) +
                         " graphs; first: n=" + std::to_string(h.graph.n()) + " edges " +
                         std::to_string(h.graph.m()) + ", delta " + before.str() + " -> " + after.str();
        } else {
            c.measured = "no hit in " + std::to_string(s.graphs_checked) + " graphs";
        }
        c.pass = ok;
        c.expected = "some simplicial deletion lowers delta, confirmed by brute force";
        return c;
    });
}

inline std::vector<std::function<Criterion(Scale)>> criteria()
{
    return {check_a1, check_a2,  check_a3,  check_a4,  check_a5,  check_a6,  check_a7,  check_a8,
            check_a9, check_a10, check_a11, check_a12, check_a13, check_a14, check_a15, check_a16};
}

inline void print_criterion(std::ostream& out, const Criterion& c)
{
    out << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << std::fixed;
    out.precision(2);
    out << c.seconds << "s] measured: " << c.measured << " | expected: " << c.expected << '\n';
    out.unsetf(std::ios::fixed);
}

inline std::vector<Criterion> run_repro(Scale scale, std::ostream& out)
{
    std::vector<Criterion> all;
    for (const auto& fn : criteria()) {
        all.push_back(fn(scale));
        print_criterion(out, all.back());
        out.flush();
    }
    return all;
}

} // namespace hypnet

#endif
