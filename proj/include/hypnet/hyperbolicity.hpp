#ifndef HYPNET_HYPERBOLICITY_HPP
#define HYPNET_HYPERBOLICITY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "hypnet/distance.hpp"
#include "hypnet/graph.hpp"
#include "hypnet/half_int.hpp"

namespace hypnet {

// (x.y)_r = (d(x,r) + d(y,r) - d(x,y)) / 2
inline HalfInt gromov_product(const DistanceMatrix& dm, Vertex x, Vertex y, Vertex r)
{
    return HalfInt::from_twice(static_cast<std::int64_t>(dm(x, r)) + dm(y, r) - dm(x, y));
}

struct RootedDelta {
    HalfInt delta;
    std::array<Vertex, 3> witness{}; // x, y, z attaining the maximum
};

// Smallest delta with (x.z)_r >= min((x.y)_r, (y.z)_r) - delta for all x, y, z.
inline RootedDelta delta_at_root(const DistanceMatrix& dm, Vertex r)
{
    const int n = dm.n();
    const Dist* dr = dm.row(r);
    std::int64_t best = 0;
    RootedDelta out;
    for (Vertex x = 0; x < n; ++x) {
        const Dist* dx = dm.row(x);
        for (Vertex y = 0; y < n; ++y) {
            const std::int64_t pxy = dx[r] + dr[y] - dx[y];
            if (pxy <= best)
                continue; // min(pxy, .) - pxz <= pxy
            const Dist* dy = dm.row(y);
            for (Vertex z = 0; z < n; ++z) {
                const std::int64_t pyz = dy[r] + dr[z] - dy[z];
                const std::int64_t pxz = dx[r] + dr[z] - dx[z];
                const std::int64_t v = std::min(pxy, pyz) - pxz;
                if (v > best) {
                    best = v;
                    out.witness = {x, y, z};
                }
            }
        }
    }
    out.delta = HalfInt::from_twice(best);
    return out;
}

inline std::vector<HalfInt> delta_all_roots(const DistanceMatrix& dm)
{
    std::vector<HalfInt> out;
    for (Vertex r = 0; r < dm.n(); ++r)
        out.push_back(delta_at_root(dm, r).delta);
    return out;
}

using Quadruple = std::array<Vertex, 4>;

// 2 * (largest pair sum - second largest pair sum).
inline std::int64_t four_point_gap(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c, Vertex d)
{
    std::int64_t s[3] = {static_cast<std::int64_t>(dm(a, b)) + dm(c, d),
                         static_cast<std::int64_t>(dm(a, c)) + dm(b, d),
                         static_cast<std::int64_t>(dm(a, d)) + dm(b, c)};
    std::sort(s, s + 3);
    return s[2] - s[1];
}

struct FourPointResult {
    HalfInt delta;                      // (L1 - L2) / 2 at the maximiser
    std::optional<Quadruple> witness;   // absent when n < 4
    std::uint64_t quadruples_examined = 0;
    std::uint64_t far_pairs = 0;        // pruned search only
};

// Exhaustive maximum over a < b < c < d; the witness is the first maximiser in that order.
inline FourPointResult delta_four_point(const DistanceMatrix& dm)
{
    const int n = dm.n();
    FourPointResult out;
    std::int64_t best = -1;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    ++out.quadruples_examined;
                    const std::int64_t gap = four_point_gap(dm, a, b, c, d);
                    if (gap > best) {
                        best = gap;
                        out.witness = Quadruple{a, b, c, d};
                    }
                }
    out.delta = HalfInt::from_twice(std::max<std::int64_t>(best, 0));
    return out;
}

// Pair (x, y) such that no neighbour of either endpoint is farther from the other endpoint.
inline bool is_far_pair(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y)
{
    const Dist dxy = dm(x, y);
    for (Vertex w : g.neighbors(x))
        if (dm(w, y) > dxy)
            return false;
    for (Vertex w : g.neighbors(y))
        if (dm(w, x) > dxy)
            return false;
    return true;
}

// Same value as delta_four_point. Only quadruples whose two largest-sum
// diagonals are far pairs are visited, pairs in decreasing distance, and the
// scan stops once no remaining pair can beat the incumbent gap.
inline FourPointResult delta_four_point_pruned(const Graph& g, const DistanceMatrix& dm)
{
    const int n = dm.n();
    FourPointResult out;
    if (n < 4) {
        out.delta = HalfInt(0);
        return out;
    }
    struct Pair {
        Dist d;
        Vertex x, y;
    };
    std::vector<Pair> pairs;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            if (is_far_pair(g, dm, x, y))
                pairs.push_back({dm(x, y), x, y});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d > b.d; });
    out.far_pairs = pairs.size();

    std::int64_t best = 0;
    out.witness = Quadruple{0, 1, 2, 3};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [dxy, x, y] = pairs[i];
        if (dxy <= best)
            break; // gap <= min of the two diagonals
        const Dist* rx = dm.row(x);
        const Dist* ry = dm.row(y);
        for (std::size_t j = 0; j < i; ++j) {
            const auto [dvw, v, w] = pairs[j];
            ++out.quadruples_examined;
            const std::int64_t s1 = dxy + dvw;
            const std::int64_t s2 = rx[v] + ry[w];
            const std::int64_t s3 = rx[w] + ry[v];
            const std::int64_t gap = s1 - std::max(s2, s3);
            if (gap > best) {
                best = gap;
                Quadruple q{x, y, v, w};
                std::sort(q.begin(), q.end());
                out.witness = q;
            }
        }
    }
    out.delta = HalfInt::from_twice(best);
    return out;
}

struct ThinResult {
    HalfInt value;
    // corner x, far ends y and z, step k, points on the two sides
    std::array<Vertex, 3> triangle{};
    int step = 0;
    Vertex point_a = 0, point_b = 0;
};

// Worst case over all geodesic triangles and all geodesic choices of
// d(y_k, y'_k), for k up to the Gromov product at the corner.
inline ThinResult thin_triangles_constant(const DistanceMatrix& dm)
{
    const int n = dm.n();
    ThinResult out;
    int best = 0;
    // levels[y][k]: vertices at distance k from the corner on some corner-y geodesic
    std::vector<std::vector<std::vector<Vertex>>> levels(static_cast<std::size_t>(n));
    for (Vertex c = 0; c < n; ++c) {
        const Dist* dc = dm.row(c);
        for (Vertex y = 0; y < n; ++y) {
            auto& lv = levels[y];
            lv.assign(static_cast<std::size_t>(dc[y]) + 1, {});
            for (Vertex w = 0; w < n; ++w)
                if (dc[w] + dm(w, y) == dc[y])
                    lv[dc[w]].push_back(w);
        }
        for (Vertex y = 0; y < n; ++y)
            for (Vertex z = y; z < n; ++z) {
                const std::int64_t twice = static_cast<std::int64_t>(dc[y]) + dc[z] - dm(y, z);
                const int kmax = static_cast<int>(twice / 2);
                for (int k = 1; k <= kmax; ++k)
                    for (Vertex a : levels[y][k]) {
                        const Dist* da = dm.row(a);
                        for (Vertex b : levels[z][k])
                            if (da[b] > best) {
                                best = da[b];
                                out.triangle = {c, y, z};
                                out.step = k;
                                out.point_a = a;
                                out.point_b = b;
                            }
                    }
            }
    }
    out.value = HalfInt(best);
    return out;
}

struct SlimResult {
    HalfInt value;
    std::array<Vertex, 3> triangle{}; // u lies on a geodesic between the first two
    Vertex point = 0;
};

// bottleneck[x][z][u]: max over x-z geodesics of the min distance from u to the path.
class GeodesicBottleneck {
public:
    explicit GeodesicBottleneck(const Graph& g, const DistanceMatrix& dm) : n_(dm.n())
    {
        table_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
        std::vector<Dist> best(static_cast<std::size_t>(n_));
        for (Vertex x = 0; x < n_; ++x) {
            std::vector<Vertex> order(static_cast<std::size_t>(n_));
            for (Vertex v = 0; v < n_; ++v)
                order[v] = v;
            const Dist* dx = dm.row(x);
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dx[a] < dx[b]; });
            for (Vertex u = 0; u < n_; ++u) {
                const Dist* du = dm.row(u);
                for (Vertex v : order) {
                    if (v == x) {
                        best[v] = du[v];
                        continue;
                    }
                    Dist through = 0;
                    for (Vertex p : g.neighbors(v))
                        if (dx[p] + 1 == dx[v])
                            through = std::max(through, best[p]);
                    best[v] = std::min(du[v], through);
                }
                for (Vertex z = 0; z < n_; ++z)
                    table_[idx(x, z, u)] = best[z];
            }
        }
    }

    Dist operator()(Vertex x, Vertex z, Vertex u) const { return table_[idx(x, z, u)]; }

private:
    std::size_t idx(Vertex x, Vertex z, Vertex u) const
    {
        return (static_cast<std::size_t>(x) * n_ + z) * n_ + u;
    }
    int n_;
    std::vector<Dist> table_;
};

// Worst case over geodesic triangles and geodesic choices of the distance
// from a point on one side to the union of the other two sides.
inline SlimResult slim_triangles_constant(const Graph& g, const DistanceMatrix& dm)
{
    const int n = dm.n();
    GeodesicBottleneck bn(g, dm);
    SlimResult out;
    Dist best = 0;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            const auto side = dm.interval(x, y);
            for (Vertex z = 0; z < n; ++z)
                for (Vertex u : side) {
                    const Dist v = std::min(bn(x, z, u), bn(y, z, u));
                    if (v > best) {
                        best = v;
                        out.triangle = {x, y, z};
                        out.point = u;
                    }
                }
        }
    out.value = HalfInt(best);
    return out;
}

struct SeparatorBound {
    int separator_diameter = 0;          // k
    std::vector<HalfInt> component_delta; // per component of G - B, delta of G[C u B]
    HalfInt bound;                        // k + max component delta
};

// Bound on the four-point delta from a separator B with G[B] connected.
inline SeparatorBound separator_bound(const Graph& g, const std::vector<Vertex>& separator)
{
    std::vector<Vertex> b = separator;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (b.empty())
        throw InputError("empty separator");
    for (Vertex v : b)
        if (v < 0 || v >= g.n())
            throw InputError("separator vertex out of range");
    Graph gb = induced_subgraph(g, b);
    if (!is_connected(gb))
        throw InputError("separator does not induce a connected subgraph");
    SeparatorBound out;
    out.separator_diameter = all_pairs_distances(gb).diameter();

    std::vector<char> in_b(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : b)
        in_b[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!in_b[v])
            rest.push_back(v);
    Graph gr = induced_subgraph(g, rest);
    int count = 0;
    auto comp = component_ids(gr, &count);
    if (count < 2)
        throw InputError("vertex set is not a separator");
    HalfInt worst(0);
    for (int c = 0; c < count; ++c) {
        std::vector<Vertex> keep = b;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (comp[i] == c)
                keep.push_back(rest[i]);
        std::sort(keep.begin(), keep.end());
        Graph gi = induced_subgraph(g, keep);
        auto dmi = all_pairs_distances(gi);
        HalfInt d = delta_four_point_pruned(gi, dmi).delta;
        out.component_delta.push_back(d);
        worst = max(worst, d);
    }
    out.bound = HalfInt(out.separator_diameter) + worst;
    return out;
}

inline bool is_simplicial(const Graph& g, Vertex z)
{
    const auto& nb = g.neighbors(z);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j]))
                return false;
    return true;
}

inline Graph remove_vertex(const Graph& g, Vertex z)
{
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n(); ++v)
        if (v != z)
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

struct SimplicialHit {
    Graph graph;
    Vertex vertex = 0;
    HalfInt delta_before, delta_after;
};

struct SimplicialSearch {
    std::optional<SimplicialHit> first;
    std::uint64_t graphs_checked = 0;
    std::uint64_t hits = 0;
};

// Connected graphs on 4..n_max labelled vertices with a simplicial vertex
// whose removal lowers the four-point delta.
inline SimplicialSearch simplicial_counterexample_search(int n_max)
{
    if (n_max > 7)
        throw InputError("simplicial search limited to n <= 7");
    SimplicialSearch out;
    for (int n = 4; n <= n_max; ++n) {
        std::vector<Edge> slots;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                slots.emplace_back(u, v);
        const std::uint64_t total = std::uint64_t{1} << slots.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1)
                    edges.push_back(slots[i]);
            Graph g(n, edges);
            if (!is_connected(g))
                continue;
            ++out.graphs_checked;
            const HalfInt before = delta_four_point(all_pairs_distances(g, 1)).delta;
            if (before == HalfInt(0))
                continue;
            for (Vertex z = 0; z < n; ++z) {
                if (!is_simplicial(g, z))
                    continue;
                Graph h = remove_vertex(g, z);
                const HalfInt after = delta_four_point(all_pairs_distances(h, 1)).delta;
                if (after < before) {
                    ++out.hits;
                    if (!out.first)
                        out.first = SimplicialHit{g, z, before, after};
                }
            }
        }
    }
    return out;
}

} // namespace hypnet

#endif
