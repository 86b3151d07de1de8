#ifndef HYPNET_CONGESTION_HPP
#define HYPNET_CONGESTION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypnet/distance.hpp"
#include "hypnet/generators.hpp"
#include "hypnet/graph.hpp"
#include "hypnet/half_int.hpp"
#include "hypnet/hyperbolicity.hpp"
#include "hypnet/rational.hpp"

namespace hypnet {

// Expected number of interior visits to each vertex over all unordered pairs,
// each pair routed uniformly over its geodesics.
inline std::vector<Rational> demand_profile(const Graph& g, const DistanceMatrix& dm)
{
    if (!dm.has_counts())
        throw InputError("demand needs path counts");
    const int n = g.n();
    std::vector<Rational> total(static_cast<std::size_t>(n));
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::vector<Rational> dep(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex v = 0; v < n; ++v)
            order[v] = v;
        const Dist* ds = dm.row(s);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return ds[a] > ds[b]; });
        for (Vertex v : order) {
            // dep(v) = sigma(s,v) * sum over successors w of (1 + dep(w)) / sigma(s,w)
            Rational acc = 0;
            for (Vertex w : g.neighbors(v))
                if (ds[w] == ds[v] + 1)
                    acc += (1 + dep[w]) / Rational(dm.sigma(s, w));
            dep[v] = acc * dm.sigma(s, v);
            if (v != s)
                total[v] += dep[v];
        }
    }
    for (auto& t : total)
        t /= 2;
    return total;
}

// Demand at a single vertex from the pair formula.
inline Rational demand_at(const DistanceMatrix& dm, Vertex w)
{
    if (!dm.has_counts())
        throw InputError("demand needs path counts");
    const int n = dm.n();
    Rational out = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (u == w)
            continue;
        Rational row = 0;
        for (Vertex v = u + 1; v < n; ++v)
            if (v != w && dm.on_geodesic(u, w, v))
                row += Rational(dm.sigma(w, v), dm.sigma(u, v));
        out += row * dm.sigma(u, w);
    }
    return out;
}

inline Rational total_demand(const DistanceMatrix& dm)
{
    Rational t = 0;
    for (Vertex u = 0; u < dm.n(); ++u)
        for (Vertex v = u + 1; v < dm.n(); ++v)
            t += dm(u, v) - 1;
    return t;
}

// Demand divided by the number of unordered pairs.
inline std::vector<Rational> betweenness(const std::vector<Rational>& demand)
{
    const long long n = static_cast<long long>(demand.size());
    std::vector<Rational> out;
    for (const auto& d : demand)
        out.push_back(n >= 2 ? d / Rational(n * (n - 1) / 2) : Rational(0));
    return out;
}

// Sum of squared distances from each vertex.
inline std::vector<std::int64_t> inertia(const DistanceMatrix& dm)
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(dm.n()), 0);
    for (Vertex v = 0; v < dm.n(); ++v)
        for (Vertex w = 0; w < dm.n(); ++w)
            out[v] += static_cast<std::int64_t>(dm(v, w)) * dm(v, w);
    return out;
}

template <class T>
std::vector<Vertex> argmin_set(const std::vector<T>& xs)
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!out.empty() && xs[i] > xs[out.front()])
            continue;
        if (!out.empty() && xs[i] < xs[out.front()])
            out.clear();
        out.push_back(static_cast<Vertex>(i));
    }
    return out;
}

template <class T>
std::vector<Vertex> argmax_set(const std::vector<T>& xs)
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!out.empty() && xs[i] < xs[out.front()])
            continue;
        if (!out.empty() && xs[i] > xs[out.front()])
            out.clear();
        out.push_back(static_cast<Vertex>(i));
    }
    return out;
}

inline std::vector<Vertex> inertia_argmin(const DistanceMatrix& dm) { return argmin_set(inertia(dm)); }

struct HalfSpace {
    std::vector<Vertex> geodesic; // canonical u-v geodesic
    Vertex midpoint = 0;          // at ceil(d/2) from u
    std::vector<HalfInt> f;       // (d(z,v) - d(z,u)) / 2
    std::vector<Vertex> positive, negative, zero;
    std::map<int, std::vector<Vertex>> hyperplanes; // 2f -> vertices
};

inline HalfSpace halfspace(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v)
{
    if (dm(u, v) < 2)
        throw InputError("half-space needs endpoints at distance >= 2");
    HalfSpace h;
    h.geodesic = canonical_geodesic(g, dm, u, v);
    h.midpoint = h.geodesic[(dm(u, v) + 1) / 2];
    for (Vertex z = 0; z < dm.n(); ++z) {
        const int twice = static_cast<int>(dm(z, v)) - static_cast<int>(dm(z, u));
        h.f.push_back(HalfInt::from_twice(twice));
        (twice > 0 ? h.positive : twice < 0 ? h.negative : h.zero).push_back(z);
        h.hyperplanes[twice].push_back(z);
    }
    return h;
}

struct CongestionCenter {
    DiametralPair pair;
    std::vector<Vertex> geodesic;
    Vertex center = 0;
};

// Midpoint of the canonical geodesic between the smallest diametral pair.
inline CongestionCenter congestion_center(const Graph& g, const DistanceMatrix& dm)
{
    CongestionCenter c;
    c.pair = diameter(dm);
    c.geodesic = canonical_geodesic(g, dm, c.pair.u, c.pair.v);
    c.center = c.geodesic[(c.pair.diameter + 1) / 2];
    return c;
}

// t/2 + 4 thin + 2 delta, plus 1/2 when the diameter is odd.
inline HalfInt radius_bound(int t, HalfInt thin, HalfInt delta, Dist diam)
{
    HalfInt r = HalfInt::from_twice(t) + 4 * thin + 2 * delta;
    if (diam % 2 == 1)
        r += half;
    return r;
}

struct Coverage {
    Rational strict;      // pairs all of whose geodesics meet the ball
    Rational weak;        // pairs with some geodesic meeting the ball
    Rational ball_demand; // demand summed over the ball
};

inline Coverage coverage_fraction(const Graph& g, const DistanceMatrix& dm, const std::vector<Rational>& demand,
                                  Vertex r, int rho)
{
    const int n = g.n();
    std::vector<char> outside(static_cast<std::size_t>(n));
    std::vector<Vertex> ball;
    for (Vertex z = 0; z < n; ++z) {
        outside[z] = dm(r, z) > rho;
        if (!outside[z])
            ball.push_back(z);
    }
    Coverage c;
    for (Vertex z : ball)
        c.ball_demand += demand[z];
    long long strict = 0, weak = 0, pairs = 0;
    for (Vertex x = 0; x < n; ++x) {
        const auto avoid = bfs_within(g, x, outside);
        for (Vertex y = x + 1; y < n; ++y) {
            ++pairs;
            if (avoid[y] != dm(x, y))
                ++strict;
            for (Vertex z : ball)
                if (dm.on_geodesic(x, z, y)) {
                    ++weak;
                    break;
                }
        }
    }
    if (pairs > 0) {
        c.strict = Rational(strict, pairs);
        c.weak = Rational(weak, pairs);
    }
    return c;
}

struct BalanceReport {
    std::uint64_t pairs_checked = 0;
    bool sampled = false;
    Rational c_halfspace = 1;     // min over long maximal geodesics of the smaller side / n
    std::vector<std::int64_t> shells; // |S_k(r)| for 2k <= diam
    double growth = 0;            // b from a least-squares fit of log |S_k(r)|
    double c_shell = 0;           // largest c with c b^k <= |S_k| <= b^k / c
    bool halfspace_ok = false;
    bool shell_ok = false;
};

// Balance of long maximal geodesics and shell growth around r. A maximal
// geodesic is determined here by its endpoints, which must be a far pair.
inline BalanceReport balance_check(const Graph& g, const DistanceMatrix& dm, Vertex r, int a,
                                   double min_c = 0.05, double min_growth = 1.25,
                                   std::uint64_t cap = 100000, std::uint64_t seed = 1)
{
    const int n = g.n();
    const Dist diam = dm.diameter();
    BalanceReport rep;
    std::vector<Edge> pairs;
    std::mt19937_64 rng(seed);
    std::uint64_t seen = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (static_cast<int>(dm(u, v)) < static_cast<int>(diam) - a || !is_far_pair(g, dm, u, v))
                continue;
            ++seen;
            if (pairs.size() < cap) {
                pairs.emplace_back(u, v);
            } else {
                const std::uint64_t j = rng() % seen;
                if (j < cap)
                    pairs[j] = {u, v};
            }
        }
    rep.sampled = seen > cap;
    rep.pairs_checked = pairs.size();
    for (auto [u, v] : pairs) {
        long long pos = 0, neg = 0;
        for (Vertex z = 0; z < n; ++z) {
            if (dm(z, v) > dm(z, u))
                ++pos;
            else if (dm(z, v) < dm(z, u))
                ++neg;
        }
        const Rational frac(std::min(pos, neg), n);
        if (frac < rep.c_halfspace)
            rep.c_halfspace = frac;
    }
    rep.halfspace_ok = !pairs.empty() && to_double(rep.c_halfspace) >= min_c;

    const int kmax = diam / 2;
    rep.shells.assign(static_cast<std::size_t>(kmax) + 1, 0);
    for (Vertex z = 0; z < n; ++z)
        if (dm(r, z) <= kmax)
            ++rep.shells[dm(r, z)];
    if (kmax >= 1) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = kmax + 1;
        for (int k = 0; k <= kmax; ++k) {
            const double y = std::log(static_cast<double>(rep.shells[k]));
            sx += k;
            sy += y;
            sxx += static_cast<double>(k) * k;
            sxy += k * y;
        }
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        rep.growth = std::exp(slope);
        rep.c_shell = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            const double ratio = static_cast<double>(rep.shells[k]) / std::pow(rep.growth, k);
            rep.c_shell = std::min({rep.c_shell, ratio, 1.0 / ratio});
        }
    }
    rep.shell_ok = kmax >= 1 && rep.growth >= min_growth && rep.c_shell >= min_c;
    return rep;
}

struct GridDemand {
    int side = 0;
    long long n = 0;
    Vertex center = 0;
    Rational demand;
    double ratio = 0; // demand / n^1.5
    double lower = 0; // n^1.5 / 4
    double upper = 0; // 9 n^1.5 / 8
};

// Demand at the centre of the side x side grid, side odd.
inline GridDemand grid_center_demand(int side)
{
    if (side < 3 || side % 2 == 0)
        throw InputError("grid side must be odd and at least 3");
    GridDemand out;
    out.side = side;
    out.n = static_cast<long long>(side) * side;
    const Graph g = grid(side, side);
    const auto dm = all_pairs(g);
    out.center = (side / 2) * side + side / 2;
    out.demand = demand_at(dm, out.center);
    const double n15 = std::pow(static_cast<double>(out.n), 1.5);
    out.ratio = to_double(out.demand) / n15;
    out.lower = n15 / 4;
    out.upper = 9 * n15 / 8;
    return out;
}

struct LemmaReport {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
};

// avoid[x * n + y]: some x-y geodesic misses the ball of radius rad around r.
inline std::vector<char> geodesic_avoids_ball(const Graph& g, const DistanceMatrix& dm, Vertex r, int rad)
{
    const int n = g.n();
    std::vector<char> outside(static_cast<std::size_t>(n));
    for (Vertex z = 0; z < n; ++z)
        outside[z] = dm(r, z) > rad;
    std::vector<char> avoid(static_cast<std::size_t>(n) * n, 0);
    for (Vertex x = 0; x < n; ++x) {
        if (!outside[x])
            continue;
        const auto d = bfs_within(g, x, outside);
        for (Vertex y = 0; y < n; ++y)
            avoid[static_cast<std::size_t>(x) * n + y] = outside[y] && d[y] == dm(x, y);
    }
    return avoid;
}

// Midpoints of u-v geodesics at distance ceil(d/2) from u.
inline std::vector<Vertex> geodesic_midpoints(const DistanceMatrix& dm, Vertex u, Vertex v)
{
    const int half_up = (dm(u, v) + 1) / 2;
    std::vector<Vertex> out;
    for (Vertex z = 0; z < dm.n(); ++z)
        if (dm(u, z) == half_up && dm.on_geodesic(u, z, v))
            out.push_back(z);
    return out;
}

struct LemmaChecks {
    LemmaReport congested_balls, halfspace, r_approximation;
};

// Exhaustive check of three congestion lemmas on a small graph, with thin the
// thin-triangle constant and delta the four-point constant.
inline LemmaChecks check_congestion_lemmas(const Graph& g, const DistanceMatrix& dm, HalfInt thin, HalfInt delta)
{
    const int n = g.n();
    LemmaChecks out;
    out.congested_balls.name = "congested_balls";
    out.halfspace.name = "halfspace";
    out.r_approximation.name = "r_approximation";
    const int rad = static_cast<int>(2 * thin.floor());
    std::vector<std::vector<char>> avoid(static_cast<std::size_t>(n));
    for (Vertex r = 0; r < n; ++r)
        avoid[r] = geodesic_avoids_ball(g, dm, r, rad);
    auto at = [&](Vertex r, Vertex x, Vertex y) { return avoid[r][static_cast<std::size_t>(x) * n + y] != 0; };
    auto note = [](LemmaReport& rep, bool bad, std::initializer_list<std::pair<const char*, Vertex>> what) {
        ++rep.checked;
        if (bad && rep.violations++ == 0)
            for (auto [k, v] : what)
                rep.first_violation += std::string(rep.first_violation.empty() ? "" : " ") + k + "=" +
                                       std::to_string(v);
    };

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            const int d = dm(u, v);
            if (d < 1)
                continue;
            std::vector<Vertex> xs, ys, far_side;
            for (Vertex z = 0; z < n; ++z) {
                if (2 * dm(u, z) < d)
                    xs.push_back(z);
                if (2 * dm(v, z) < d)
                    ys.push_back(z);
                if (dm(z, u) > dm(z, v))
                    far_side.push_back(z);
            }
            for (Vertex r : geodesic_midpoints(dm, u, v)) {
                for (Vertex x : xs) {
                    for (Vertex y : ys)
                        note(out.congested_balls, at(r, x, y), {{"u", u}, {"v", v}, {"r", r}, {"x", x}, {"y", y}});
                    if (d >= 2)
                        for (Vertex y : far_side)
                            note(out.halfspace, at(r, x, y), {{"u", u}, {"v", v}, {"r", r}, {"x", x}, {"y", y}});
                }
            }
        }

    const Dist diam = dm.diameter();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (dm(u, v) != diam || u == v)
                continue;
            for (Vertex r : geodesic_midpoints(dm, u, v))
                for (Vertex x = 0; x < n; ++x)
                    for (Vertex y = 0; y < n; ++y) {
                        if (x == y)
                            continue;
                        const int t = diam - dm(x, y);
                        // twice the bound, with 1/2 slack per odd-length midpoint
                        const std::int64_t bound2 =
                            t + 4 * thin.twice() + 2 * delta.twice() + (diam % 2) + (dm(x, y) % 2);
                        for (Vertex r2 : geodesic_midpoints(dm, x, y))
                            note(out.r_approximation, 2 * static_cast<std::int64_t>(dm(r, r2)) > bound2,
                                 {{"u", u}, {"v", v}, {"x", x}, {"y", y}, {"r", r}, {"r2", r2}});
                    }
        }
    return out;
}

} // namespace hypnet

#endif
