#ifndef HYPNET_TESTS_ORACLES_HPP
#define HYPNET_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hypnet/graph.hpp"
#include "hypnet/half_int.hpp"
#include "hypnet/rational.hpp"

namespace hypnet::brute {

constexpr int inf = 1 << 20;

// Floyd-Warshall on hop counts.
inline std::vector<std::vector<int>> floyd(const Graph& g)
{
    const int n = g.n();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex w : g.neighbors(v))
            d[v][w] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Every shortest u-v path as a vertex sequence, by depth-first search.
inline std::vector<std::vector<Vertex>> all_geodesics(const Graph& g, const std::vector<std::vector<int>>& d,
                                                      Vertex u, Vertex v)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur{u};
    auto rec = [&](auto&& self, Vertex x) -> void {
        if (x == v) {
            out.push_back(cur);
            return;
        }
        for (Vertex w : g.neighbors(x))
            if (d[w][v] + 1 == d[x][v]) {
                cur.push_back(w);
                self(self, w);
                cur.pop_back();
            }
    };
    rec(rec, u);
    return out;
}

// Demand by explicit path enumeration: unordered pairs {x, y} with w not an
// endpoint, each adding the fraction of its geodesics through w.
inline std::vector<Rational> demand_by_paths(const Graph& g)
{
    const int n = g.n();
    const auto d = floyd(g);
    std::vector<Rational> out(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            const auto paths = all_geodesics(g, d, x, y);
            std::vector<long long> through(n, 0);
            for (const auto& p : paths)
                for (std::size_t i = 1; i + 1 < p.size(); ++i)
                    ++through[p[i]];
            for (Vertex w = 0; w < n; ++w)
                if (through[w])
                    out[w] += Rational(through[w], static_cast<long long>(paths.size()));
        }
    return out;
}

// Four-point delta straight from the definition over all ordered quadruples.
inline HalfInt delta_by_definition(const std::vector<std::vector<int>>& d)
{
    const int n = static_cast<int>(d.size());
    int best = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e) {
                    const int s1 = d[a][b] + d[c][e], s2 = d[a][c] + d[b][e], s3 = d[a][e] + d[b][c];
                    // s1 <= max(s2, s3) + 2 delta
                    best = std::max(best, s1 - std::max(s2, s3));
                }
    return HalfInt::from_twice(best);
}

// max over vertex sequences x = z0, ..., zk = y of min (z_i . z_{i+1})_r, by a
// Floyd-style max-min closure over all pairs.
inline std::vector<std::vector<std::int64_t>> maxmin_products(const std::vector<std::vector<int>>& d, Vertex r)
{
    const int n = static_cast<int>(d.size());
    std::vector<std::vector<std::int64_t>> f(n, std::vector<std::int64_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            f[x][y] = d[x][r] + d[y][r] - d[x][y]; // twice the Gromov product
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                f[i][j] = std::max(f[i][j], std::min(f[i][k], f[k][j]));
    return f;
}

// Hand-rolled property-test generator: connected graphs of assorted density.
struct GraphGen {
    std::mt19937_64 rng;
    explicit GraphGen(std::uint64_t seed) : rng(seed) {}

    Graph next(int n_lo, int n_hi)
    {
        const int n = n_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(n_hi - n_lo + 1));
        const double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
        std::vector<Edge> e;
        std::vector<Vertex> order(n);
        for (int i = 0; i < n; ++i)
            order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 1; i < n; ++i)
            e.emplace_back(order[i], order[rng() % static_cast<std::uint64_t>(i)]);
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    e.emplace_back(u, v);
        return Graph(n, e);
    }
};

} // namespace hypnet::brute

#endif
