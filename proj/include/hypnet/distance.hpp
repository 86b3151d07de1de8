#ifndef HYPNET_DISTANCE_HPP
#define HYPNET_DISTANCE_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "hypnet/graph.hpp"
#include "hypnet/parallel.hpp"
#include "hypnet/rational.hpp"

namespace hypnet {

using Dist = std::uint16_t;
inline constexpr Dist unreachable = std::numeric_limits<Dist>::max();

// Single-source BFS distances; unreachable vertices get `unreachable`.
inline std::vector<Dist> bfs(const Graph& g, Vertex s)
{
    std::vector<Dist> d(static_cast<std::size_t>(g.n()), unreachable);
    std::vector<Vertex> queue{s};
    d[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u))
            if (d[w] == unreachable) {
                d[w] = static_cast<Dist>(d[u] + 1);
                queue.push_back(w);
            }
    }
    return d;
}

// BFS restricted to vertices with allowed[v] true.
inline std::vector<Dist> bfs_within(const Graph& g, Vertex s, const std::vector<char>& allowed)
{
    std::vector<Dist> d(static_cast<std::size_t>(g.n()), unreachable);
    if (!allowed[s])
        return d;
    std::vector<Vertex> queue{s};
    d[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u))
            if (allowed[w] && d[w] == unreachable) {
                d[w] = static_cast<Dist>(d[u] + 1);
                queue.push_back(w);
            }
    }
    return d;
}

// All-pairs hop distances and, optionally, shortest-path counts.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    int n() const { return n_; }
    Dist operator()(Vertex u, Vertex v) const { return dist_[idx(u, v)]; }
    const Dist* row(Vertex u) const { return dist_.data() + idx(u, 0); }

    bool has_counts() const { return !sigma_.empty(); }
    const BigInt& sigma(Vertex u, Vertex v) const { return sigma_[idx(u, v)]; }

    // w lies on some u-v geodesic.
    bool on_geodesic(Vertex u, Vertex w, Vertex v) const
    {
        return (*this)(u, w) + (*this)(w, v) == (*this)(u, v);
    }

    // Vertices on u-v geodesics, ascending.
    std::vector<Vertex> interval(Vertex u, Vertex v) const
    {
        std::vector<Vertex> out;
        for (Vertex w = 0; w < n_; ++w)
            if (on_geodesic(u, w, v))
                out.push_back(w);
        return out;
    }

    Dist diameter() const
    {
        Dist best = 0;
        for (Dist d : dist_)
            best = std::max(best, d);
        return best;
    }

private:
    std::size_t idx(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Dist> dist_;
    std::vector<BigInt> sigma_;

    friend DistanceMatrix all_pairs(const Graph&, bool, unsigned);
};

// One BFS per source; sources run concurrently when workers > 1.
// Throws InputError when the graph is disconnected.
inline DistanceMatrix all_pairs(const Graph& g, bool with_counts = true, unsigned workers = 0)
{
    DistanceMatrix dm;
    const int n = g.n();
    dm.n_ = n;
    dm.dist_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), unreachable);
    if (with_counts)
        dm.sigma_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), BigInt(0));
    parallel_for(
        static_cast<std::size_t>(n),
        [&](std::size_t si) {
            const Vertex s = static_cast<Vertex>(si);
            Dist* d = dm.dist_.data() + si * static_cast<std::size_t>(n);
            BigInt* sig = with_counts ? dm.sigma_.data() + si * static_cast<std::size_t>(n) : nullptr;
            std::vector<Vertex> queue{s};
            d[s] = 0;
            if (sig)
                sig[s] = 1;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex u = queue[head];
                for (Vertex w : g.neighbors(u)) {
                    if (d[w] == unreachable) {
                        d[w] = static_cast<Dist>(d[u] + 1);
                        queue.push_back(w);
                    }
                    if (sig && d[w] == d[u] + 1)
                        sig[w] += sig[u];
                }
            }
            if (queue.size() != static_cast<std::size_t>(n))
                throw InputError("graph is disconnected");
        },
        workers);
    return dm;
}

inline DistanceMatrix all_pairs_distances(const Graph& g, unsigned workers = 0)
{
    return all_pairs(g, false, workers);
}

struct DiametralPair {
    Dist diameter = 0;
    Vertex u = 0;
    Vertex v = 0;
};

// Diameter with the lexicographically smallest (u, v), u < v, attaining it.
inline DiametralPair diameter(const DistanceMatrix& dm)
{
    DiametralPair best;
    for (Vertex u = 0; u < dm.n(); ++u)
        for (Vertex v = u + 1; v < dm.n(); ++v)
            if (dm(u, v) > best.diameter)
                best = {dm(u, v), u, v};
    if (dm.n() == 1)
        best = {0, 0, 0};
    return best;
}

// Fraction of u-v geodesics passing through w.
inline Rational count_paths_through(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex w)
{
    if (u == v)
        throw InputError("count_paths_through needs distinct endpoints");
    if (!dm.has_counts())
        throw InputError("distance matrix lacks path counts");
    if (w == u || w == v)
        return Rational(1);
    if (!dm.on_geodesic(u, w, v))
        return Rational(0);
    return Rational(dm.sigma(u, w) * dm.sigma(w, v), dm.sigma(u, v));
}

// The geodesic from u to v that always steps to the smallest-index admissible neighbour.
inline std::vector<Vertex> canonical_geodesic(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v)
{
    std::vector<Vertex> path{u};
    Vertex cur = u;
    while (cur != v) {
        for (Vertex w : g.neighbors(cur))
            if (dm(w, v) + 1 == dm(cur, v)) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    return path;
}

} // namespace hypnet

#endif
