#ifndef HYPNET_GENERATORS_HPP
#define HYPNET_GENERATORS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hypnet/embedding.hpp"
#include "hypnet/graph.hpp"

namespace hypnet {

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InputError(what);
}

// m rows by n columns; vertex (i, j) is i * n + j.
inline Graph grid(int m, int n)
{
    require(m >= 1 && n >= 1, "grid needs positive sides");
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (j + 1 < n)
                e.emplace_back(i * n + j, i * n + j + 1);
            if (i + 1 < m)
                e.emplace_back(i * n + j, (i + 1) * n + j);
        }
    return Graph(m * n, e);
}

inline Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

// Path on n vertices.
inline Graph path(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph complete(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

// Centre 0 with leaves 1..leaves.
inline Graph star(int leaves)
{
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

// Complete binary tree with levels 0..depth in heap order, each level closed into a cycle.
inline Graph ringed_tree(int depth)
{
    require(depth >= 1 && depth <= 20, "ringed tree depth must be in 1..20");
    const int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> e;
    for (int v = 0; 2 * v + 2 < n; ++v) {
        e.emplace_back(v, 2 * v + 1);
        e.emplace_back(v, 2 * v + 2);
    }
    for (int i = 1; i <= depth; ++i) {
        const int first = (1 << i) - 1, size = 1 << i;
        for (int j = 0; j < size; ++j) {
            const int a = first + j, b = first + (j + 1) % size;
            if (a != b)
                e.emplace_back(a, b);
        }
    }
    return Graph(n, e);
}

// C_len x P_width; vertex (a, b) with a on the cycle and b on the path is b * len + a.
inline Graph cartesian_cycle_path(int len, int width)
{
    require(len >= 3 && width >= 1, "cycle-path product needs len >= 3, width >= 1");
    std::vector<Edge> e;
    for (int b = 0; b < width; ++b)
        for (int a = 0; a < len; ++a) {
            e.emplace_back(b * len + a, b * len + (a + 1) % len);
            if (b + 1 < width)
                e.emplace_back(b * len + a, (b + 1) * len + a);
        }
    return Graph(len * width, e);
}

// The cylinder C_len x P_(r * len).
inline Graph cylinder_grid(int r, int len) { return cartesian_cycle_path(len, r * len); }

// Vertices (i, j) = i * k2 + j; (i, j) ~ (i', j') iff i = i', or i' = i +- 1 mod k and j = j'.
inline Graph lexicographic_cycle_clique(int k, int k2)
{
    require(k >= 3 && k2 >= 1, "cycle-clique product needs k >= 3, k' >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k2; ++j) {
            for (int j2 = j + 1; j2 < k2; ++j2)
                e.emplace_back(i * k2 + j, i * k2 + j2);
            e.emplace_back(i * k2 + j, ((i + 1) % k) * k2 + j);
        }
    return Graph(k * k2, e);
}

// Each edge replaced by a path of k edges; original vertices keep their indices.
inline Graph subdivision(const Graph& g, int k)
{
    require(k >= 1, "subdivision factor must be positive");
    std::vector<Edge> e;
    int next = g.n();
    for (auto [u, v] : g.edges()) {
        Vertex prev = u;
        for (int i = 1; i < k; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, v);
    }
    return Graph(next, e);
}

// Grid points of a T-shaped union: an h x h base, legs of length k to the left
// and right, and a leg of length 3k downwards. Order: base, long leg, left, right.
inline std::vector<std::pair<int, int>> y_graph_points(int h, int k)
{
    std::vector<std::pair<int, int>> pts;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < h; ++c)
            pts.emplace_back(r, c);
    for (int r = h; r < h + 3 * k; ++r)
        for (int c = 0; c < h; ++c)
            pts.emplace_back(r, c);
    for (int r = 0; r < h; ++r)
        for (int c = -k; c < 0; ++c)
            pts.emplace_back(r, c);
    for (int r = 0; r < h; ++r)
        for (int c = h; c < h + k; ++c)
            pts.emplace_back(r, c);
    return pts;
}

inline Graph y_graph(int h, int k)
{
    require(h >= 1 && k >= 1, "y graph needs h, k >= 1");
    auto pts = y_graph_points(h, k);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < pts.size(); ++i)
        index[pts[i]] = static_cast<int>(i);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [r, c] = pts[i];
        for (auto nb : {std::pair{r + 1, c}, std::pair{r, c + 1}}) {
            auto it = index.find(nb);
            if (it != index.end())
                e.emplace_back(static_cast<int>(i), it->second);
        }
    }
    return Graph(static_cast<int>(pts.size()), e);
}

// Hub 0 with leaves 1..k, and the path 0 - (k+1) - ... - (k+len).
inline Graph broom(int k, int len)
{
    require(k >= 1 && len >= 1, "broom needs k, len >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= k; ++i)
        e.emplace_back(0, i);
    e.emplace_back(0, k + 1);
    for (int i = 1; i < len; ++i)
        e.emplace_back(k + i, k + i + 1);
    return Graph(k + len + 1, e);
}

// i ~ j iff the cyclic difference is a power of two.
inline Graph chord_cycle(int n)
{
    require(n >= 3, "chord cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int p = 1; p < n; p *= 2)
            e.emplace_back(i, (i + p) % n);
    return Graph(n, e);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_draw(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random spanning tree plus independent extra edges with probability p.
inline Graph random_connected(int n, double p, std::uint64_t seed)
{
    require(n >= 1, "random graph needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v)
        e.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p)
                e.emplace_back(u, v);
    return Graph(n, e);
}

// Two random connected graphs sharing vertex 0, so 0 is a cut vertex.
inline Graph random_with_cut_vertex(int n1, int n2, double p, std::uint64_t seed)
{
    Graph a = random_connected(n1, p, seed);
    Graph b = random_connected(n2, p, seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Edge> e = a.edges();
    auto shift = [&](Vertex v) { return v == 0 ? 0 : v + n1 - 1; };
    for (auto [u, v] : b.edges())
        e.emplace_back(shift(u), shift(v));
    return Graph(n1 + n2 - 1, e);
}

struct GrownTriangulation {
    EmbeddedGraph embedded;
    std::vector<Vertex> boundary; // outer cycle in order
    bool stuck = false;           // growth stopped before the requested steps
};

// Triangulated disc grown from a triangle. The oldest boundary vertex below
// degree d is surrounded by d - deg new boundary vertices; a boundary vertex
// reaching degree d is closed off by joining its boundary neighbours. The seed
// picks which corner of the first triangle grows first.
inline GrownTriangulation triangulation_growth(int d, int steps, std::uint64_t seed)
{
    require(d >= 4, "triangulation growth needs target degree >= 4");
    require(steps >= 0, "steps must be non-negative");
    std::vector<std::array<Vertex, 3>> tris{{0, 1, 2}};
    std::vector<Vertex> boundary{0, 1, 2};
    std::vector<int> deg{2, 2, 2};
    std::vector<std::vector<Vertex>> nbrs{{1, 2}, {0, 2}, {0, 1}};
    auto link = [&](Vertex a, Vertex b) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
        ++deg[a];
        ++deg[b];
    };
    auto adjacent = [&](Vertex a, Vertex b) {
        return std::find(nbrs[a].begin(), nbrs[a].end(), b) != nbrs[a].end();
    };
    auto position = [&](Vertex w) {
        return static_cast<std::size_t>(std::find(boundary.begin(), boundary.end(), w) - boundary.begin());
    };
    bool stuck = false;
    auto close = [&](Vertex w) {
        const std::size_t p = position(w), b = boundary.size();
        Vertex u1 = boundary[(p + b - 1) % b], u2 = boundary[(p + 1) % b];
        if (b <= 3 || adjacent(u1, u2)) {
            stuck = true;
            return;
        }
        tris.push_back({u1, u2, w});
        link(u1, u2);
        boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(p));
    };
    auto settle = [&] {
        bool changed = true;
        while (changed && !stuck) {
            changed = false;
            for (Vertex v : boundary)
                if (deg[v] >= d) {
                    if (deg[v] > d)
                        stuck = true;
                    else
                        close(v);
                    changed = true;
                    break;
                }
        }
    };
    const Vertex first = static_cast<Vertex>(seed % 3);
    for (int step = 0; step < steps && !stuck; ++step) {
        Vertex w = -1;
        if (step == 0)
            w = first;
        else
            for (Vertex v : boundary)
                if (deg[v] < d && (w < 0 || v < w))
                    w = v;
        if (w < 0)
            break;
        const std::size_t p = position(w), b = boundary.size();
        const Vertex u1 = boundary[(p + b - 1) % b], u2 = boundary[(p + 1) % b];
        const int k = d - deg[w];
        std::vector<Vertex> chain{u1};
        for (int i = 0; i < k; ++i) {
            chain.push_back(static_cast<Vertex>(deg.size()));
            deg.push_back(0);
            nbrs.emplace_back();
        }
        chain.push_back(u2);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            tris.push_back({chain[i], chain[i + 1], w});
            link(chain[i], chain[i + 1]);
        }
        for (std::size_t i = 1; i + 1 < chain.size(); ++i)
            link(chain[i], w);
        boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(p));
        boundary.insert(boundary.begin() + static_cast<std::ptrdiff_t>(p), chain.begin() + 1, chain.end() - 1);
        settle();
    }
    GrownTriangulation out;
    out.embedded = from_oriented_triangles(static_cast<int>(deg.size()), tris);
    out.boundary = boundary;
    out.stuck = stuck;
    return out;
}

} // namespace hypnet

#endif
