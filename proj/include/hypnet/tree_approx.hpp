#ifndef HYPNET_TREE_APPROX_HPP
#define HYPNET_TREE_APPROX_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "hypnet/distance.hpp"
#include "hypnet/graph.hpp"
#include "hypnet/half_int.hpp"
#include "hypnet/rational.hpp"
#include "hypnet/union_find.hpp"

namespace hypnet {

// Twice the Gromov product (u.v)_r of the endpoints of an edge.
inline std::int64_t edge_score(const std::vector<Dist>& level, Vertex u, Vertex v)
{
    const std::int64_t lu = level[u], lv = level[v];
    return 2 * std::min(lu, lv) - (lu == lv ? 1 : 0);
}

// Maximum-bottleneck values for a fixed root, answered from the merge tree
// built by adding edges in decreasing score order.
class BottleneckTree {
public:
    BottleneckTree(const Graph& g, Vertex root) : root_(root), level_(bfs(g, root))
    {
        const int n = g.n();
        std::vector<std::tuple<std::int64_t, Vertex, Vertex>> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(edge_score(level_, u, v), u, v);
        std::stable_sort(edges.begin(), edges.end(),
                         [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
        parent_.assign(static_cast<std::size_t>(n), -1);
        score_.assign(static_cast<std::size_t>(n), 0);
        UnionFind uf(n);
        std::vector<int> top(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            top[v] = v;
        for (auto [s, u, v] : edges) {
            int a = uf.find(u), b = uf.find(v);
            if (a == b)
                continue;
            const int node = static_cast<int>(parent_.size());
            parent_.push_back(-1);
            score_.push_back(s);
            parent_[top[a]] = node;
            parent_[top[b]] = node;
            uf.unite(a, b);
            top[uf.find(a)] = node;
        }
        depth_.assign(parent_.size(), 0);
        for (int v = static_cast<int>(parent_.size()) - 1; v >= 0; --v)
            if (parent_[v] >= 0)
                depth_[v] = depth_[parent_[v]] + 1;
    }

    Vertex root() const { return root_; }
    const std::vector<Dist>& levels() const { return level_; }

    // max over vertex sequences from x to y of the min Gromov product of consecutive terms
    HalfInt f(Vertex x, Vertex y) const
    {
        if (x == y)
            return HalfInt(level_[x]);
        int a = x, b = y;
        while (a != b) {
            if (depth_[a] < depth_[b])
                std::swap(a, b);
            a = parent_[a];
        }
        return HalfInt::from_twice(score_[a]);
    }

    HalfInt d_prime(Vertex x, Vertex y) const
    {
        return HalfInt(static_cast<std::int64_t>(level_[x]) + level_[y]) - 2 * f(x, y);
    }

private:
    Vertex root_;
    std::vector<Dist> level_;
    std::vector<int> parent_;
    std::vector<std::int64_t> score_;
    std::vector<int> depth_;
};

inline HalfInt f_value(const Graph& g, Vertex root, Vertex x, Vertex y)
{
    return BottleneckTree(g, root).f(x, y);
}

inline HalfInt d_prime(const Graph& g, Vertex root, Vertex x, Vertex y)
{
    return BottleneckTree(g, root).d_prime(x, y);
}

struct TreeNode {
    int parent = -1;
    HalfInt level;
    HalfInt weight; // length of the edge to the parent
    bool steiner = false;
    std::vector<Vertex> members; // graph vertices mapped here
};

// A cluster of the layering partition: one component of G[levels >= k] meeting shell k.
struct LayerCluster {
    int level = 0;
    int parent = -1;
    std::vector<Vertex> members;
};

struct LayeringTree {
    Vertex root = 0;
    std::vector<TreeNode> nodes; // node 0 holds the root
    std::vector<int> vmap;       // graph vertex -> node
    std::vector<int> depth;      // edges from node 0
    std::vector<Dist> level;     // graph vertex -> distance to root
    std::vector<LayerCluster> clusters;
    std::vector<int> cluster_of; // graph vertex -> cluster
};

// Shell-by-shell construction. Same-shell vertices joined through higher
// shells without a same-shell edge become one node; classes of one cluster
// that are joined only by same-shell edges hang off a Steiner point half a
// level up.
inline LayeringTree layering_tree(const Graph& g, Vertex root)
{
    const int n = g.n();
    if (root < 0 || root >= n)
        throw InputError("root out of range");
    LayeringTree t;
    t.root = root;
    t.level = bfs(g, root);
    int max_level = 0;
    for (Dist d : t.level) {
        if (d == unreachable)
            throw InputError("graph is disconnected");
        max_level = std::max<int>(max_level, d);
    }
    std::vector<std::vector<Vertex>> shell(static_cast<std::size_t>(max_level) + 1);
    for (Vertex v = 0; v < n; ++v)
        shell[t.level[v]].push_back(v);
    std::vector<std::vector<Edge>> up(shell.size()), flat(shell.size());
    for (auto [u, v] : g.edges()) {
        if (t.level[u] == t.level[v])
            flat[t.level[u]].emplace_back(u, v);
        else
            up[std::min(t.level[u], t.level[v])].emplace_back(u, v);
    }

    UnionFind uf(n);
    std::vector<int> klass(static_cast<std::size_t>(n)), cluster(static_cast<std::size_t>(n));
    for (int k = max_level; k >= 0; --k) {
        for (auto [u, v] : up[k])
            uf.unite(u, v);
        for (Vertex x : shell[k])
            klass[x] = uf.find(x);
        for (auto [u, v] : flat[k])
            uf.unite(u, v);
        for (Vertex x : shell[k])
            cluster[x] = uf.find(x);
    }

    t.vmap.assign(static_cast<std::size_t>(n), -1);
    t.cluster_of.assign(static_cast<std::size_t>(n), -1);
    t.nodes.push_back({-1, HalfInt(0), HalfInt(0), false, {root}});
    t.vmap[root] = 0;
    t.clusters.push_back({0, -1, {root}});
    t.cluster_of[root] = 0;
    for (int k = 1; k <= max_level; ++k) {
        // shell vertices are ascending, so groups come out ordered by smallest member
        std::map<int, std::vector<Vertex>> by_cluster;
        std::vector<int> cluster_order;
        for (Vertex x : shell[k]) {
            if (!by_cluster.count(cluster[x]))
                cluster_order.push_back(cluster[x]);
            by_cluster[cluster[x]].push_back(x);
        }
        for (int cid : cluster_order) {
            const auto& members = by_cluster[cid];
            Vertex below = -1;
            for (Vertex x : members) {
                for (Vertex y : g.neighbors(x))
                    if (t.level[y] + 1 == k) {
                        below = y;
                        break;
                    }
                if (below >= 0)
                    break;
            }
            const int parent_node = t.vmap[below];
            const int cidx = static_cast<int>(t.clusters.size());
            t.clusters.push_back({k, t.cluster_of[below], members});
            for (Vertex x : members)
                t.cluster_of[x] = cidx;

            std::map<int, std::vector<Vertex>> by_class;
            std::vector<int> class_order;
            for (Vertex x : members) {
                if (!by_class.count(klass[x]))
                    class_order.push_back(klass[x]);
                by_class[klass[x]].push_back(x);
            }
            int attach = parent_node;
            HalfInt w(1);
            if (class_order.size() > 1) {
                attach = static_cast<int>(t.nodes.size());
                t.nodes.push_back({parent_node, HalfInt(k) - half, half, true, {}});
                w = half;
            }
            for (int kid : class_order) {
                const int node = static_cast<int>(t.nodes.size());
                t.nodes.push_back({attach, HalfInt(k), w, false, by_class[kid]});
                for (Vertex x : by_class[kid])
                    t.vmap[x] = node;
            }
        }
    }
    t.depth.assign(t.nodes.size(), 0);
    for (std::size_t i = 1; i < t.nodes.size(); ++i)
        t.depth[i] = t.depth[t.nodes[i].parent] + 1;
    return t;
}

inline int tree_lca(const LayeringTree& t, int a, int b)
{
    while (a != b) {
        if (t.depth[a] < t.depth[b])
            std::swap(a, b);
        a = t.nodes[a].parent;
    }
    return a;
}

// Weighted path length between two tree nodes.
inline HalfInt node_distance(const LayeringTree& t, int a, int b)
{
    const int c = tree_lca(t, a, b);
    return t.nodes[a].level + t.nodes[b].level - 2 * t.nodes[c].level;
}

inline HalfInt tree_distance(const LayeringTree& t, Vertex x, Vertex y)
{
    return node_distance(t, t.vmap[x], t.vmap[y]);
}

struct TreeQuality {
    Dist class_diameter = 0;     // D: max d_G between vertices sharing a node
    HalfInt eps_max;             // max d_G - d_T
    HalfInt min_gap;             // min d_G - d_T
    Rational distortion = 1;     // max d_G / d_T over pairs with d_T > 0
    std::uint64_t collapsed_pairs = 0;
    double log_bound = 0;        // 2 delta log2(n - 1)
};

inline TreeQuality tree_quality(const DistanceMatrix& dm, const LayeringTree& t, HalfInt delta)
{
    const int n = dm.n();
    TreeQuality q;
    bool first = true;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            const HalfInt dt = tree_distance(t, x, y);
            const HalfInt gap = HalfInt(dm(x, y)) - dt;
            if (first || gap > q.eps_max)
                q.eps_max = gap;
            if (first || gap < q.min_gap)
                q.min_gap = gap;
            first = false;
            if (t.vmap[x] == t.vmap[y]) {
                ++q.collapsed_pairs;
                q.class_diameter = std::max(q.class_diameter, dm(x, y));
            } else if (dt > HalfInt(0)) {
                Rational r(2 * static_cast<std::int64_t>(dm(x, y)), dt.twice());
                if (r > q.distortion)
                    q.distortion = r;
            }
        }
    q.log_bound = n > 2 ? delta.to_double() * 2.0 * std::log2(static_cast<double>(n - 1)) : 0.0;
    return q;
}

// Per node, the farthest member from its smallest member; D/2 <= result <= D.
inline Dist d_approx2(const DistanceMatrix& dm, const LayeringTree& t)
{
    Dist best = 0;
    for (const auto& node : t.nodes)
        for (Vertex x : node.members)
            best = std::max(best, dm(node.members.front(), x));
    return best;
}

// Max diameter of a layering-partition cluster.
inline Dist cluster_diameter(const DistanceMatrix& dm, const LayeringTree& t)
{
    Dist best = 0;
    for (const auto& c : t.clusters)
        for (std::size_t i = 0; i < c.members.size(); ++i)
            for (std::size_t j = i + 1; j < c.members.size(); ++j)
                best = std::max(best, dm(c.members[i], c.members[j]));
    return best;
}

// One endpoint of the lexicographically smallest diametral pair.
inline Vertex default_root(const DistanceMatrix& dm) { return diameter(dm).u; }

} // namespace hypnet

#endif
