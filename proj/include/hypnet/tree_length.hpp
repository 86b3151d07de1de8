#ifndef HYPNET_TREE_LENGTH_HPP
#define HYPNET_TREE_LENGTH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypnet/distance.hpp"
#include "hypnet/graph.hpp"
#include "hypnet/tree_approx.hpp"

namespace hypnet {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags; // each sorted
    std::vector<Edge> tree_edges;          // between bag indices
    int length = 0;                        // max d_G diameter of a bag
    int width = 0;                         // max bag size - 1
};

inline void measure(TreeDecomposition& td, const DistanceMatrix& dm)
{
    td.length = 0;
    td.width = 0;
    for (auto& b : td.bags) {
        std::sort(b.begin(), b.end());
        td.width = std::max(td.width, static_cast<int>(b.size()) - 1);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                td.length = std::max<int>(td.length, dm(b[i], b[j]));
    }
}

// Empty when td is a tree decomposition of g.
inline std::vector<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td)
{
    std::vector<std::string> bad;
    const int nb = static_cast<int>(td.bags.size());
    const int n = g.n();
    if (nb == 0) {
        bad.push_back("no bags");
        return bad;
    }
    if (static_cast<int>(td.tree_edges.size()) != nb - 1)
        bad.push_back("bag tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                      std::to_string(nb) + " bags");
    std::vector<Edge> edges;
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
            bad.push_back("bad bag tree edge");
            return bad;
        }
        edges.emplace_back(a, b);
    }
    const Graph tree(nb, edges);
    if (!is_connected(tree))
        bad.push_back("bag tree is disconnected");

    std::vector<std::vector<int>> holding(static_cast<std::size_t>(n));
    for (int i = 0; i < nb; ++i)
        for (Vertex v : td.bags[i]) {
            if (v < 0 || v >= n) {
                bad.push_back("bag " + std::to_string(i) + " holds unknown vertex");
                return bad;
            }
            holding[v].push_back(i);
        }
    for (Vertex v = 0; v < n; ++v)
        if (holding[v].empty())
            bad.push_back("vertex " + std::to_string(v) + " is in no bag");
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (int i : holding[u])
            ok = ok || std::binary_search(td.bags[i].begin(), td.bags[i].end(), v);
        if (!ok)
            bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }
    for (Vertex v = 0; v < n; ++v) {
        if (holding[v].size() <= 1)
            continue;
        if (!is_connected(induced_subgraph(tree, holding[v])))
            bad.push_back("bags holding vertex " + std::to_string(v) + " are not connected");
    }
    return bad;
}

// Bags C u (N(C) one level down) over the clusters of the layering partition.
inline TreeDecomposition layering_decomposition(const Graph& g, const DistanceMatrix& dm, const LayeringTree& t)
{
    TreeDecomposition td;
    for (std::size_t c = 0; c < t.clusters.size(); ++c) {
        const auto& cl = t.clusters[c];
        std::vector<Vertex> bag = cl.members;
        for (Vertex x : cl.members)
            for (Vertex y : g.neighbors(x))
                if (t.level[y] + 1 == cl.level)
                    bag.push_back(y);
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        td.bags.push_back(std::move(bag));
        if (cl.parent >= 0)
            td.tree_edges.emplace_back(cl.parent, static_cast<int>(c));
    }
    measure(td, dm);
    return td;
}

struct TreeLengthBound {
    int upper = 0;             // length of the best decomposition found
    Vertex best_root = 0;
    int cluster_bound = 0;     // D + 1 at the best root, D the max cluster diameter
    HalfInt lower;             // four-point delta
    TreeDecomposition decomposition;
};

// Minimum over roots of the layering decomposition length. `roots` empty means all.
inline TreeLengthBound tree_length_upper(const Graph& g, const DistanceMatrix& dm, HalfInt delta,
                                         std::vector<Vertex> roots = {})
{
    if (roots.empty())
        for (Vertex r = 0; r < g.n(); ++r)
            roots.push_back(r);
    TreeLengthBound out;
    out.lower = delta;
    bool first = true;
    for (Vertex r : roots) {
        const auto t = layering_tree(g, r);
        auto td = layering_decomposition(g, dm, t);
        if (first || td.length < out.upper) {
            out.upper = td.length;
            out.best_root = r;
            out.cluster_bound = cluster_diameter(dm, t) + 1;
            out.decomposition = std::move(td);
            first = false;
        }
    }
    return out;
}

// The path decomposition of C_len x P_width with bags {columns b, b+1}.
inline TreeDecomposition cylinder_path_decomposition(int len, int width, const DistanceMatrix& dm)
{
    TreeDecomposition td;
    for (int b = 0; b + 1 < std::max(width, 2); ++b) {
        std::vector<Vertex> bag;
        for (int c = b; c <= std::min(b + 1, width - 1); ++c)
            for (int a = 0; a < len; ++a)
                bag.push_back(c * len + a);
        td.bags.push_back(bag);
        if (b > 0)
            td.tree_edges.emplace_back(b - 1, b);
    }
    measure(td, dm);
    return td;
}

struct DiskStage {
    Vertex component_min = -1; // smallest vertex of the component extended
    Vertex centre = -1;
    int ball_size = 0;
    int removed = 0;
    int added = 0;
    int covered_after = 0;
};

struct DiskTreeResult {
    bool stalled = false;
    std::string reason;
    Vertex start = 0;
    std::vector<DiskStage> trace;
    TreeDecomposition decomposition; // complete only when not stalled
};

namespace detail {

// Components of the vertices in `pool` not in `cover`, each with its attachment to `cover`.
struct Piece {
    std::vector<Vertex> members;
    std::vector<Vertex> attach;
};

inline std::vector<Piece> pieces(const Graph& g, const std::vector<char>& pool, const std::vector<char>& cover)
{
    const int n = g.n();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<Piece> out;
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
        if (!pool[s] || cover[s] || seen[s])
            continue;
        Piece p;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            p.members.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (cover[w]) {
                    if (!mark[w]) {
                        mark[w] = 1;
                        p.attach.push_back(w);
                    }
                } else if (pool[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (Vertex w : p.attach)
            mark[w] = 0;
        std::sort(p.members.begin(), p.members.end());
        std::sort(p.attach.begin(), p.attach.end());
        out.push_back(std::move(p));
    }
    return out;
}

inline int set_diameter(const DistanceMatrix& dm, const std::vector<Vertex>& s)
{
    int d = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            d = std::max<int>(d, dm(s[i], s[j]));
    return d;
}

} // namespace detail

// Grows a decomposition one bag at a time. Each stage takes the component C
// of the uncovered vertices with the smallest vertex and a centre x in its
// attachment set A, proposes A u (B_k(x) n C) as the next bag, and drops new
// vertices farthest from x first (larger index first on ties) until every
// remaining component attaches through a set of diameter <= ell. A stage that
// can add nothing for any centre stalls the run.
inline DiskTreeResult disk_tree(const Graph& g, const DistanceMatrix& dm, int k, int ell,
                                std::optional<Vertex> start = std::nullopt, std::uint64_t seed = 0)
{
    const int n = g.n();
    DiskTreeResult res;
    if (k < 0 || ell < 0)
        throw InputError("disk tree radii must be non-negative");
    if (start) {
        if (*start < 0 || *start >= n)
            throw InputError("start vertex out of range");
        res.start = *start;
    } else {
        std::mt19937_64 rng(seed);
        res.start = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    }
    std::vector<char> covered(static_cast<std::size_t>(n), 0), all(static_cast<std::size_t>(n), 1);
    std::vector<int> bag_parent;
    auto& td = res.decomposition;

    // Shrinks the proposal; returns the kept new vertices.
    auto settle = [&](const std::vector<Vertex>& comp, const std::vector<Vertex>& attach, Vertex x,
                      DiskStage& st) {
        std::vector<char> in_comp(static_cast<std::size_t>(n), 0);
        for (Vertex v : comp)
            in_comp[v] = 1;
        std::vector<Vertex> fresh;
        for (Vertex v : comp)
            if (dm(x, v) <= k)
                fresh.push_back(v);
        std::stable_sort(fresh.begin(), fresh.end(), [&](Vertex a, Vertex b) {
            if (dm(x, a) != dm(x, b))
                return dm(x, a) < dm(x, b);
            return a < b;
        });
        st.ball_size = static_cast<int>(fresh.size());
        std::vector<char> bag(static_cast<std::size_t>(n), 0);
        for (Vertex v : attach)
            bag[v] = 1;
        for (Vertex v : fresh)
            bag[v] = 1;
        while (true) {
            bool ok = true;
            for (const auto& p : detail::pieces(g, in_comp, bag))
                if (detail::set_diameter(dm, p.attach) > ell) {
                    ok = false;
                    break;
                }
            if (ok || fresh.empty())
                break;
            bag[fresh.back()] = 0;
            fresh.pop_back();
            ++st.removed;
        }
        return fresh;
    };

    auto add_bag = [&](std::vector<Vertex> bag, int parent) {
        std::sort(bag.begin(), bag.end());
        const int id = static_cast<int>(td.bags.size());
        td.bags.push_back(std::move(bag));
        if (parent >= 0)
            td.tree_edges.emplace_back(parent, id);
        return id;
    };

    // stage 0: the whole graph is one component with empty attachment
    {
        DiskStage st;
        st.component_min = 0;
        st.centre = res.start;
        std::vector<Vertex> comp(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            comp[v] = v;
        auto fresh = settle(comp, {}, res.start, st);
        for (Vertex v : fresh)
            covered[v] = 1;
        st.added = static_cast<int>(fresh.size());
        st.covered_after = st.added;
        res.trace.push_back(st);
        add_bag(fresh, -1);
    }

    const int stage_cap = 10 * n;
    int covered_count = res.trace.back().covered_after;
    while (covered_count < n) {
        if (static_cast<int>(res.trace.size()) > stage_cap) {
            res.stalled = true;
            res.reason = "stage cap reached";
            return res;
        }
        bool progressed = false;
        for (const auto& piece : detail::pieces(g, all, covered)) {
            // the bag holding the whole attachment set
            int host = -1;
            for (int b = static_cast<int>(td.bags.size()) - 1; b >= 0 && host < 0; --b)
                if (std::includes(td.bags[b].begin(), td.bags[b].end(), piece.attach.begin(), piece.attach.end()))
                    host = b;
            if (host < 0) {
                res.stalled = true;
                res.reason = "attachment set split across bags";
                return res;
            }
            for (Vertex x : piece.attach) {
                DiskStage st;
                st.component_min = piece.members.front();
                st.centre = x;
                auto fresh = settle(piece.members, piece.attach, x, st);
                if (fresh.empty())
                    continue;
                for (Vertex v : fresh)
                    covered[v] = 1;
                covered_count += static_cast<int>(fresh.size());
                st.added = static_cast<int>(fresh.size());
                st.covered_after = covered_count;
                res.trace.push_back(st);
                std::vector<Vertex> bag = piece.attach;
                bag.insert(bag.end(), fresh.begin(), fresh.end());
                add_bag(bag, host);
                progressed = true;
                break;
            }
            if (progressed)
                break;
        }
        if (!progressed) {
            res.stalled = true;
            res.reason = "no component can be extended";
            return res;
        }
    }
    measure(td, dm);
    return res;
}

struct InducedCycle {
    int length = 0;          // 0 when the graph has no cycle
    std::vector<Vertex> cycle;
};

// Longest induced cycle by exhaustive search over induced paths rooted at the
// smallest cycle vertex. Throws when n exceeds the cap.
inline InducedCycle longest_induced_cycle(const Graph& g, int cap = 24)
{
    const int n = g.n();
    if (n > cap)
        throw InputError("longest induced cycle limited to n <= " + std::to_string(cap));
    InducedCycle best;
    std::vector<Vertex> path;
    std::vector<int> blocked(static_cast<std::size_t>(n), 0); // adjacent to an inner path vertex
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, Vertex s) -> void {
        const Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            if (w <= s || on[w] || blocked[w])
                continue;
            // w may touch s only to close the cycle
            const bool closes = path.size() >= 2 && g.adjacent(w, s);
            if (closes) {
                if (static_cast<int>(path.size()) + 1 > best.length) {
                    best.length = static_cast<int>(path.size()) + 1;
                    best.cycle = path;
                    best.cycle.push_back(w);
                }
                continue;
            }
            // once extended, `last` is an inner vertex (unless it is s) and blocks its neighbours
            const bool inner = last != s;
            if (inner)
                for (Vertex y : g.neighbors(last))
                    ++blocked[y];
            path.push_back(w);
            on[w] = 1;
            self(self, s);
            on[w] = 0;
            path.pop_back();
            if (inner)
                for (Vertex y : g.neighbors(last))
                    --blocked[y];
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        on[s] = 1;
        rec(rec, s);
        on[s] = 0;
    }
    return best;
}

} // namespace hypnet

#endif
