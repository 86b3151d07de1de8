#ifndef HYPNET_EMBEDDING_HPP
#define HYPNET_EMBEDDING_HPP

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypnet/graph.hpp"

namespace hypnet {

// Graph with a rotation system: the cyclic order of neighbours around each vertex.
struct EmbeddedGraph {
    Graph graph;
    std::vector<std::vector<Vertex>> rotation;

    // Position of w in the rotation of v.
    std::size_t slot(Vertex v, Vertex w) const
    {
        const auto& r = rotation[v];
        return static_cast<std::size_t>(std::find(r.begin(), r.end(), w) - r.begin());
    }

    Vertex rotation_next(Vertex v, Vertex w) const
    {
        const auto& r = rotation[v];
        return r[(slot(v, w) + 1) % r.size()];
    }

    Vertex rotation_prev(Vertex v, Vertex w) const
    {
        const auto& r = rotation[v];
        return r[(slot(v, w) + r.size() - 1) % r.size()];
    }

    // Boundary walks; the walk leaving u along (u, v) continues with (v, prev_v(u)).
    std::vector<std::vector<Vertex>> faces() const
    {
        std::map<Edge, bool> used;
        std::vector<std::vector<Vertex>> out;
        for (Vertex u = 0; u < graph.n(); ++u)
            for (Vertex v : rotation[u]) {
                if (used[{u, v}])
                    continue;
                std::vector<Vertex> face;
                Vertex a = u, b = v;
                while (!used[{a, b}]) {
                    used[{a, b}] = true;
                    face.push_back(a);
                    Vertex c = rotation_prev(b, a);
                    a = b;
                    b = c;
                }
                out.push_back(std::move(face));
            }
        return out;
    }
};

inline void check_rotation(const EmbeddedGraph& eg)
{
    if (static_cast<int>(eg.rotation.size()) != eg.graph.n())
        throw InputError("rotation system does not cover every vertex");
    for (Vertex v = 0; v < eg.graph.n(); ++v) {
        auto r = eg.rotation[v];
        std::sort(r.begin(), r.end());
        if (r != eg.graph.neighbors(v))
            throw InputError("rotation at vertex " + std::to_string(eg.graph.label(v)) +
                             " does not list exactly its neighbours");
    }
}

// Rotation system from consistently oriented triangles; vertices with an open
// fan get the fan in order, closed by the outer face.
inline EmbeddedGraph from_oriented_triangles(int n, const std::vector<std::array<Vertex, 3>>& triangles)
{
    std::vector<Edge> edges;
    std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n));
    for (const auto& tri : triangles)
        for (int i = 0; i < 3; ++i) {
            Vertex v = tri[i], a = tri[(i + 1) % 3], b = tri[(i + 2) % 3];
            edges.emplace_back(v, a);
            succ[v][a] = b;
        }
    EmbeddedGraph eg{Graph(n, edges), {}};
    eg.rotation.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto& nb = eg.graph.neighbors(v);
        if (nb.empty())
            continue;
        std::map<Vertex, int> indeg;
        for (auto [a, b] : succ[v])
            ++indeg[b];
        Vertex start = nb.front();
        for (Vertex w : nb)
            if (!indeg.count(w)) {
                start = w;
                break;
            }
        Vertex cur = start;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            eg.rotation[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end())
                break;
            cur = it->second;
            if (cur == start)
                break;
        }
    }
    return eg;
}

// One line per vertex: the vertex label followed by its neighbours in cyclic order.
inline EmbeddedGraph parse_rotation(std::istream& in, const Graph& g)
{
    EmbeddedGraph eg{g, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(g.n()))};
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::string line;
    auto lookup = [&](long long label) {
        auto idx = g.index_of(label);
        if (!idx)
            throw InputError("rotation file names unknown vertex " + std::to_string(label));
        return *idx;
    };
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ss(line);
        long long label = 0;
        if (!(ss >> label))
            throw InputError("bad rotation line: " + line);
        Vertex v = lookup(label);
        if (seen[v]++)
            throw InputError("vertex " + std::to_string(label) + " listed twice in rotation file");
        long long w = 0;
        while (ss >> w)
            eg.rotation[v].push_back(lookup(w));
        if (!ss.eof())
            throw InputError("bad rotation line: " + line);
    }
    check_rotation(eg);
    return eg;
}

inline void write_rotation(std::ostream& out, const EmbeddedGraph& eg)
{
    for (Vertex v = 0; v < eg.graph.n(); ++v) {
        out << eg.graph.label(v);
        for (Vertex w : eg.rotation[v])
            out << ' ' << eg.graph.label(w);
        out << '\n';
    }
}

} // namespace hypnet

#endif
