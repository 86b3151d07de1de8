#ifndef HYPNET_GRAPH_HPP
#define HYPNET_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypnet {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Malformed or out-of-contract input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list on 0..n-1; self-loops are rejected, repeats dropped.
    Graph(int n, const std::vector<Edge>& edges) : adj_(static_cast<std::size_t>(n))
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError("edge endpoint out of range");
            if (u == v)
                throw InputError("self-loop at vertex " + std::to_string(u));
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        for (auto& a : adj_)
            m_ += a.size();
        m_ /= 2;
    }

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(Vertex u, Vertex v) const
    {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n(); ++u)
            for (Vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    // External label of each vertex; identity when none were supplied.
    std::int64_t label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }
    void set_labels(std::vector<std::int64_t> labels) { labels_ = std::move(labels); }

    std::optional<Vertex> index_of(std::int64_t label) const
    {
        if (labels_.empty()) {
            if (label >= 0 && label < n())
                return static_cast<Vertex>(label);
            return std::nullopt;
        }
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label)
            return std::nullopt;
        return static_cast<Vertex>(it - labels_.begin());
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::int64_t> labels_; // sorted ascending when present
    std::size_t m_ = 0;
};

// Component id per vertex, ids assigned in order of smallest member.
inline std::vector<int> component_ids(const Graph& g, int* count = nullptr)
{
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    int c = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    if (count)
        *count = c;
    return comp;
}

inline bool is_connected(const Graph& g)
{
    int count = 0;
    component_ids(g, &count);
    return count <= 1;
}

// Subgraph induced on `keep` (in the given order); vertex i of the result is keep[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep)
{
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        pos[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : g.neighbors(keep[i]))
            if (pos[w] > static_cast<int>(i))
                edges.emplace_back(static_cast<Vertex>(i), pos[w]);
    Graph h(static_cast<int>(keep.size()), edges);
    if (!g.labels().empty()) {
        std::vector<std::int64_t> labels;
        for (Vertex v : keep)
            labels.push_back(g.label(v));
        if (std::is_sorted(labels.begin(), labels.end()))
            h.set_labels(std::move(labels));
    }
    return h;
}

struct BuildResult {
    Graph graph;
    std::vector<std::string> warnings;
};

struct LabeledEdges {
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::pair<Graph, std::vector<std::string>> reindex(const LabeledEdges& in)
{
    std::vector<std::int64_t> labels;
    for (auto [a, b] : in.edges) {
        if (a < 0 || b < 0)
            throw InputError("negative vertex label");
        if (a == b)
            throw InputError("self-loop at label " + std::to_string(a));
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto idx = [&](std::int64_t l) {
        return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    std::vector<Edge> edges;
    std::vector<std::string> warnings = in.warnings;
    std::map<Edge, int> seen;
    for (auto [a, b] : in.edges) {
        Vertex u = idx(a), v = idx(b);
        Edge key{std::min(u, v), std::max(u, v)};
        if (seen[key]++ == 1)
            warnings.push_back("duplicate edge " + std::to_string(std::min(a, b)) + " " +
                               std::to_string(std::max(a, b)) + " ignored");
        edges.push_back(key);
    }
    Graph g(static_cast<int>(labels.size()), edges);
    bool identity = true;
    for (std::size_t i = 0; i < labels.size(); ++i)
        identity = identity && labels[i] == static_cast<std::int64_t>(i);
    if (!identity)
        g.set_labels(std::move(labels));
    return {std::move(g), std::move(warnings)};
}

} // namespace detail

// Dense reindexing of labelled edges; the result must be connected.
inline BuildResult build_graph(const LabeledEdges& in)
{
    auto [g, warnings] = detail::reindex(in);
    if (g.n() == 0)
        throw InputError("empty graph");
    if (!is_connected(g))
        throw InputError("graph is disconnected");
    return {std::move(g), std::move(warnings)};
}

inline BuildResult build_graph(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges)
{
    return build_graph(LabeledEdges{edges, {}});
}

// Connected components as separate graphs, each keeping its original labels.
inline std::vector<Graph> split_components(const LabeledEdges& in)
{
    auto [g, warnings] = detail::reindex(in);
    int count = 0;
    auto comp = component_ids(g, &count);
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.n(); ++v)
        members[comp[v]].push_back(v);
    std::vector<Graph> out;
    for (auto& mem : members) {
        Graph h = induced_subgraph(g, mem);
        std::vector<std::int64_t> labels;
        for (Vertex v : mem)
            labels.push_back(g.label(v));
        h.set_labels(std::move(labels));
        out.push_back(std::move(h));
    }
    return out;
}

// Two non-negative integer tokens per line; '#' starts a comment line.
inline LabeledEdges parse_edge_list(std::istream& in)
{
    LabeledEdges out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ss(line);
        std::string a, b, extra;
        ss >> a >> b;
        if (b.empty() || (ss >> extra))
            throw InputError("line " + std::to_string(lineno) + ": expected two tokens");
        auto parse = [&](const std::string& tok) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || value < 0)
                throw InputError("line " + std::to_string(lineno) + ": bad vertex label '" + tok + "'");
            return static_cast<std::int64_t>(value);
        };
        out.edges.emplace_back(parse(a), parse(b));
    }
    return out;
}

inline LabeledEdges parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return parse_edge_list(in);
}

// Canonical form: one "u v" per line with u < v by label, lines sorted.
inline void write_edge_list(std::ostream& out, const Graph& g)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (auto [u, v] : g.edges()) {
        auto a = g.label(u), b = g.label(v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges)
        out << a << ' ' << b << '\n';
}

inline std::string edge_list_string(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

} // namespace hypnet

#endif
