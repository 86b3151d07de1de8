#ifndef HYPNET_CURVATURE_HPP
#define HYPNET_CURVATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "hypnet/distance.hpp"
#include "hypnet/embedding.hpp"
#include "hypnet/hyperbolicity.hpp"
#include "hypnet/rational.hpp"

namespace hypnet {

enum class CurvatureMetric {
    hop,       // d_G
    half_ceil, // ceil(d_G / 2)
};

inline double metric_length(Dist d, CurvatureMetric m)
{
    return m == CurvatureMetric::hop ? static_cast<double>(d) : static_cast<double>((d + 1) / 2);
}

// True when every corner (v, u_i, u_{i+1}) of the rotation at v is a triangular face.
inline bool is_interior(const EmbeddedGraph& eg, Vertex v)
{
    const auto& rot = eg.rotation[v];
    if (rot.size() < 3)
        return false;
    for (std::size_t i = 0; i < rot.size(); ++i) {
        const Vertex a = rot[i], b = rot[(i + 1) % rot.size()];
        // face through v -> a, as traced by EmbeddedGraph::faces
        const Vertex c = eg.rotation_prev(a, v);
        if (c != b || eg.rotation_prev(b, a) != v)
            return false;
    }
    return true;
}

// (2 pi - sum of corner angles) / (sum of corner areas) at an interior vertex,
// with each corner triangle realised in the plane with the chosen metric lengths.
inline double alexandrov_curvature(const EmbeddedGraph& eg, const DistanceMatrix& dm, Vertex v,
                                   CurvatureMetric metric = CurvatureMetric::half_ceil)
{
    if (!is_interior(eg, v))
        throw InputError("vertex " + std::to_string(eg.graph.label(v)) + " is not interior");
    const auto& rot = eg.rotation[v];
    double angle = 0, area = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) {
        const Vertex p = rot[i], q = rot[(i + 1) % rot.size()];
        const double a = metric_length(dm(v, p), metric);
        const double b = metric_length(dm(v, q), metric);
        const double c = metric_length(dm(p, q), metric);
        const double s = (a + b + c) * (a + b - c) * (b + c - a) * (a + c - b);
        if (!(a + b > c && b + c > a && a + c > b) || s <= 0)
            throw InputError("degenerate corner triangle at vertex " + std::to_string(eg.graph.label(v)));
        angle += std::acos(std::clamp((a * a + b * b - c * c) / (2 * a * b), -1.0, 1.0));
        area += 0.25 * std::sqrt(s);
    }
    return (2 * std::numbers::pi - angle) / area;
}

// 1 - deg/2 + sum over face corners at v of 1/|face|.
inline Rational gaussian_curvature(const EmbeddedGraph& eg, Vertex v,
                                   const std::vector<std::vector<Vertex>>& faces)
{
    Rational k = Rational(1) - Rational(eg.graph.degree(v), 2);
    for (const auto& f : faces)
        for (Vertex w : f)
            if (w == v)
                k += Rational(1, static_cast<long long>(f.size()));
    return k;
}

inline Rational gaussian_curvature(const EmbeddedGraph& eg, Vertex v)
{
    return gaussian_curvature(eg, v, eg.faces());
}

struct GaussianTotal {
    Rational total;
    long long euler = 0; // V - E + F
    std::vector<Rational> per_vertex;
};

inline GaussianTotal gaussian_total(const EmbeddedGraph& eg)
{
    const auto faces = eg.faces();
    GaussianTotal out;
    for (Vertex v = 0; v < eg.graph.n(); ++v) {
        out.per_vertex.push_back(gaussian_curvature(eg, v, faces));
        out.total += out.per_vertex.back();
    }
    out.euler = static_cast<long long>(eg.graph.n()) - static_cast<long long>(eg.graph.m()) +
                static_cast<long long>(faces.size());
    return out;
}

// All vertex sequences of geodesics from a to b, or nullopt past `cap`.
inline std::optional<std::vector<std::vector<Vertex>>> enumerate_geodesics(const Graph& g, const DistanceMatrix& dm,
                                                                           Vertex a, Vertex b, std::uint64_t cap)
{
    if (dm.has_counts() && dm.sigma(a, b) > cap)
        return std::nullopt;
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur{a};
    bool over = false;
    auto rec = [&](auto&& self, Vertex x) -> void {
        if (over)
            return;
        if (x == b) {
            if (out.size() >= cap) {
                over = true;
                return;
            }
            out.push_back(cur);
            return;
        }
        for (Vertex w : g.neighbors(x))
            if (dm(w, b) + 1 == dm(x, b)) {
                cur.push_back(w);
                self(self, w);
                cur.pop_back();
            }
    };
    rec(rec, a);
    if (over)
        return std::nullopt;
    return out;
}

// I(a, b, c): max over geodesic triples of the min perimeter u + v + w with one
// point per side. Two sides are enumerated, the third is optimised over its
// geodesic DAG. nullopt when the enumerated pairs exceed `path_cap`.
inline std::optional<Dist> interconnection(const Graph& g, const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c,
                                           std::uint64_t path_cap = 10000)
{
    if (!dm.has_counts())
        throw InputError("interconnection needs path counts");
    std::array<Edge, 3> sides{Edge{a, b}, Edge{b, c}, Edge{a, c}};
    std::stable_sort(sides.begin(), sides.end(), [&](const Edge& x, const Edge& y) {
        return dm.sigma(x.first, x.second) < dm.sigma(y.first, y.second);
    });
    const BigInt pairs = dm.sigma(sides[0].first, sides[0].second) * dm.sigma(sides[1].first, sides[1].second);
    if (pairs > path_cap)
        return std::nullopt;
    const auto p1 = *enumerate_geodesics(g, dm, sides[0].first, sides[0].second, path_cap);
    const auto p2 = *enumerate_geodesics(g, dm, sides[1].first, sides[1].second, path_cap);
    const Vertex s = sides[2].first, t = sides[2].second;
    const auto third = dm.interval(s, t);
    std::vector<Vertex> order = third;
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return dm(s, x) < dm(s, y); });
    const auto n = static_cast<std::size_t>(dm.n());
    std::vector<Dist> gval(n), best(n);
    Dist value = 0;
    for (const auto& q1 : p1)
        for (const auto& q2 : p2) {
            for (Vertex w : third) {
                Dist m = std::numeric_limits<Dist>::max();
                for (Vertex u : q1)
                    for (Vertex v : q2)
                        m = std::min<Dist>(m, static_cast<Dist>(dm(u, v) + dm(v, w) + dm(u, w)));
                gval[w] = m;
            }
            for (Vertex v : order) {
                Dist in = 0;
                for (Vertex p : g.neighbors(v))
                    if (dm(s, p) + 1 == dm(s, v) && dm(p, t) == dm(v, t) + 1)
                        in = std::max(in, best[p]);
                best[v] = v == s ? gval[v] : std::min(gval[v], in);
            }
            value = std::max(value, best[t]);
        }
    return value;
}

struct ScaledResult {
    Rational lower;            // best ratio over triples evaluated exactly
    Rational upper;            // no triple can exceed this
    bool capped = false;       // some triple needed more path pairs than allowed
    std::uint64_t triples = 0; // triples with max pairwise distance > R
    std::array<Vertex, 3> witness{};
    Dist witness_perimeter = 0, witness_span = 0;
    bool exact() const { return lower == upper; }
};

// sup over triples with max pairwise distance vd > R of
// (max over geodesic sides of min over points on them of the perimeter) / vd.
// Triples are visited in decreasing order of a corner-bottleneck upper bound
// and exact enumeration stops once that bound cannot beat the incumbent.
inline ScaledResult scaled_hyperbolicity(const Graph& g, const DistanceMatrix& dm, int R,
                                         std::uint64_t path_cap = 10000)
{
    if (!dm.has_counts())
        throw InputError("scaled hyperbolicity needs path counts");
    const int n = dm.n();
    GeodesicBottleneck bn(g, dm);
    struct Cand {
        Dist ub;
        Vertex a, b, c;
        Dist span;
    };
    // a/b < c/d for positive denominators
    auto less = [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d < c * b; };
    std::vector<Cand> cands;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                const Dist span = std::max({dm(a, b), dm(b, c), dm(a, c)});
                if (span <= R)
                    continue;
                const Dist ub = static_cast<Dist>(2 * std::min({bn(b, c, a), bn(a, c, b), bn(a, b, c)}));
                cands.push_back({ub, a, b, c, span});
            }
    std::stable_sort(cands.begin(), cands.end(),
                     [&](const Cand& x, const Cand& y) { return less(y.ub, y.span, x.ub, x.span); });

    ScaledResult out;
    out.triples = cands.size();
    std::int64_t lo_num = 0, lo_den = 1, up_num = 0, up_den = 1;
    bool have = false;
    for (const auto& cand : cands) {
        if (have && !less(lo_num, lo_den, cand.ub, cand.span))
            break;
        const BigInt pairs = std::min({dm.sigma(cand.a, cand.b) * dm.sigma(cand.b, cand.c),
                                       dm.sigma(cand.a, cand.b) * dm.sigma(cand.a, cand.c),
                                       dm.sigma(cand.b, cand.c) * dm.sigma(cand.a, cand.c)});
        if (pairs > path_cap) {
            out.capped = true;
            if (less(up_num, up_den, cand.ub, cand.span)) {
                up_num = cand.ub;
                up_den = cand.span;
            }
            continue;
        }
        const Dist value = *interconnection(g, dm, cand.a, cand.b, cand.c, path_cap);
        if (!have || less(lo_num, lo_den, value, cand.span)) {
            lo_num = value;
            lo_den = cand.span;
            out.witness = {cand.a, cand.b, cand.c};
            out.witness_perimeter = value;
            out.witness_span = cand.span;
            have = true;
        }
    }
    out.lower = Rational(lo_num, lo_den);
    out.upper = less(up_num, up_den, lo_num, lo_den) ? out.lower : Rational(up_num, up_den);
    return out;
}

} // namespace hypnet

#endif
