#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hypnet/congestion.hpp"
#include "hypnet/curvature.hpp"
#include "hypnet/generators.hpp"
#include "hypnet/hyperbolicity.hpp"
#include "hypnet/report.hpp"
#include "hypnet/repro.hpp"
#include "hypnet/tree_approx.hpp"
#include "hypnet/tree_length.hpp"

namespace {

using namespace hypnet;

enum Exit { exit_ok = 0, exit_fail = 1, exit_input = 2, exit_stall = 3, exit_cap = 4 };

struct Input {
    std::string bytes;
    Graph graph;
};

std::string read_all(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Input load(const std::string& path)
{
    Input in;
    in.bytes = read_all(path);
    auto built = build_graph(parse_edge_list(in.bytes));
    for (const auto& w : built.warnings)
        std::cerr << "warning: " << w << '\n';
    in.graph = std::move(built.graph);
    return in;
}

Vertex vertex_of(const Graph& g, long long label)
{
    auto v = g.index_of(label);
    if (!v)
        throw InputError("unknown vertex " + std::to_string(label));
    return *v;
}

std::string join_labels(const Graph& g, const std::vector<Vertex>& vs)
{
    std::string s;
    for (Vertex v : vs)
        s += (s.empty() ? "" : " ") + std::to_string(g.label(v));
    return s;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void tsv(const std::string& key, const std::string& value) { std::cout << key << '\t' << value << '\n'; }

// Positional parameters of `gen`, checked for count and type.
struct Params {
    std::string family;
    std::vector<std::string> raw;

    void expect(std::size_t lo, std::size_t hi) const
    {
        if (raw.size() < lo || raw.size() > hi)
            throw InputError(family + " takes " + std::to_string(lo) +
                             (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters");
    }
    long long i(std::size_t k) const
    {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(raw.at(k), &used);
            if (used == raw[k].size())
                return v;
        } catch (const std::exception&) {
        }
        throw InputError("parameter " + std::to_string(k + 1) + " of " + family + " must be an integer");
    }
    int n(std::size_t k) const { return static_cast<int>(i(k)); }
    double d(std::size_t k) const
    {
        try {
            std::size_t used = 0;
            const double v = std::stod(raw.at(k), &used);
            if (used == raw[k].size())
                return v;
        } catch (const std::exception&) {
        }
        throw InputError("parameter " + std::to_string(k + 1) + " of " + family + " must be a number");
    }
};

const char* families_help =
    "grid M N | cycle N | path N | complete N | star LEAVES | ringed-tree DEPTH | cylinder R L |\n"
    "cycle-path LEN WIDTH | lex-cycle-clique K K2 | broom K LEN | chord-cycle N | y-graph H K |\n"
    "two-clique M [SUBDIV] | random N P SEED | random-cut N1 N2 P SEED | triangulation D STEPS SEED";

int cmd_gen(const Params& p, const std::string& out_path, const std::string& rotation_path)
{
    std::optional<EmbeddedGraph> embedded;
    Graph g;
    const auto& f = p.family;
    if (f == "grid") {
        p.expect(2, 2);
        g = grid(p.n(0), p.n(1));
    } else if (f == "cycle") {
        p.expect(1, 1);
        g = cycle(p.n(0));
    } else if (f == "path") {
        p.expect(1, 1);
        g = path(p.n(0));
    } else if (f == "complete") {
        p.expect(1, 1);
        g = complete(p.n(0));
    } else if (f == "star") {
        p.expect(1, 1);
        g = star(p.n(0));
    } else if (f == "ringed-tree") {
        p.expect(1, 1);
        g = ringed_tree(p.n(0));
    } else if (f == "cylinder") {
        p.expect(2, 2);
        g = cylinder_grid(p.n(0), p.n(1));
    } else if (f == "cycle-path") {
        p.expect(2, 2);
        g = cartesian_cycle_path(p.n(0), p.n(1));
    } else if (f == "lex-cycle-clique") {
        p.expect(2, 2);
        g = lexicographic_cycle_clique(p.n(0), p.n(1));
    } else if (f == "broom") {
        p.expect(2, 2);
        g = broom(p.n(0), p.n(1));
    } else if (f == "chord-cycle") {
        p.expect(1, 1);
        g = chord_cycle(p.n(0));
    } else if (f == "y-graph") {
        p.expect(2, 2);
        g = y_graph(p.n(0), p.n(1));
    } else if (f == "two-clique") {
        p.expect(1, 2);
        require(p.n(0) >= 2, "two-clique needs M >= 2");
        g = two_clique_block(p.n(0));
        if (p.raw.size() == 2)
            g = subdivision(g, p.n(1));
    } else if (f == "random") {
        p.expect(3, 3);
        g = random_connected(p.n(0), p.d(1), static_cast<std::uint64_t>(p.i(2)));
    } else if (f == "random-cut") {
        p.expect(4, 4);
        g = random_with_cut_vertex(p.n(0), p.n(1), p.d(2), static_cast<std::uint64_t>(p.i(3)));
    } else if (f == "triangulation") {
        p.expect(3, 3);
        auto t = triangulation_growth(p.n(0), p.n(1), static_cast<std::uint64_t>(p.i(2)));
        if (t.stuck)
            std::cerr << "warning: growth stopped early\n";
        g = t.embedded.graph;
        embedded = std::move(t.embedded);
    } else {
        throw InputError("unknown family '" + f + "'; families: " + families_help);
    }
    if (out_path.empty() || out_path == "-") {
        write_edge_list(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw InputError("cannot write " + out_path);
        write_edge_list(out, g);
    }
    if (!rotation_path.empty()) {
        if (!embedded)
            throw InputError("--rotation is only available for triangulation");
        std::ofstream out(rotation_path);
        if (!out)
            throw InputError("cannot write " + rotation_path);
        write_rotation(out, *embedded);
    }
    return exit_ok;
}

struct DeltaOpts {
    std::string method = "pruned";
    long long root = -1;
    bool thin = false, slim = false, json = false;
};

int cmd_delta(const std::string& file, const DeltaOpts& o, unsigned workers)
{
    const Input in = load(file);
    const Graph& g = in.graph;
    const auto dm = all_pairs_distances(g, workers);
    Json rep = report_header(g, in.bytes);
    Json& h = rep["hyperbolicity"];
    h["method"] = o.method;
    if (o.method == "rooted") {
        std::vector<Vertex> roots;
        if (o.root >= 0)
            roots.push_back(vertex_of(g, o.root));
        else
            for (Vertex r = 0; r < g.n(); ++r)
                roots.push_back(r);
        Json rows = Json::array();
        for (Vertex r : roots) {
            const auto rd = delta_at_root(dm, r);
            rows.push_back({{"root", g.label(r)},
                            {"delta", to_json(rd.delta)},
                            {"witness", labels_json(g, {rd.witness.begin(), rd.witness.end()})}});
            if (!o.json)
                tsv(std::to_string(g.label(r)), rd.delta.str());
        }
        h["roots"] = rows;
    } else if (o.method == "exact" || o.method == "pruned") {
        const auto r = o.method == "exact" ? delta_four_point(dm) : delta_four_point_pruned(g, dm);
        h["delta"] = to_json(r.delta);
        std::vector<Vertex> w;
        if (r.witness)
            w.assign(r.witness->begin(), r.witness->end());
        h["witness"] = labels_json(g, w);
        h["quadruples_examined"] = r.quadruples_examined;
        h["far_pairs"] = r.far_pairs;
        if (!o.json) {
            tsv("delta", r.delta.str());
            tsv("witness", join_labels(g, w));
            tsv("quadruples_examined", std::to_string(r.quadruples_examined));
        }
    } else {
        throw InputError("method must be exact, pruned or rooted");
    }
    if (o.thin) {
        const auto t = thin_triangles_constant(dm);
        h["thin"] = to_json(t.value);
        if (!o.json)
            tsv("thin", t.value.str());
    }
    if (o.slim) {
        const auto s = slim_triangles_constant(g, dm);
        h["slim"] = to_json(s.value);
        if (!o.json)
            tsv("slim", s.value.str());
    }
    if (o.json)
        emit(rep);
    return exit_ok;
}

struct TreeOpts {
    long long root = -1;
    bool json = false, dot = false;
};

int cmd_tree(const std::string& file, const TreeOpts& o, unsigned workers)
{
    const Input in = load(file);
    const Graph& g = in.graph;
    const auto dm = all_pairs_distances(g, workers);
    const Vertex root = o.root >= 0 ? vertex_of(g, o.root) : default_root(dm);
    const auto t = layering_tree(g, root);
    if (o.dot) {
        std::cout << "graph layering {\n";
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            const auto& nd = t.nodes[i];
            std::cout << "  n" << i << " [label=\"" << (nd.steiner ? "s" : join_labels(g, nd.members)) << "\""
                      << (nd.steiner ? ", shape=point" : "") << "];\n";
        }
        for (std::size_t i = 1; i < t.nodes.size(); ++i)
            std::cout << "  n" << t.nodes[i].parent << " -- n" << i << " [label=\"" << t.nodes[i].weight.str()
                      << "\"];\n";
        std::cout << "}\n";
        return exit_ok;
    }
    const HalfInt delta = delta_four_point_pruned(g, dm).delta;
    const auto q = tree_quality(dm, t, delta);
    int steiner = 0;
    for (const auto& nd : t.nodes)
        steiner += nd.steiner;
    Json rep = report_header(g, in.bytes);
    Json& b = rep["tree"];
    b["root"] = g.label(root);
    b["nodes"] = t.nodes.size();
    b["steiner_nodes"] = steiner;
    b["clusters"] = t.clusters.size();
    b["quality"] = {{"D", q.class_diameter},
                    {"cluster_diameter", cluster_diameter(dm, t)},
                    {"eps_max", to_json(q.eps_max)},
                    {"min_gap", to_json(q.min_gap)},
                    {"distortion", to_json(q.distortion)},
                    {"collapsed_pairs", q.collapsed_pairs},
                    {"delta", to_json(delta)},
                    {"log_bound", q.log_bound}};
    if (o.json) {
        Json nodes = Json::array();
        for (const auto& nd : t.nodes)
            nodes.push_back({{"parent", nd.parent},
                             {"level", to_json(nd.level)},
                             {"weight", to_json(nd.weight)},
                             {"steiner", nd.steiner},
                             {"members", labels_json(g, nd.members)}});
        b["node_list"] = nodes;
        emit(rep);
    } else {
        tsv("root", std::to_string(g.label(root)));
        tsv("nodes", std::to_string(t.nodes.size()));
        tsv("steiner_nodes", std::to_string(steiner));
        tsv("D", std::to_string(q.class_diameter));
        tsv("eps_max", q.eps_max.str());
        tsv("min_gap", q.min_gap.str());
        tsv("distortion", rational_str(q.distortion));
        tsv("delta", delta.str());
        tsv("log_bound", std::to_string(q.log_bound));
    }
    return exit_ok;
}

struct TreeLengthOpts {
    std::vector<int> disk;
    long long start = -1, root = -1;
    std::uint64_t seed = 0;
    bool lambda = false, json = false;
    int lambda_cap = 24;
};

int cmd_treelength(const std::string& file, const TreeLengthOpts& o, unsigned workers)
{
    const Input in = load(file);
    const Graph& g = in.graph;
    const auto dm = all_pairs_distances(g, workers);
    Json rep = report_header(g, in.bytes);
    Json& b = rep["treelength"];
    int code = exit_ok;
    if (!o.disk.empty()) {
        std::optional<Vertex> start;
        if (o.start >= 0)
            start = vertex_of(g, o.start);
        const auto res = disk_tree(g, dm, o.disk[0], o.disk[1], start, o.seed);
        Json trace = Json::array();
        for (const auto& st : res.trace)
            trace.push_back({{"component_min", st.component_min < 0 ? Json(nullptr) : Json(g.label(st.component_min))},
                             {"centre", st.centre < 0 ? Json(nullptr) : Json(g.label(st.centre))},
                             {"ball", st.ball_size},
                             {"removed", st.removed},
                             {"added", st.added},
                             {"covered", st.covered_after}});
        b["disk_tree"] = {{"k", o.disk[0]},
                          {"ell", o.disk[1]},
                          {"start", g.label(res.start)},
                          {"stalled", res.stalled},
                          {"reason", res.reason},
                          {"stages", res.trace.size()},
                          {"length", res.stalled ? Json(nullptr) : Json(res.decomposition.length)},
                          {"bags", res.decomposition.bags.size()},
                          {"trace", trace}};
        if (!o.json) {
            tsv("disk_start", std::to_string(g.label(res.start)));
            tsv("disk_stalled", res.stalled ? "1" : "0");
            tsv("disk_stages", std::to_string(res.trace.size()));
            if (res.stalled)
                tsv("disk_reason", res.reason);
            else
                tsv("disk_length", std::to_string(res.decomposition.length));
            std::cout << "stage\tcentre\tball\tremoved\tadded\tcovered\n";
            for (std::size_t i = 0; i < res.trace.size(); ++i) {
                const auto& st = res.trace[i];
                std::cout << i << '\t' << (st.centre < 0 ? std::string("-") : std::to_string(g.label(st.centre)))
                          << '\t' << st.ball_size << '\t' << st.removed << '\t' << st.added << '\t'
                          << st.covered_after << '\n';
            }
        }
        if (res.stalled)
            code = exit_stall;
    } else {
        const HalfInt delta = delta_four_point_pruned(g, dm).delta;
        std::vector<Vertex> roots;
        if (o.root >= 0)
            roots.push_back(vertex_of(g, o.root));
        const auto tl = tree_length_upper(g, dm, delta, roots);
        b["upper"] = tl.upper;
        b["best_root"] = g.label(tl.best_root);
        b["cluster_bound"] = tl.cluster_bound;
        b["delta_lower"] = to_json(tl.lower);
        b["bags"] = tl.decomposition.bags.size();
        b["width"] = tl.decomposition.width;
        if (!o.json) {
            tsv("tl_upper", std::to_string(tl.upper));
            tsv("best_root", std::to_string(g.label(tl.best_root)));
            tsv("cluster_bound", std::to_string(tl.cluster_bound));
            tsv("delta", tl.lower.str());
        }
    }
    if (o.lambda) {
        if (g.n() > o.lambda_cap) {
            std::cerr << "error: longest induced cycle limited to n <= " << o.lambda_cap << '\n';
            return exit_cap;
        }
        const auto ic = longest_induced_cycle(g, o.lambda_cap);
        b["lambda"] = {{"length", ic.length}, {"cycle", labels_json(g, ic.cycle)}};
        if (!o.json)
            tsv("lambda", std::to_string(ic.length));
    }
    if (o.json)
        emit(rep);
    return code;
}

struct CongestionOpts {
    bool center = false, json = false;
    int balance = -1, coverage = -1;
};

int cmd_congestion(const std::string& file, const CongestionOpts& o, unsigned workers)
{
    const Input in = load(file);
    const Graph& g = in.graph;
    const auto dm = all_pairs(g, true, workers);
    const auto demand = demand_profile(g, dm);
    const auto bt = betweenness(demand);
    const auto iner = inertia(dm);
    Json rep = report_header(g, in.bytes);
    Json& b = rep["congestion"];
    Json rows = Json::array();
    for (Vertex v = 0; v < g.n(); ++v)
        rows.push_back({{"vertex", g.label(v)},
                        {"demand", to_json(demand[v])},
                        {"betweenness", to_json(bt[v])},
                        {"inertia", iner[v]}});
    b["demand_argmax"] = labels_json(g, argmax_set(demand));
    b["inertia_argmin"] = labels_json(g, argmin_set(iner));
    b["total_demand"] = to_json(total_demand(dm));
    const auto cc = congestion_center(g, dm);
    if (o.center)
        b["center"] = {{"vertex", g.label(cc.center)},
                       {"pair", labels_json(g, {cc.pair.u, cc.pair.v})},
                       {"diameter", cc.pair.diameter},
                       {"geodesic", labels_json(g, cc.geodesic)}};
    if (o.balance >= 0) {
        const auto br = balance_check(g, dm, cc.center, o.balance);
        Json shells = Json::array();
        for (auto s : br.shells)
            shells.push_back(s);
        b["balance"] = {{"a", o.balance},
                        {"pairs_checked", br.pairs_checked},
                        {"sampled", br.sampled},
                        {"c_halfspace", to_json(br.c_halfspace)},
                        {"growth", br.growth},
                        {"c_shell", br.c_shell},
                        {"halfspace_ok", br.halfspace_ok},
                        {"shell_ok", br.shell_ok},
                        {"shells", shells}};
    }
    if (o.coverage >= 0) {
        const auto cov = coverage_fraction(g, dm, demand, cc.center, o.coverage);
        b["coverage"] = {{"rho", o.coverage},
                         {"strict", to_json(cov.strict)},
                         {"weak", to_json(cov.weak)},
                         {"ball_demand", to_json(cov.ball_demand)}};
    }
    b["vertices"] = rows;
    if (o.json) {
        emit(rep);
        return exit_ok;
    }
    if (o.center)
        std::cout << "# center\t" << g.label(cc.center) << '\n';
    if (o.balance >= 0)
        std::cout << "# balance\tc_halfspace=" << b["balance"]["c_halfspace"]["exact"].get<std::string>()
                  << "\tgrowth=" << b["balance"]["growth"].get<double>()
                  << "\tc_shell=" << b["balance"]["c_shell"].get<double>() << '\n';
    if (o.coverage >= 0)
        std::cout << "# coverage\tstrict=" << b["coverage"]["strict"]["exact"].get<std::string>()
                  << "\tweak=" << b["coverage"]["weak"]["exact"].get<std::string>() << '\n';
    std::cout << "vertex\tdemand\tbetweenness\tinertia\n";
    for (Vertex v = 0; v < g.n(); ++v)
        std::cout << g.label(v) << '\t' << rational_str(demand[v]) << '\t' << to_double(bt[v]) << '\t' << iner[v]
                  << '\n';
    return exit_ok;
}

int cmd_grid_demand(int side, bool json)
{
    const auto gd = grid_center_demand(side);
    if (json) {
        Json j;
        j["tool"] = "hypnet";
        j["version"] = version;
        j["grid_demand"] = {{"side", gd.side},
                            {"n", gd.n},
                            {"center", gd.center},
                            {"demand", to_json(gd.demand)},
                            {"ratio", gd.ratio},
                            {"lower", gd.lower},
                            {"upper", gd.upper}};
        emit(j);
    } else {
        std::cout << "side\tn\tdemand\tratio\tlower\tupper\n"
                  << gd.side << '\t' << gd.n << '\t' << rational_str(gd.demand) << '\t' << gd.ratio << '\t'
                  << gd.lower << '\t' << gd.upper << '\n';
    }
    return exit_ok;
}

int cmd_curvature(const std::string& file, const std::string& rotation, const std::string& metric, bool json,
                  unsigned workers)
{
    const Input in = load(file);
    std::ifstream rot(rotation);
    if (!rot)
        throw InputError("cannot open " + rotation);
    const auto eg = parse_rotation(rot, in.graph);
    const auto m = metric == "hop" ? CurvatureMetric::hop : CurvatureMetric::half_ceil;
    if (metric != "hop" && metric != "half-ceil")
        throw InputError("metric must be hop or half-ceil");
    const auto dm = all_pairs_distances(in.graph, workers);
    const auto total = gaussian_total(eg);
    const Graph& g = in.graph;
    Json rep = report_header(g, in.bytes);
    Json& b = rep["curvature"];
    b["metric"] = metric;
    b["gaussian_total"] = to_json(total.total);
    b["euler"] = total.euler;
    Json rows = Json::array();
    if (!json)
        std::cout << "vertex\tdegree\tgaussian\talexandrov\n";
    for (Vertex v = 0; v < g.n(); ++v) {
        std::optional<double> alex;
        if (is_interior(eg, v)) {
            try {
                alex = alexandrov_curvature(eg, dm, v, m);
            } catch (const InputError&) {
            }
        }
        rows.push_back({{"vertex", g.label(v)},
                        {"degree", g.degree(v)},
                        {"gaussian", to_json(total.per_vertex[v])},
                        {"alexandrov", alex ? Json(*alex) : Json(nullptr)}});
        if (!json)
            std::cout << g.label(v) << '\t' << g.degree(v) << '\t' << rational_str(total.per_vertex[v]) << '\t'
                      << (alex ? std::to_string(*alex) : "NA") << '\n';
    }
    b["vertices"] = rows;
    if (json)
        emit(rep);
    else
        std::cout << "# gaussian_total\t" << rational_str(total.total) << "\teuler\t" << total.euler << '\n';
    return exit_ok;
}

int cmd_scaled(const std::string& file, int R, std::uint64_t cap, bool json, unsigned workers)
{
    if (R < 1)
        throw InputError("R must be at least 1");
    const Input in = load(file);
    const Graph& g = in.graph;
    const auto dm = all_pairs(g, true, workers);
    const auto s = scaled_hyperbolicity(g, dm, R, cap);
    Json rep = report_header(g, in.bytes);
    rep["scaled"] = {{"R", R},
                     {"H_R", to_json(s.lower)},
                     {"upper", to_json(s.upper)},
                     {"exact", s.exact()},
                     {"capped", s.capped},
                     {"triples", s.triples},
                     {"witness", s.triples ? labels_json(g, {s.witness.begin(), s.witness.end()}) : Json::array()},
                     {"witness_perimeter", s.witness_perimeter},
                     {"witness_span", s.witness_span}};
    if (json) {
        emit(rep);
    } else {
        tsv("R", std::to_string(R));
        tsv("H_R", rational_str(s.lower));
        tsv("upper", rational_str(s.upper));
        tsv("capped", s.capped ? "1" : "0");
        tsv("triples", std::to_string(s.triples));
    }
    return s.capped ? exit_cap : exit_ok;
}

int cmd_repro(const std::string& scale, bool json)
{
    if (scale != "smoke" && scale != "desk")
        throw InputError("scale must be smoke or desk");
    const Scale sc = scale == "smoke" ? Scale::smoke : Scale::desk;
    std::ostringstream sink;
    const auto results = run_repro(sc, json ? static_cast<std::ostream&>(sink) : std::cout);
    bool all = true;
    Json rows = Json::array();
    for (const auto& c : results) {
        all = all && c.pass;
        rows.push_back({{"id", c.id},
                        {"pass", c.pass},
                        {"measured", c.measured},
                        {"expected", c.expected},
                        {"seconds", c.seconds}});
    }
    if (json)
        emit(Json{{"tool", "hypnet"}, {"version", version}, {"scale", scale}, {"criteria", rows}});
    return all ? exit_ok : exit_fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hyperbolicity and congestion analysis of graphs"};
    app.require_subcommand(1);
    unsigned workers = 0;
    app.add_option("--workers", workers, "Worker threads (0 = available parallelism)");
    app.fallthrough();

    Params gen_params;
    std::string gen_out, gen_rotation;
    auto* gen = app.add_subcommand("gen", std::string("Generate a graph family: ") + families_help);
    gen->add_option("family", gen_params.family, "Family name")->required();
    gen->add_option("params", gen_params.raw, "Family parameters");
    gen->add_option("-o,--output", gen_out, "Output edge list (default stdout)");
    gen->add_option("--rotation", gen_rotation, "Also write the rotation system (triangulation only)");

    std::string file;
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Edge list, or - for stdin")->required(); };

    DeltaOpts dopt;
    auto* delta = app.add_subcommand("delta", "Four-point hyperbolicity");
    add_file(delta);
    delta->add_option("--method", dopt.method, "exact, pruned or rooted")
        ->check(CLI::IsMember({"exact", "pruned", "rooted"}));
    delta->add_option("--root", dopt.root, "Root label for --method rooted (default all)");
    delta->add_flag("--thin", dopt.thin, "Also report the thin-triangles constant");
    delta->add_flag("--slim", dopt.slim, "Also report the slim-triangles constant");
    delta->add_flag("--json", dopt.json, "JSON output");

    TreeOpts topt;
    auto* tree = app.add_subcommand("tree", "Layering tree with Steiner points");
    add_file(tree);
    tree->add_option("--root", topt.root, "Root label (default an endpoint of a diametral pair)");
    auto* tjson = tree->add_flag("--json", topt.json, "JSON output");
    tree->add_flag("--dot", topt.dot, "Graphviz output")->excludes(tjson);

    TreeLengthOpts lopt;
    auto* tl = app.add_subcommand("treelength", "Tree-length bounds and the disk-tree heuristic");
    add_file(tl);
    tl->add_option("--disk", lopt.disk, "Run the disk tree with radii k and ell")->expected(2);
    tl->add_option("--start", lopt.start, "Disk-tree start label (default drawn from --seed)");
    tl->add_option("--seed", lopt.seed, "Seed for the disk-tree start");
    tl->add_option("--root", lopt.root, "Single root for the layering bound (default all roots)");
    tl->add_flag("--lambda", lopt.lambda, "Also report the longest induced cycle");
    tl->add_option("--lambda-cap", lopt.lambda_cap, "Vertex limit for --lambda");
    tl->add_flag("--json", lopt.json, "JSON output");

    CongestionOpts copt;
    auto* cong = app.add_subcommand("congestion", "Demand, betweenness, inertia and the congestion centre");
    add_file(cong);
    cong->add_flag("--center", copt.center, "Report the congestion centre");
    cong->add_option("--balance", copt.balance, "Balance check with near-diametral slack a");
    cong->add_option("--coverage", copt.coverage, "Coverage of the ball of radius rho at the centre");
    cong->add_flag("--json", copt.json, "JSON output");

    int side = 0;
    bool gd_json = false;
    auto* gd = app.add_subcommand("grid-demand", "Demand at the centre of the side x side grid");
    gd->add_option("--side", side, "Odd side length")->required();
    gd->add_flag("--json", gd_json, "JSON output");

    std::string rotation, metric = "half-ceil";
    bool cv_json = false;
    auto* curv = app.add_subcommand("curvature", "Alexandrov and Gaussian curvature of an embedded graph");
    add_file(curv);
    curv->add_option("--embedding", rotation, "Rotation file")->required();
    curv->add_option("--metric", metric, "hop or half-ceil");
    curv->add_flag("--json", cv_json, "JSON output");

    int R = 0;
    std::uint64_t cap = 10000;
    bool sc_json = false;
    auto* scaled = app.add_subcommand("scaled", "Scaled hyperbolicity H_R");
    add_file(scaled);
    scaled->add_option("--R", R, "Separation threshold")->required();
    scaled->add_option("--cap", cap, "Limit on enumerated geodesic pairs per triple");
    scaled->add_flag("--json", sc_json, "JSON output");

    std::string scale = "smoke";
    bool rp_json = false;
    auto* repro = app.add_subcommand("repro", "Run every acceptance scenario");
    repro->add_option("scale", scale, "smoke or desk");
    repro->add_flag("--json", rp_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_params, gen_out, gen_rotation);
        if (delta->parsed())
            return cmd_delta(file, dopt, workers);
        if (tree->parsed())
            return cmd_tree(file, topt, workers);
        if (tl->parsed())
            return cmd_treelength(file, lopt, workers);
        if (cong->parsed())
            return cmd_congestion(file, copt, workers);
        if (gd->parsed())
            return cmd_grid_demand(side, gd_json);
        if (curv->parsed())
            return cmd_curvature(file, rotation, metric, cv_json, workers);
        if (scaled->parsed())
            return cmd_scaled(file, R, cap, sc_json, workers);
        if (repro->parsed())
            return cmd_repro(scale, rp_json);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_ok;
}
