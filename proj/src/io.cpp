#include "ordtree/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace ordtree {

Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    Json doc = {{"mode", to_string(g.mode())}, {"n", g.n()}, {"edges", edges}};
    if (g.colored())
        doc["colors"] = g.colors();
    return doc;
}

namespace {

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

Graph graph_from_json(const Json& doc)
{
    if (!doc.is_object())
        throw InputError("graph document must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "mode" && key != "n" && key != "edges" && key != "colors")
            throw InputError("unknown graph field '" + key + "'");
    if (!doc.contains("mode") || !doc["mode"].is_string())
        throw InputError("graph needs a string field 'mode'");
    if (!doc.contains("n"))
        throw InputError("graph needs a field 'n'");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw InputError("graph needs an array field 'edges'");
    Mode mode = parse_mode(doc["mode"].get<std::string>());
    int n = as_int(doc["n"], "n");
    std::vector<Edge> edges;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw InputError("each edge must be a pair [u, v]");
        int u = as_int(pair[0], "edge endpoint");
        int v = as_int(pair[1], "edge endpoint");
        edges.push_back(make_edge(u, v));
    }
    std::vector<int> colors;
    if (doc.contains("colors")) {
        if (!doc["colors"].is_array())
            throw InputError("'colors' must be an array");
        for (const auto& c : doc["colors"])
            colors.push_back(as_int(c, "color"));
        if (colors.size() != edges.size())
            throw InputError("'colors' must be parallel to 'edges'");
    }
    return Graph(mode, n, std::move(edges), std::move(colors));
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return graph_from_json(doc);
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

Json to_json(const Embedding& e)
{
    return {{"mode", to_string(e.mode)}, {"reflected", e.reflected}, {"map", e.map}};
}

namespace {

Json edge_list(const std::vector<Edge>& es)
{
    Json out = Json::array();
    for (const auto& e : es)
        out.push_back({e.u, e.v});
    return out;
}

} // namespace

Json to_json(const ZDecomposition& z)
{
    return {{"hub", {z.hub.u, z.hub.v}}, {"core", edge_list(z.core)}, {"s_j", edge_list(z.s_j)},
            {"s_i", edge_list(z.s_i)}, {"abc", {z.a(), z.b(), z.c()}}, {"is_increasing", z.is_increasing}};
}

Json to_json(const Verdict& v)
{
    Json doc = {{"kind", to_string(v.kind)}, {"mode", to_string(v.mode)}, {"k", v.edges}, {"reason", v.reason}};
    if (v.kind == VerdictKind::not_applicable)
        return doc;
    doc["chromatic_number"] = v.chromatic;
    doc["growth"] = to_string(v.growth);
    if (v.kind == VerdictKind::linear) {
        if (v.mode == Mode::linear)
            doc["formula"] = "(k-1)n - k(k-1)/2 = " + std::to_string(v.edges - 1) + "n - "
                           + std::to_string(v.edges * (v.edges - 1) / 2);
        else
            doc["upper_bound"] = "2(k-1)n = " + std::to_string(2 * (v.edges - 1)) + "n";
        if (v.decomposition)
            doc["decomposition"] = to_json(*v.decomposition);
        if (v.rotation >= 0)
            doc["rotation"] = v.rotation;
        return doc;
    }
    Json witness = Json::object();
    if (v.witness_pattern)
        witness["pattern"] = to_json(*v.witness_pattern);
    if (v.witness_embedding)
        witness["embedding"] = to_json(*v.witness_embedding);
    if (v.crossing_path)
        witness["crossing_path4"] = *v.crossing_path;
    if (v.p_family)
        witness["p_family"] = {{"kind", "P" + std::to_string(v.p_family->kind)},
                               {"paths", {v.p_family->first, v.p_family->second}}};
    if (!witness.empty())
        doc["witness"] = witness;
    return doc;
}

Json to_json(const ExtremalResult& r)
{
    return {{"n", r.n},
            {"mode", to_string(r.mode)},
            {"pattern", to_json(r.pattern)},
            {"value", r.value},
            {"witness", to_json(r.witness)},
            {"method", r.naive ? "naive" : "branch_and_bound"},
            {"stats", {{"nodes", r.nodes}, {"seconds", r.seconds}}}};
}

Json to_json(const Walk4& w)
{
    return {{"kind", to_string(w.kind)}, {"vertices", w.vertices}, {"colors", w.colors}};
}

Json to_json(const Extraction& x, WalkKind kind, Side start)
{
    Json doc = {{"subgraph", to_json(x.subgraph)},
                {"kind", to_string(kind)},
                {"bound", x.bound},
                {"achieved", x.achieved},
                {"log_base", 2},
                {"method", x.exhaustive ? "exhaustive" : "greedy"},
                {"seed", x.seed}};
    if (kind == WalkKind::slow)
        doc["start"] = to_string(start);
    return doc;
}

std::string to_dot(const Graph& g)
{
    std::ostringstream out;
    out << "graph G {\n  layout=" << (g.mode() == Mode::cyclic ? "circo" : "dot") << ";\n";
    if (g.mode() == Mode::linear)
        out << "  rankdir=LR;\n";
    for (int v = 1; v <= g.n(); ++v)
        out << "  " << v << ";\n";
    if (g.mode() == Mode::linear && g.n() > 1) {
        out << "  ";
        for (int v = 1; v <= g.n(); ++v)
            out << v << (v < g.n() ? " -- " : "");
        out << " [style=invis];\n";
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        out << "  " << e.u << " -- " << e.v;
        if (g.colored())
            out << " [label=" << g.colors()[i] << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_svg(const Graph& g)
{
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};
    const double size = 400;
    const double r = 170;
    const double c = size / 2;
    auto point = [&](int v) {
        double t = 2 * std::numbers::pi * (v - 1) / g.n() - std::numbers::pi / 2;
        return std::pair{c + r * std::cos(t), c + r * std::sin(t)};
    };
    std::ostringstream out;
    out.precision(2);
    out << std::fixed;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    out << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << r << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto [x1, y1] = point(g.edges()[i].u);
        auto [x2, y2] = point(g.edges()[i].v);
        const char* colour = g.colored() ? palette[(g.colors()[i] - 1) % 7] : "#333";
        out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"" << colour << "\"/>\n";
    }
    for (int v = 1; v <= g.n(); ++v) {
        auto [x, y] = point(v);
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\"/>\n";
        auto [lx, ly] = std::pair{c + (x - c) * 1.08, c + (y - c) * 1.08};
        out << "<text x=\"" << lx << "\" y=\"" << ly << "\" font-size=\"10\" text-anchor=\"middle\">" << v
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace ordtree
