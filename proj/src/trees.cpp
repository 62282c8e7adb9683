#include "ordtree/trees.hpp"

#include <algorithm>
#include <set>

namespace ordtree {

bool is_increasing_tree(std::vector<Edge> edges)
{
    if (edges.empty())
        return false;
    std::sort(edges.begin(), edges.end(), [](Edge x, Edge y) {
        return x.length() != y.length() ? x.length() < y.length() : x < y;
    });
    for (std::size_t t = 1; t < edges.size(); ++t) {
        Edge prev = edges[t - 1];
        Edge next = edges[t];
        bool extends_right = next.u == prev.u && next.v > prev.v;
        bool extends_left = next.v == prev.v && next.u < prev.u;
        if (!extends_right && !extends_left)
            return false;
    }
    return true;
}

std::optional<ZDecomposition> decompose_at(const Graph& tree, Edge hub)
{
    if (!tree.has_edge(hub.u, hub.v))
        return std::nullopt;
    ZDecomposition d;
    d.hub = hub;
    for (const auto& e : tree.edges()) {
        if (e.u == hub.u && e.v > hub.v)
            d.s_i.push_back(e);
        else if (e.v == hub.v && e.u < hub.u)
            d.s_j.push_back(e);
        else
            d.core.push_back(e);
    }
    if (!is_increasing_tree(d.core))
        return std::nullopt;
    for (const auto& e : d.core)
        if (e.length() > hub.length())
            return std::nullopt;
    d.is_increasing = is_increasing_tree(tree.edges());
    return d;
}

bool is_valid_decomposition(const Graph& tree, const ZDecomposition& d)
{
    std::vector<Edge> all;
    all.insert(all.end(), d.core.begin(), d.core.end());
    all.insert(all.end(), d.s_i.begin(), d.s_i.end());
    all.insert(all.end(), d.s_j.begin(), d.s_j.end());
    std::sort(all.begin(), all.end());
    if (all != tree.edges())
        return false;
    if (std::find(d.core.begin(), d.core.end(), d.hub) == d.core.end() || !is_increasing_tree(d.core))
        return false;
    for (const auto& e : d.core)
        if (e.length() >= d.hub.length() && e != d.hub)
            return false;
    for (const auto& e : d.s_i)
        if (e.u != d.hub.u || e.v <= d.hub.v)
            return false;
    for (const auto& e : d.s_j)
        if (e.v != d.hub.v || e.u >= d.hub.u)
            return false;
    // The only crossings are between S_j and S_i, and all of those pairs cross.
    std::size_t crossing_pairs = 0;
    const auto& es = tree.edges();
    for (std::size_t x = 0; x < es.size(); ++x)
        for (std::size_t y = x + 1; y < es.size(); ++y)
            crossing_pairs += crosses(es[x], es[y]) ? 1 : 0;
    for (const auto& f : d.s_j)
        for (const auto& g : d.s_i)
            if (!crosses(f, g))
                return false;
    return crossing_pairs == d.s_i.size() * d.s_j.size()
        && d.is_increasing == is_increasing_tree(tree.edges());
}

std::vector<Edge> longest_increasing_path_hubs(const Graph& tree)
{
    std::size_t best = 0;
    std::set<Edge> hubs;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(tree.n()) + 1, 0);

    auto record = [&] {
        std::size_t edges = path.size() - 1;
        if (edges == 0 || edges < best)
            return;
        if (edges > best) {
            best = edges;
            hubs.clear();
        }
        std::size_t at = edges >= 2 ? path.size() - 3 : 0;
        hubs.insert(make_edge(path[at], path[at + 1]));
    };
    auto walk = [&](auto&& self, int last_length) -> void {
        record();
        int v = path.back();
        for (int w : tree.neighbors(v)) {
            int len = std::abs(w - v);
            if (on_path[static_cast<std::size_t>(w)] || len <= last_length)
                continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, len);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int v = 1; v <= tree.n(); ++v) {
        path = {v};
        on_path[static_cast<std::size_t>(v)] = 1;
        walk(walk, 0);
        on_path[static_cast<std::size_t>(v)] = 0;
    }
    return {hubs.begin(), hubs.end()};
}

namespace {

void require_chi2_tree(const Graph& tree, Mode order)
{
    if (!tree.is_tree())
        throw NotApplicable(to_string(tree) + " is not a tree");
    int chi = order == Mode::linear ? chi_interval(tree).value : chi_cyclic(tree).value;
    if (chi != 2)
        throw NotApplicable(to_string(tree) + " has chromatic number " + std::to_string(chi) + ", expected 2");
}

bool shorter_hub(Edge x, Edge y)
{
    return x.length() != y.length() ? x.length() < y.length() : x < y;
}

std::optional<ZDecomposition> best_of(const Graph& tree, std::vector<Edge> hubs)
{
    std::sort(hubs.begin(), hubs.end(), shorter_hub);
    for (Edge h : hubs)
        if (auto d = decompose_at(tree, h))
            return d;
    return std::nullopt;
}

std::string non_z_reason(const Graph& tree)
{
    const auto& es = tree.edges();
    for (const auto& e : es)
        for (const auto& f : es) {
            if (!(e.u < f.u && f.u < e.v && e.v < f.v))
                continue;
            if (!tree.has_edge(f.u, e.v))
                return "edges " + std::to_string(e.u) + "-" + std::to_string(e.v) + " and " + std::to_string(f.u)
                     + "-" + std::to_string(f.v) + " cross but the hub edge " + std::to_string(f.u) + "-"
                     + std::to_string(e.v) + " is absent";
        }
    return "no edge is the longest edge of an increasing core";
}

} // namespace

ZOutcome z_decompose(const Graph& tree)
{
    require_chi2_tree(tree, Mode::linear);
    if (auto d = best_of(tree, longest_increasing_path_hubs(tree)))
        return {std::move(d), {}};
    if (auto d = best_of(tree, tree.edges()))
        return {std::move(d), {}};
    return {std::nullopt, non_z_reason(tree)};
}

Graph cg_linearize(const Graph& tree, int r)
{
    return mirror(rotate(tree.with_mode(Mode::cyclic), r)).with_mode(Mode::linear);
}

int cg_original_label(int n, int r, int linear_label)
{
    int rotated = n + 1 - linear_label;
    return ((rotated - 1 - r) % n + n) % n + 1;
}

CgZOutcome cg_z_decompose(const Graph& tree)
{
    require_chi2_tree(tree, Mode::cyclic);
    for (int r = 0; r < tree.n(); ++r) {
        Graph lin = cg_linearize(tree, r);
        if (chi_interval(lin).value != 2)
            continue;
        auto z = z_decompose(lin);
        if (z)
            return {r, std::move(z.decomposition), {}};
    }
    return {-1, std::nullopt, "no rotation linearizes to a z-tree"};
}

std::optional<std::pair<std::size_t, Embedding>> ObstructionCatalog::first_match(const Graph& tree) const
{
    Graph host = tree.with_mode(Mode::linear);
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (auto emb = find_embedding(host, entries[i].pattern))
            return std::make_pair(i, *emb);
    return std::nullopt;
}

Graph pattern_p()
{
    return make_ordered(4, {{1, 3}, {1, 4}, {2, 4}});
}

ObstructionCatalog derive_obstructions(int max_edges)
{
    if (max_edges < 3 || max_edges > 6)
        throw InputError("max_edges must lie in [3, 6]");
    ObstructionCatalog catalog;
    const Graph p = pattern_p();
    for (int k = 1; k <= max_edges; ++k) {
        for_each_tree(k, Mode::linear, TreeFilter::chi2, [&](const Graph& t) {
            if (z_decompose(t))
                return;
            if (catalog.first_match(t))
                return;
            catalog.entries.push_back({t, t == p ? Provenance::pinned : Provenance::derived});
        });
    }
    return catalog;
}

const ObstructionCatalog& default_catalog()
{
    static const ObstructionCatalog catalog = derive_obstructions(5);
    return catalog;
}

namespace {

void for_each_path(const Graph& tree, int edges, const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(tree.n()) + 1, 0);
    bool stop = false;
    auto grow = [&](auto&& self) -> void {
        if (stop)
            return;
        if (static_cast<int>(path.size()) == edges + 1) {
            stop = !visit(path);
            return;
        }
        for (int w : tree.neighbors(path.back())) {
            if (used[static_cast<std::size_t>(w)])
                continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
            if (stop)
                return;
        }
    };
    for (int v = 1; v <= tree.n() && !stop; ++v) {
        path = {v};
        used[static_cast<std::size_t>(v)] = 1;
        grow(grow);
        used[static_cast<std::size_t>(v)] = 0;
    }
}

} // namespace

std::optional<std::array<int, 5>> detect_crossing_path4(const Graph& tree)
{
    std::optional<std::array<int, 5>> found;
    for_each_path(tree, 4, [&](const std::vector<int>& p) {
        for (int x = 0; x < 4; ++x)
            for (int y = x + 2; y < 4; ++y)
                if (crosses(make_edge(p[x], p[x + 1]), make_edge(p[y], p[y + 1]))) {
                    found = std::array<int, 5>{p[0], p[1], p[2], p[3], p[4]};
                    return false;
                }
        return true;
    });
    return found;
}

bool on_open_arc(int n, int from, int to, int x)
{
    int off = ((x - from) % n + n) % n;
    int span = ((to - from) % n + n) % n;
    return off > 0 && off < span;
}

bool same_side(int n, Edge e, int x, int y)
{
    if (e.touches(x) || e.touches(y))
        return false;
    return on_open_arc(n, e.u, e.v, x) == on_open_arc(n, e.u, e.v, y);
}

bool is_P_family_pair(int n, const std::array<int, 4>& first, const std::array<int, 4>& second)
{
    auto [a, b, c, d] = first;
    auto [a2, b2, c2, d2] = second;
    if (!crosses(make_edge(a, b), make_edge(c, d)) || !crosses(make_edge(a2, b2), make_edge(c2, d2)))
        return false;
    Edge centre = make_edge(b, c);
    Edge centre2 = make_edge(b2, c2);
    if (crosses(centre, centre2))
        return false;
    std::set<int> shared;
    for (int x : {b, c})
        if (centre2.touches(x))
            shared.insert(x);
    std::set<int> common;
    for (int x : first)
        if (std::find(second.begin(), second.end(), x) != second.end())
            common.insert(x);
    if (common != shared)
        return false;
    if (shared.size() == 2)
        return !same_side(n, centre, a, a2);
    int away = shared.empty() ? b2 : centre2.other(*shared.begin());
    int away2 = shared.empty() ? b : centre.other(*shared.begin());
    // Crossing points sit on the side of each centre chord containing the
    // outer vertices; both must face away from the other centre.
    return !same_side(n, centre, a, away) && !same_side(n, centre2, a2, away2);
}

std::optional<PFamilyWitness> detect_P_family(const Graph& tree)
{
    std::vector<std::array<int, 4>> crossing_paths;
    for_each_path(tree, 3, [&](const std::vector<int>& p) {
        std::array<int, 4> fwd{p[0], p[1], p[2], p[3]};
        std::array<int, 4> rev{p[3], p[2], p[1], p[0]};
        if (fwd < rev && crosses(make_edge(p[0], p[1]), make_edge(p[2], p[3])))
            crossing_paths.push_back(fwd);
        return true;
    });
    for (std::size_t x = 0; x < crossing_paths.size(); ++x)
        for (std::size_t y = x + 1; y < crossing_paths.size(); ++y)
            if (is_P_family_pair(tree.n(), crossing_paths[x], crossing_paths[y])) {
                const auto& p = crossing_paths[x];
                const auto& q = crossing_paths[y];
                int shared = 0;
                for (int v : {p[1], p[2]})
                    shared += (v == q[1] || v == q[2]) ? 1 : 0;
                return PFamilyWitness{shared, p, q};
            }
    return std::nullopt;
}

bool is_zigzag(const Graph& path)
{
    if (!path.is_path())
        throw InputError(to_string(path) + " is not a path");
    const auto& es = path.edges();
    for (std::size_t x = 0; x < es.size(); ++x)
        for (std::size_t y = x + 1; y < es.size(); ++y)
            if (crosses(es[x], es[y]))
                return false;
    return chi_cyclic(path).value == 2;
}

bool is_heavy_edge(const Graph& tree, Edge e)
{
    if (!tree.has_edge(e.u, e.v))
        throw InputError("edge is not in the tree");
    for (int x : tree.neighbors(e.u))
        for (int y : tree.neighbors(e.v))
            if (x != e.v && y != e.u && x != y && same_side(tree.n(), e, x, y))
                return true;
    return false;
}

std::string_view to_string(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::linear: return "Linear";
    case VerdictKind::nonlinear: return "NonLinear";
    case VerdictKind::not_applicable: return "NotApplicable";
    }
    return "?";
}

std::string_view to_string(Growth growth)
{
    switch (growth) {
    case Growth::linear: return "Theta(n)";
    case Growth::n_log_n: return "Omega(n log n)";
    case Growth::n_log_log_n: return "Omega(n log log n)";
    case Growth::quadratic: return "Theta(n^2)";
    case Growth::none: return "";
    }
    return "?";
}

long long Verdict::formula(long long n) const
{
    long long k = edges;
    if (kind != VerdictKind::linear)
        return -1;
    if (mode == Mode::linear)
        return (k - 1) * n - k * (k - 1) / 2;
    return 2 * (k - 1) * n;
}

Verdict classify_tree(const Graph& tree)
{
    Verdict v;
    v.mode = tree.mode();
    v.edges = static_cast<int>(tree.size());
    if (!tree.is_tree() || tree.size() == 0) {
        v.reason = tree.size() == 0 ? "pattern has no edges" : "input is not a tree";
        return v;
    }
    v.chromatic = chromatic_number(tree).value;
    if (v.chromatic > 2) {
        v.kind = VerdictKind::nonlinear;
        v.growth = Growth::quadratic;
        v.reason = "chromatic number " + std::to_string(v.chromatic) + " > 2";
        return v;
    }

    if (tree.mode() == Mode::linear) {
        auto z = z_decompose(tree);
        auto match = default_catalog().first_match(tree);
        if (bool(z) == match.has_value())
            throw std::logic_error("z-tree recognition and obstruction catalog disagree on " + to_string(tree));
        if (z) {
            v.kind = VerdictKind::linear;
            v.growth = Growth::linear;
            v.decomposition = std::move(z.decomposition);
            v.reason = "z-tree";
        } else {
            v.kind = VerdictKind::nonlinear;
            v.growth = Growth::n_log_n;
            v.witness_pattern = default_catalog().entries[match->first].pattern;
            v.witness_embedding = match->second;
            v.reason = z.reason;
        }
        return v;
    }

    auto z = cg_z_decompose(tree);
    auto path4 = detect_crossing_path4(tree);
    auto family = detect_P_family(tree);
    bool obstructed = path4.has_value() || family.has_value();
    if (bool(z) == obstructed)
        throw std::logic_error("cg z-tree recognition and forbidden-pattern detectors disagree on " + to_string(tree));
    if (z) {
        v.kind = VerdictKind::linear;
        v.growth = Growth::linear;
        v.decomposition = std::move(z.decomposition);
        v.rotation = z.rotation;
        v.reason = "cg z-tree";
    } else {
        v.kind = VerdictKind::nonlinear;
        v.growth = Growth::n_log_log_n;
        v.crossing_path = path4;
        if (!path4)
            v.p_family = family;
        v.reason = path4 ? "contains a crossing 4-edge path" : "contains a member of the P family";
    }
    return v;
}

void for_each_tree(int k, Mode mode, TreeFilter filter, const std::function<void(const Graph&)>& visit)
{
    if (k < 1 || k > 6)
        throw InputError("tree enumeration supports 1 <= k <= 6");
    const int n = k + 1;
    auto emit = [&](std::vector<Edge> edges) {
        Graph g(mode, n, std::move(edges));
        if (filter == TreeFilter::chi2 && chromatic_number(g).value != 2)
            return;
        visit(g);
    };
    if (n == 2) {
        emit({Edge{1, 2}});
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1);
    while (true) {
        std::fill(degree.begin(), degree.end(), 1);
        for (int x : seq)
            ++degree[static_cast<std::size_t>(x)];
        std::vector<Edge> edges;
        for (int x : seq) {
            int leaf = 1;
            while (degree[static_cast<std::size_t>(leaf)] != 1)
                ++leaf;
            edges.push_back(make_edge(leaf, x));
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(x)];
        }
        int u = 0;
        for (int v = 1; v <= n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) {
                if (u == 0)
                    u = v;
                else
                    edges.push_back(make_edge(u, v));
            }
        emit(std::move(edges));

        int pos = n - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n) {
            seq[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0)
            break;
        ++seq[static_cast<std::size_t>(pos)];
    }
}

std::vector<Graph> enumerate_trees(int k, Mode mode, TreeFilter filter)
{
    std::vector<Graph> out;
    for_each_tree(k, mode, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace ordtree
