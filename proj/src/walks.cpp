#include "ordtree/walks.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <random>

namespace ordtree {

std::string_view to_string(Side side)
{
    return side == Side::A ? "A" : "B";
}

std::string_view to_string(WalkKind kind)
{
    return kind == WalkKind::fast ? "fast" : "slow";
}

Side parse_side(std::string_view text)
{
    if (text == "A" || text == "a" || text == "V1")
        return Side::A;
    if (text == "B" || text == "b" || text == "V2")
        return Side::B;
    throw InputError("unknown side '" + std::string(text) + "' (expected A|B)");
}

WalkKind parse_walk_kind(std::string_view text)
{
    if (text == "fast")
        return WalkKind::fast;
    if (text == "slow")
        return WalkKind::slow;
    throw InputError("unknown walk kind '" + std::string(text) + "' (expected fast|slow)");
}

ColoredBipartite::ColoredBipartite(Graph g) : g_(std::move(g))
{
    if (!g_.colored() && g_.size() > 0)
        throw InputError("walk analysis needs an edge coloring");
    for (const auto& e : g_.edges())
        if (side_of(e.u) == side_of(e.v))
            throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v)
                             + " joins two vertices of the same parity side");
    for (int v = 1; v <= g_.n(); ++v) {
        std::vector<int> seen;
        for (int w : g_.neighbors(v))
            seen.push_back(g_.color_of(make_edge(v, w)));
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw InputError("coloring is not proper at vertex " + std::to_string(v));
    }
    for (int c : g_.colors())
        d_ = std::max(d_, c);
}

namespace {

bool colors_match(WalkKind kind, const std::array<int, 4>& c)
{
    if (!(c[1] < c[2] && c[2] < c[3]))
        return false;
    if (kind == WalkKind::fast)
        return c[3] <= c[0];
    return c[1] < c[0] && c[0] <= c[3];
}

} // namespace

bool is_forbidden_walk(const ColoredBipartite& g, const Walk4& w, Side start)
{
    const Graph& h = g.graph();
    for (int t = 0; t < 4; ++t) {
        if (!h.has_edge(w.vertices[t], w.vertices[t + 1]))
            return false;
        if (h.color_of(make_edge(w.vertices[t], w.vertices[t + 1])) != w.colors[t])
            return false;
        if (t > 0 && w.vertices[t - 1] == w.vertices[t + 1])
            return false;
    }
    if (w.kind == WalkKind::slow && ColoredBipartite::side_of(w.vertices[0]) != start)
        return false;
    return colors_match(w.kind, w.colors);
}

std::optional<Walk4> find_forbidden_walk(const ColoredBipartite& g, WalkKind kind, Side start)
{
    const Graph& h = g.graph();
    auto color = [&](int x, int y) { return h.color_of(make_edge(x, y)); };
    // Grow from the second edge, whose color is the smallest of e2..e4.
    for (int v1 = 1; v1 <= h.n(); ++v1)
        for (int v2 : h.neighbors(v1)) {
            int c2 = color(v1, v2);
            for (int v3 : h.neighbors(v2)) {
                int c3 = color(v2, v3);
                if (c3 <= c2)
                    continue;
                for (int v4 : h.neighbors(v3)) {
                    int c4 = color(v3, v4);
                    if (c4 <= c3)
                        continue;
                    for (int v0 : h.neighbors(v1)) {
                        if (kind == WalkKind::slow && ColoredBipartite::side_of(v0) != start)
                            continue;
                        Walk4 w{kind, {v0, v1, v2, v3, v4}, {color(v0, v1), c2, c3, c4}};
                        if (colors_match(kind, w.colors))
                            return w;
                    }
                }
            }
        }
    return std::nullopt;
}

long long walk_free_bound(int d, std::size_t edges)
{
    if (d <= 1)
        return 0;
    double x = std::log2(static_cast<double>(d)) / (480.0 * d) * static_cast<double>(edges);
    return static_cast<long long>(std::ceil(x - 1e-12));
}

namespace {

bool walk_free(const Graph& g, WalkKind kind, Side start)
{
    return !find_forbidden_walk(ColoredBipartite(g), kind, start).has_value();
}

std::vector<int> exhaustive_best(const Graph& g, WalkKind kind, Side start)
{
    const int m = static_cast<int>(g.size());
    std::vector<int> chosen;
    std::vector<int> best;
    auto search = [&](auto&& self, int at) -> void {
        if (static_cast<int>(chosen.size()) + (m - at) <= static_cast<int>(best.size()))
            return;
        if (at == m) {
            best = chosen;
            return;
        }
        chosen.push_back(at);
        if (walk_free(g.edge_subgraph(chosen), kind, start))
            self(self, at + 1);
        chosen.pop_back();
        self(self, at + 1);
    };
    search(search, 0);
    return best;
}

std::vector<int> greedy_from_class(const Graph& g, WalkKind kind, Side start, int color, std::uint64_t seed)
{
    std::vector<int> chosen;
    std::vector<int> rest;
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
        (g.colors()[static_cast<std::size_t>(i)] == color ? chosen : rest).push_back(i);
    // Fisher-Yates with raw engine output keeps the order portable.
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(color)));
    for (std::size_t i = rest.size(); i > 1; --i)
        std::swap(rest[i - 1], rest[static_cast<std::size_t>(rng() % i)]);
    for (int idx : rest) {
        chosen.push_back(idx);
        std::vector<int> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        if (!walk_free(g.edge_subgraph(sorted), kind, start))
            chosen.pop_back();
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace

Extraction extract_walk_free(const ColoredBipartite& cb, WalkKind kind, Side start, std::uint64_t seed)
{
    const Graph& g = cb.graph();
    Extraction out;
    out.seed = seed;
    out.bound = walk_free_bound(cb.colors(), g.size());
    std::vector<int> best;
    if (g.size() <= 20) {
        out.exhaustive = true;
        best = exhaustive_best(g, kind, start);
    } else {
        std::vector<std::future<std::vector<int>>> jobs;
        for (int c = 1; c <= cb.colors(); ++c)
            jobs.push_back(std::async(std::launch::async, greedy_from_class, std::cref(g), kind, start, c, seed));
        bool first = true;
        for (auto& job : jobs) {
            auto got = job.get();
            if (first || got.size() > best.size())
                best = std::move(got);
            first = false;
        }
    }
    out.subgraph = g.edge_subgraph(best);
    out.achieved = best.size();
    return out;
}

} // namespace ordtree
