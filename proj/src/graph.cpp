#include "ordtree/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace ordtree {

std::string_view to_string(Mode mode)
{
    return mode == Mode::linear ? "ordered" : "cg";
}

Mode parse_mode(std::string_view text)
{
    if (text == "ordered" || text == "linear")
        return Mode::linear;
    if (text == "cg" || text == "cyclic")
        return Mode::cyclic;
    throw InputError("unknown mode '" + std::string(text) + "' (expected ordered|cg)");
}

Edge make_edge(int a, int b)
{
    if (a == b)
        throw InputError("loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

bool crosses(Edge e, Edge f, Mode, int n)
{
    for (int x : {e.u, e.v, f.u, f.v})
        if (x < 1 || x > n)
            throw InputError("endpoint " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
    return crosses(e, f);
}

AdjacencyMatrix::AdjacencyMatrix(int n)
    : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0)
{
}

void AdjacencyMatrix::set(int a, int b)
{
    rows_[static_cast<std::size_t>(a * words_ + (b >> 6))] |= std::uint64_t{1} << (b & 63);
    rows_[static_cast<std::size_t>(b * words_ + (a >> 6))] |= std::uint64_t{1} << (a & 63);
}

void AdjacencyMatrix::reset(int a, int b)
{
    rows_[static_cast<std::size_t>(a * words_ + (b >> 6))] &= ~(std::uint64_t{1} << (b & 63));
    rows_[static_cast<std::size_t>(b * words_ + (a >> 6))] &= ~(std::uint64_t{1} << (a & 63));
}

int AdjacencyMatrix::degree(int a) const
{
    int d = 0;
    for (auto w : row(a))
        d += std::popcount(w);
    return d;
}

Graph::Graph(Mode mode, int n, std::vector<Edge> edges, std::vector<int> colors)
    : mode_(mode), n_(n)
{
    if (n < 1)
        throw InputError("vertex count must be positive");
    if (!colors.empty() && colors.size() != edges.size())
        throw InputError("colors must be parallel to edges");
    for (auto& e : edges) {
        e = make_edge(e.u, e.v);
        if (e.u < 1 || e.v > n)
            throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " outside [1,"
                             + std::to_string(n) + "]");
    }
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return edges[x] < edges[y]; });
    edges_.reserve(edges.size());
    for (auto idx : order) {
        if (!edges_.empty() && edges_.back() == edges[idx])
            throw InputError("duplicate edge " + std::to_string(edges[idx].u) + "-" + std::to_string(edges[idx].v));
        edges_.push_back(edges[idx]);
        if (!colors.empty()) {
            if (colors[idx] < 1)
                throw InputError("colors must be positive");
            colors_.push_back(colors[idx]);
        }
    }
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u - 1)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v - 1)].push_back(e.u);
    }
    for (auto& row : adjacency_)
        std::sort(row.begin(), row.end());
}

bool Graph::has_edge(int a, int b) const
{
    if (a == b || a < 1 || b < 1 || a > n_ || b > n_)
        return false;
    const auto& row = neighbors(a);
    return std::binary_search(row.begin(), row.end(), b);
}

int Graph::edge_index(Edge e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

int Graph::color_of(Edge e) const
{
    int idx = edge_index(e);
    if (idx < 0 || colors_.empty())
        return 0;
    return colors_[static_cast<std::size_t>(idx)];
}

bool Graph::is_connected() const
{
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{1};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (!seen[static_cast<std::size_t>(w - 1)]) {
                seen[static_cast<std::size_t>(w - 1)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

bool Graph::is_tree() const
{
    return static_cast<int>(edges_.size()) == n_ - 1 && is_connected();
}

bool Graph::is_path() const
{
    if (!is_tree())
        return false;
    for (int v = 1; v <= n_; ++v)
        if (degree(v) > 2)
            return false;
    return true;
}

AdjacencyMatrix Graph::adjacency_matrix() const
{
    AdjacencyMatrix m(n_);
    for (const auto& e : edges_)
        m.set(e.u - 1, e.v - 1);
    return m;
}

Graph Graph::with_mode(Mode mode) const
{
    Graph g = *this;
    g.mode_ = mode;
    return g;
}

Graph Graph::edge_subgraph(std::span<const int> indices) const
{
    std::vector<Edge> es;
    std::vector<int> cs;
    for (int idx : indices) {
        es.push_back(edges_.at(static_cast<std::size_t>(idx)));
        if (!colors_.empty())
            cs.push_back(colors_[static_cast<std::size_t>(idx)]);
    }
    return Graph(mode_, n_, std::move(es), std::move(cs));
}

namespace {

Graph from_pairs(Mode mode, int n, std::initializer_list<std::pair<int, int>> pairs)
{
    std::vector<Edge> es;
    for (auto [a, b] : pairs)
        es.push_back(make_edge(a, b));
    return Graph(mode, n, std::move(es));
}

} // namespace

Graph make_ordered(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_pairs(Mode::linear, n, edges);
}

Graph make_cg(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_pairs(Mode::cyclic, n, edges);
}

std::string to_string(const Graph& g)
{
    std::ostringstream out;
    out << to_string(g.mode()) << "[" << g.n() << "]{";
    for (std::size_t i = 0; i < g.size(); ++i)
        out << (i ? "," : "") << g.edges()[i].u << "-" << g.edges()[i].v;
    out << "}";
    return out.str();
}

int IntervalSplit::part_of(int v) const
{
    // starts are stored in increasing order; in cyclic mode vertices before
    // starts.front() belong to the wrapping last part.
    auto it = std::upper_bound(starts.begin(), starts.end(), v);
    if (it == starts.begin())
        return parts() - 1;
    return static_cast<int>(it - starts.begin()) - 1;
}

bool IntervalSplit::is_proper_for(const Graph& g) const
{
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return part_of(e.u) == part_of(e.v); });
}

namespace {

// Greedy on the linear reading sequence order[0..n): open a new part as soon
// as the next vertex has a neighbour in the current part. Returns the part
// start positions (indices into order).
std::vector<int> greedy_parts(const Graph& g, std::span<const int> order)
{
    std::vector<int> pos(static_cast<std::size_t>(g.n()) + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<int> starts{0};
    for (int i = 1; i < static_cast<int>(order.size()); ++i) {
        int v = order[static_cast<std::size_t>(i)];
        for (int w : g.neighbors(v)) {
            int pw = pos[static_cast<std::size_t>(w)];
            if (pw >= starts.back() && pw < i) {
                starts.push_back(i);
                break;
            }
        }
    }
    return starts;
}

} // namespace

Chromatic chi_interval(const Graph& g)
{
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 1);
    auto starts = greedy_parts(g, order);
    IntervalSplit split{Mode::linear, g.n(), {}};
    for (int s : starts)
        split.starts.push_back(s + 1);
    return {split.parts(), std::move(split)};
}

Chromatic chi_cyclic(const Graph& g)
{
    if (g.size() == 0)
        return {1, IntervalSplit{Mode::cyclic, g.n(), {1}}};
    Chromatic best;
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int r = 0; r < g.n(); ++r) {
        for (int i = 0; i < g.n(); ++i)
            order[static_cast<std::size_t>(i)] = (r + i) % g.n() + 1;
        auto starts = greedy_parts(g, order);
        if (best.value == 0 || static_cast<int>(starts.size()) < best.value) {
            IntervalSplit split{Mode::cyclic, g.n(), {}};
            for (int s : starts)
                split.starts.push_back(order[static_cast<std::size_t>(s)]);
            std::sort(split.starts.begin(), split.starts.end());
            best = {split.parts(), std::move(split)};
        }
    }
    return best;
}

Chromatic chromatic_number(const Graph& g)
{
    return g.mode() == Mode::linear ? chi_interval(g) : chi_cyclic(g);
}

Graph relabel(const Graph& g, std::span<const int> image, Mode mode)
{
    std::vector<Edge> es;
    es.reserve(g.size());
    for (const auto& e : g.edges())
        es.push_back(make_edge(image[static_cast<std::size_t>(e.u - 1)], image[static_cast<std::size_t>(e.v - 1)]));
    return Graph(mode, g.n(), std::move(es), g.colors());
}

Graph mirror(const Graph& g)
{
    std::vector<int> image(static_cast<std::size_t>(g.n()));
    for (int v = 1; v <= g.n(); ++v)
        image[static_cast<std::size_t>(v - 1)] = g.n() + 1 - v;
    return relabel(g, image, g.mode());
}

Graph rotate(const Graph& g, int r)
{
    if (g.mode() != Mode::cyclic)
        throw InputError("rotate requires a cg graph");
    int n = g.n();
    r = ((r % n) + n) % n;
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        image[static_cast<std::size_t>(v - 1)] = (v - 1 + r) % n + 1;
    return relabel(g, image, g.mode());
}

Graph reflect(const Graph& g)
{
    if (g.mode() != Mode::cyclic)
        throw InputError("reflect requires a cg graph");
    return mirror(g);
}

} // namespace ordtree
