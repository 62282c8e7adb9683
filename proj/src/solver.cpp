#include "ordtree/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace ordtree {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Edge> canonical_edge_order(int n)
{
    std::vector<Edge> all;
    for (int len = 1; len < n; ++len)
        for (int x = 1; x + len <= n; ++x)
            all.push_back({x, x + len});
    return all;
}

void check_query(int n, const Graph& pattern)
{
    if (n < 1)
        throw InputError("n must be positive");
    if (pattern.size() == 0)
        throw InputError("pattern has no edges; every host contains it");
}

ExtremalResult trivial_result(int n, const Graph& pattern)
{
    // More pattern vertices than host vertices: the complete graph is free.
    std::vector<Edge> all = canonical_edge_order(n);
    ExtremalResult r;
    r.n = n;
    r.mode = pattern.mode();
    r.pattern = pattern;
    r.value = static_cast<long long>(all.size());
    r.witness = Graph(pattern.mode(), n, std::move(all));
    return r;
}

class BranchAndBound {
public:
    BranchAndBound(int n, const Graph& pattern)
        : n_(n), pattern_(pattern), order_(canonical_edge_order(n)), adj_(n)
    {
    }

    ExtremalResult run()
    {
        auto t0 = Clock::now();
        search(0);
        ExtremalResult r;
        r.n = n_;
        r.mode = pattern_.mode();
        r.pattern = pattern_;
        r.value = static_cast<long long>(best_.size());
        r.witness = Graph(pattern_.mode(), n_, best_);
        r.nodes = nodes_;
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return r;
    }

private:
    void search(std::size_t at)
    {
        ++nodes_;
        std::size_t remaining = order_.size() - at;
        if (have_best_ && current_.size() + remaining <= best_.size())
            return;
        if (at == order_.size()) {
            best_ = current_;
            have_best_ = true;
            return;
        }
        Edge e = order_[at];
        adj_.set(e.u - 1, e.v - 1);
        if (!find_embedding_through(pattern_.mode(), adj_, pattern_, e)) {
            current_.push_back(e);
            search(at + 1);
            current_.pop_back();
        }
        adj_.reset(e.u - 1, e.v - 1);
        search(at + 1);
    }

    int n_;
    const Graph& pattern_;
    std::vector<Edge> order_;
    AdjacencyMatrix adj_;
    std::vector<Edge> current_;
    std::vector<Edge> best_;
    bool have_best_ = false;
    std::uint64_t nodes_ = 0;
};

} // namespace

ExtremalResult extremal_number(int n, const Graph& pattern)
{
    check_query(n, pattern);
    if (n > kSolverMaxN)
        throw SolverRefusal("exact search is limited to n <= " + std::to_string(kSolverMaxN));
    if (pattern.n() > n)
        return trivial_result(n, pattern);
    return BranchAndBound(n, pattern).run();
}

ExtremalResult extremal_number_naive(int n, const Graph& pattern)
{
    check_query(n, pattern);
    if (n > kNaiveMaxN)
        throw SolverRefusal("naive enumeration is limited to n <= " + std::to_string(kNaiveMaxN));
    if (pattern.n() > n)
        return trivial_result(n, pattern);
    auto t0 = Clock::now();
    std::vector<Edge> all = canonical_edge_order(n);
    const std::uint32_t masks = std::uint32_t{1} << all.size();
    int best = -1;
    std::uint32_t best_mask = 0;
    ExtremalResult r;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        int count = std::popcount(mask);
        if (count <= best)
            continue;
        ++r.nodes;
        std::vector<Edge> es;
        for (std::size_t t = 0; t < all.size(); ++t)
            if (mask >> t & 1U)
                es.push_back(all[t]);
        if (!contains(Graph(pattern.mode(), n, es), pattern)) {
            best = count;
            best_mask = mask;
        }
    }
    std::vector<Edge> es;
    for (std::size_t t = 0; t < all.size(); ++t)
        if (best_mask >> t & 1U)
            es.push_back(all[t]);
    r.n = n;
    r.mode = pattern.mode();
    r.pattern = pattern;
    r.value = best;
    r.witness = Graph(pattern.mode(), n, std::move(es));
    r.naive = true;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

long long dense_threshold(Mode mode, int n, int k)
{
    long long kk = k;
    if (mode == Mode::linear)
        return (kk - 1) * n - kk * (kk - 1) / 2;
    return 2 * (kk - 1) * n;
}

namespace {

// Pattern vertex -> host vertex (1-based), 0 when unplaced.
using Placement = std::vector<int>;

struct Parts {
    std::vector<Edge> core; // increasing chain, shortest first
    std::vector<Edge> s_i;
    std::vector<Edge> s_j;
};

Parts parts_of(const ZDecomposition& z)
{
    Parts p{z.core, z.s_i, z.s_j};
    std::sort(p.core.begin(), p.core.end(), [](Edge x, Edge y) { return x.length() < y.length(); });
    return p;
}

// Longest edge from g towards higher labels (dir = +1) or lower labels (dir = -1).
int longest_edge(const AdjacencyMatrix& g, int n, int v, int dir)
{
    if (dir > 0) {
        for (int y = n; y > v; --y)
            if (g.test(v - 1, y - 1))
                return y;
    } else {
        for (int y = 1; y < v; ++y)
            if (g.test(v - 1, y - 1))
                return y;
    }
    return 0;
}

struct Stripped {
    AdjacencyMatrix rest;
    std::vector<int> far; // far[v] = removed partner, 0 if none
};

Stripped strip_longest(const AdjacencyMatrix& g, int n, int from, int to, int dir)
{
    Stripped s{g, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
    for (int v = std::max(from, 1); v <= std::min(to, n); ++v) {
        int y = longest_edge(g, n, v, dir);
        if (y == 0)
            continue;
        s.rest.reset(v - 1, y - 1);
        s.far[static_cast<std::size_t>(v)] = y;
    }
    return s;
}

int max_image(const Placement& p)
{
    return *std::max_element(p.begin(), p.end());
}

int min_image(const Placement& p)
{
    int lo = 0;
    for (int x : p)
        if (x > 0 && (lo == 0 || x < lo))
            lo = x;
    return lo;
}

std::optional<Placement> embed_linear(const AdjacencyMatrix& g, int n, int pattern_n, Parts z)
{
    const int a = static_cast<int>(z.core.size());
    const int b = static_cast<int>(z.s_j.size());
    const int c = static_cast<int>(z.s_i.size());

    // Grow the placement of `anchor` by the stripped edge there; `leaf` must
    // land beyond every placed vertex on the `dir` side.
    auto extend = [&](std::optional<Placement> got, const Stripped& s, int anchor, int leaf,
                      int dir) -> std::optional<Placement> {
        if (!got)
            return std::nullopt;
        int y = s.far[static_cast<std::size_t>((*got)[static_cast<std::size_t>(anchor)])];
        if (y == 0 || (dir > 0 ? y <= max_image(*got) : y >= min_image(*got)))
            return std::nullopt;
        (*got)[static_cast<std::size_t>(leaf)] = y;
        return got;
    };

    if (c > 0) {
        auto it = std::max_element(z.s_i.begin(), z.s_i.end(), [](Edge x, Edge y) { return x.v < y.v; });
        Edge e = *it;
        z.s_i.erase(it);
        auto s = strip_longest(g, n, b + 1, n - a - c + 1, +1);
        return extend(embed_linear(s.rest, n, pattern_n, std::move(z)), s, e.u, e.v, +1);
    }
    if (b > 0) {
        auto it = std::min_element(z.s_j.begin(), z.s_j.end(), [](Edge x, Edge y) { return x.u < y.u; });
        Edge e = *it;
        z.s_j.erase(it);
        auto s = strip_longest(g, n, a + b, n - c, -1);
        return extend(embed_linear(s.rest, n, pattern_n, std::move(z)), s, e.v, e.u, -1);
    }
    if (a == 1) {
        Edge hub = z.core.front();
        for (int x = 1; x <= n; ++x) {
            int y = longest_edge(g, n, x, +1);
            if (y == 0)
                continue;
            Placement p(static_cast<std::size_t>(pattern_n) + 1, 0);
            p[static_cast<std::size_t>(hub.u)] = x;
            p[static_cast<std::size_t>(hub.v)] = y;
            return p;
        }
        return std::nullopt;
    }
    Edge last = z.core.back();
    Edge prev = z.core[static_cast<std::size_t>(a - 2)];
    z.core.pop_back();
    const int k_rest = a - 1;
    if (last.u == prev.u) {
        auto s = strip_longest(g, n, 1, n - k_rest, +1);
        return extend(embed_linear(s.rest, n, pattern_n, std::move(z)), s, last.u, last.v, +1);
    }
    auto s = strip_longest(g, n, k_rest + 1, n, -1);
    return extend(embed_linear(s.rest, n, pattern_n, std::move(z)), s, last.v, last.u, -1);
}

// Nearest neighbour of v going clockwise (dir = +1) or counterclockwise.
int nearest_edge(const AdjacencyMatrix& g, int n, int v, int dir)
{
    for (int t = 1; t < n; ++t) {
        int y = ((v - 1 + dir * t) % n + n) % n + 1;
        if (g.test(v - 1, y - 1))
            return y;
    }
    return 0;
}

// Pattern and host both in the frame of the linearization: pattern labels of
// the ordered z-tree, read cyclically; host already reflected.
std::optional<Placement> embed_cyclic(const AdjacencyMatrix& g, int n, int pattern_n, Parts z)
{
    if (z.core.size() == 1)
        return embed_linear(g, n, pattern_n, std::move(z));

    Edge first = z.core[0];
    Edge second = z.core[1];
    int u = second.touches(first.u) ? first.u : first.v;
    int w = first.other(u);
    int dir = w > u ? +1 : -1;
    z.core.erase(z.core.begin());

    AdjacencyMatrix rest = g;
    std::vector<int> near(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int cw = nearest_edge(g, n, v, +1);
        int ccw = nearest_edge(g, n, v, -1);
        if (cw)
            rest.reset(v - 1, cw - 1);
        if (ccw)
            rest.reset(v - 1, ccw - 1);
        near[static_cast<std::size_t>(v)] = dir > 0 ? cw : ccw;
    }
    auto got = embed_cyclic(rest, n, pattern_n, std::move(z));
    if (!got)
        return std::nullopt;
    int x = near[static_cast<std::size_t>((*got)[static_cast<std::size_t>(u)])];
    if (x == 0 || std::find(got->begin(), got->end(), x) != got->end())
        return std::nullopt;
    (*got)[static_cast<std::size_t>(w)] = x;
    return got;
}

} // namespace

std::optional<Embedding> embed_dense(const Graph& host, const ZDecomposition& z, int pattern_n)
{
    if (host.mode() != Mode::linear)
        throw InputError("decomposition embedding needs an ordered host");
    auto got = embed_linear(host.adjacency_matrix(), host.n(), pattern_n, parts_of(z));
    if (!got)
        return std::nullopt;
    Embedding e{Mode::linear, false, {got->begin() + 1, got->end()}};
    return e;
}

std::optional<Embedding> embed_dense(const Graph& host, const Graph& tree)
{
    if (host.mode() != tree.mode())
        throw InputError("host and pattern modes differ");
    if (tree.n() > host.n())
        return std::nullopt;
    std::optional<Embedding> out;
    if (tree.mode() == Mode::linear) {
        auto z = z_decompose(tree);
        if (!z)
            throw NotApplicable(to_string(tree) + " is not a z-tree: " + z.reason);
        out = embed_dense(host, *z.decomposition, tree.n());
    } else {
        auto z = cg_z_decompose(tree);
        if (!z)
            throw NotApplicable(to_string(tree) + " is not a cg z-tree: " + z.reason);
        Graph reflected = mirror(host);
        auto got = embed_cyclic(reflected.adjacency_matrix(), host.n(), tree.n(), parts_of(*z.decomposition));
        if (got) {
            const int m = tree.n();
            Embedding e{Mode::cyclic, false, std::vector<int>(static_cast<std::size_t>(m))};
            for (int l = 1; l <= m; ++l) {
                int original = cg_original_label(m, z.rotation, l);
                e.map[static_cast<std::size_t>(original - 1)] = host.n() + 1 - (*got)[static_cast<std::size_t>(l)];
            }
            out = e;
        }
    }
    if (out && !is_valid_embedding(host, tree, *out))
        return std::nullopt;
    return out;
}

} // namespace ordtree
