#include "ordtree/constructions.hpp"

#include <bit>

namespace ordtree {

namespace {

bool power_of_two(long long x)
{
    return x > 0 && (x & (x - 1)) == 0;
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw InputError(message);
}

} // namespace

Graph pow2(int n)
{
    require(n >= 2, "pow2 needs n >= 2");
    std::vector<Edge> es;
    for (int len = 1; len < n; len *= 2)
        for (int x = 1; x + len <= n; ++x)
            es.push_back({x, x + len});
    return Graph(Mode::linear, n, std::move(es));
}

long long pow2_edge_count(int n)
{
    long long total = 0;
    for (long long len = 1; len < n; len *= 2)
        total += n - len;
    return total;
}

namespace {

// Edges on [1, 2s]. Left half holds the left ends, right half the right ends.
std::vector<Edge> fh_edges(int s, bool q)
{
    if (s == 1)
        return {{1, 2}};
    int h = s / 2;
    auto prev = fh_edges(h, q);
    const int I = 0, Ip = h, J = 2 * h, Jp = 3 * h;
    std::vector<Edge> out;
    out.reserve(2 * prev.size() + static_cast<std::size_t>(h));
    auto place = [&](int left, int right) {
        for (auto e : prev)
            out.push_back({left + e.u, right + e.v - h});
    };
    if (q) {
        place(I, J);
        place(Ip, Jp);
        for (int t = 1; t <= h; ++t)
            out.push_back({Ip + t, J + t});
    } else {
        place(I, Jp);
        place(Ip, J);
        for (int t = 1; t <= h; ++t)
            out.push_back({I + t, J + t});
    }
    return out;
}

Graph fh(int stage, bool q)
{
    require(power_of_two(stage), "fh stage must be a power of two");
    require(stage <= (1 << 20), "fh stage too large");
    return Graph(Mode::linear, 2 * stage, fh_edges(stage, q));
}

} // namespace

Graph fh_q(int stage)
{
    return fh(stage, true);
}

Graph fh_r(int stage)
{
    return fh(stage, false);
}

long long fh_edge_count(int stage)
{
    require(power_of_two(stage), "fh stage must be a power of two");
    return stage == 1 ? 1 : 2 * fh_edge_count(stage / 2) + stage / 2;
}

Graph gstar(int n, int a, int b, int c)
{
    require(a >= 1 && b >= 0 && c >= 0, "gstar needs a >= 1, b >= 0, c >= 0");
    require(n >= a + b + c + 1, "gstar needs n >= a + b + c + 1");
    std::vector<Edge> es;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (y - x < a || x <= b || y > n - c)
                es.push_back({x, y});
    return Graph(Mode::linear, n, std::move(es));
}

long long gstar_edge_count(int n, int a, int b, int c)
{
    long long k = a + b + c;
    return (k - 1) * n - k * (k - 1) / 2;
}

Graph f_n(int n)
{
    require(power_of_two(n) && n >= 8, "f_n needs n = 2^kappa with kappa >= 3");
    int kappa = std::countr_zero(static_cast<unsigned>(n));
    std::vector<Edge> es;
    std::vector<int> colors;
    for (int j = 1; j < kappa; ++j)
        for (int i = 1; i <= n / 4; ++i) {
            es.push_back({2 * i - 1, 2 * i - 2 + (1 << j)});
            colors.push_back(j);
        }
    return Graph(Mode::cyclic, n, std::move(es), std::move(colors));
}

long long f_n_edge_count(int n)
{
    require(power_of_two(n) && n >= 8, "f_n needs n = 2^kappa with kappa >= 3");
    long long kappa = std::countr_zero(static_cast<unsigned>(n));
    return (kappa - 1) * n / 4;
}

Graph f_n0(int n)
{
    require(n >= 2 && n % 2 == 0, "f_n0 needs an even n");
    std::vector<Edge> es;
    for (int x = 1; x <= n / 2; ++x)
        for (int y = n / 2 + 1; y <= n; ++y)
            es.push_back({x, y});
    return Graph(Mode::cyclic, n, std::move(es));
}

bool has_parity_ends(const Graph& g)
{
    for (const auto& e : g.edges())
        if (e.u % 2 == 0 || e.v % 2 == 1)
            return false;
    return true;
}

std::optional<std::array<int, 4>> find_heavy_path(const Graph& g)
{
    for (int v1 = 1; v1 <= g.n(); ++v1)
        for (int v2 : g.neighbors(v1)) {
            if (v2 >= v1)
                break;
            for (int v3 : g.neighbors(v2)) {
                if (v3 <= v1)
                    continue;
                for (int v4 : g.neighbors(v3))
                    if (v2 < v4 && v4 < v1)
                        return std::array<int, 4>{v1, v2, v3, v4};
            }
        }
    return std::nullopt;
}

const std::vector<std::string>& construction_names()
{
    static const std::vector<std::string> names{"pow2", "fh_q", "fh_r", "gstar", "f_n", "f_n0"};
    return names;
}

Graph construct(const std::string& name, const ConstructParams& p)
{
    if (name == "pow2")
        return pow2(p.n);
    if (name == "fh_q" || name == "fh_r") {
        require(p.n >= 2 && p.n % 2 == 0, name + " needs an even vertex count");
        return name == "fh_q" ? fh_q(p.n / 2) : fh_r(p.n / 2);
    }
    if (name == "gstar")
        return gstar(p.n, p.a, p.b, p.c);
    if (name == "f_n")
        return f_n(p.n);
    if (name == "f_n0")
        return f_n0(p.n);
    throw InputError("unknown construction '" + name + "'");
}

} // namespace ordtree
