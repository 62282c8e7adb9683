#pragma once

// Shared helpers for the unit suites: seeded generators and naive oracles.

#include "ordtree/containment.hpp"
#include "ordtree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using namespace ordtree;

inline Graph random_graph(Mode mode, int n, double density, std::mt19937_64& rng)
{
    std::vector<Edge> es;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (static_cast<double>(rng() % 1000) < density * 1000)
                es.push_back({x, y});
    return Graph(mode, n, es);
}

// Tries every vertex subset; cyclic mode also tries every rotation of it.
inline bool naive_contains(const Graph& host, const Graph& pattern)
{
    const int n = host.n();
    const int p = pattern.n();
    if (p > n)
        return false;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - p, pick.end(), 1);
    do {
        std::vector<int> chosen;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)])
                chosen.push_back(i + 1);
        int shifts = host.mode() == Mode::cyclic ? p : 1;
        for (int s = 0; s < shifts; ++s) {
            bool ok = true;
            for (const auto& e : pattern.edges()) {
                int a = chosen[static_cast<std::size_t>((e.u - 1 + s) % p)];
                int b = chosen[static_cast<std::size_t>((e.v - 1 + s) % p)];
                if (!host.has_edge(a, b)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return true;
        }
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

// Brute force over all cut sets.
inline int brute_chi(const Graph& g, bool cyclic)
{
    const int n = g.n();
    int best = n + 1;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (!cyclic && !(mask & 1U))
            continue;
        if (mask == 0)
            continue;
        // bit v-1 set: a part starts at v.
        std::vector<int> part(static_cast<std::size_t>(n) + 1);
        int first = 0;
        while (!(mask >> first & 1U))
            ++first;
        int id = 0;
        for (int t = 0; t < n; ++t) {
            int v = (first + t) % n;
            if (t > 0 && (mask >> v & 1U))
                ++id;
            part[static_cast<std::size_t>(v + 1)] = id;
        }
        bool proper = std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
            return part[static_cast<std::size_t>(e.u)] == part[static_cast<std::size_t>(e.v)];
        });
        if (proper)
            best = std::min(best, std::popcount(mask));
    }
    return best;
}

} // namespace testing_support
