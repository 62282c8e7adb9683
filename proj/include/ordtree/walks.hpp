#pragma once

// Fast and slow 4-edge walks in properly edge-colored bipartite graphs.

#include "ordtree/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ordtree {

enum class Side { A, B };
enum class WalkKind { fast, slow };

std::string_view to_string(Side side);
std::string_view to_string(WalkKind kind);
Side parse_side(std::string_view text);
WalkKind parse_walk_kind(std::string_view text);

/// Colored graph with sides A = odd labels, B = even labels. Construction
/// rejects uncolored input, edges inside a side and improper colorings.
class ColoredBipartite {
public:
    explicit ColoredBipartite(Graph g);

    const Graph& graph() const { return g_; }
    int colors() const { return d_; }
    static Side side_of(int v) { return v % 2 == 1 ? Side::A : Side::B; }

private:
    Graph g_;
    int d_ = 0;
};

struct Walk4 {
    WalkKind kind = WalkKind::fast;
    std::array<int, 5> vertices{};
    std::array<int, 4> colors{};
};

/// Checks adjacency, distinct consecutive edges and the color pattern of
/// `kind` (slow: also that the walk starts on `start`).
bool is_forbidden_walk(const ColoredBipartite& g, const Walk4& w, Side start = Side::B);

/// Some walk of the requested kind, or nullopt if none exists. `start` is only
/// used for slow walks.
std::optional<Walk4> find_forbidden_walk(const ColoredBipartite& g, WalkKind kind, Side start = Side::B);

/// ceil(log2(d) / (480 d) * |E|).
long long walk_free_bound(int d, std::size_t edges);

struct Extraction {
    Graph subgraph;
    long long bound = 0;
    std::size_t achieved = 0;
    bool exhaustive = false;
    std::uint64_t seed = 0;
};

/// Large subgraph without walks of the requested kind. Exact maximum for
/// |E| <= 20, otherwise the best greedy completion of each color class.
/// Deterministic in (g, kind, start, seed).
Extraction extract_walk_free(const ColoredBipartite& g, WalkKind kind, Side start = Side::B, std::uint64_t seed = 1);

} // namespace ordtree
