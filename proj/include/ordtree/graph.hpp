#pragma once

// Ordered and convex-geometric graphs on the vertex set [n].
//
// Both kinds share one representation; `Mode` only changes which order the
// predicates and transforms respect. Convex position is never modelled
// geometrically: two chords cross iff their endpoints interleave.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordtree {

enum class Mode { linear, cyclic };

std::string_view to_string(Mode mode);
/// Accepts "ordered"/"linear" and "cg"/"cyclic".
Mode parse_mode(std::string_view text);

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered pair stored as (min, max).
struct Edge {
    int u = 0;
    int v = 0;

    constexpr int length() const { return v - u; }
    constexpr bool touches(int x) const { return x == u || x == v; }
    constexpr int other(int x) const { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

/// Normalizing constructor; rejects loops.
Edge make_edge(int a, int b);

/// Endpoints interleave. In the cyclic order this is exactly chord
/// separation, so one predicate serves both modes. Shared endpoints never
/// cross.
constexpr bool crosses(Edge e, Edge f)
{
    return (e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v);
}

/// Range-checked variant: throws InputError if an endpoint lies outside [1, n].
bool crosses(Edge e, Edge f, Mode mode, int n);

/// Dense bit-matrix adjacency, 0-based rows, sized for hosts of a few hundred vertices.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int n);

    int size() const { return n_; }
    int words() const { return words_; }

    bool test(int a, int b) const
    {
        return (rows_[static_cast<std::size_t>(a * words_ + (b >> 6))] >> (b & 63)) & 1U;
    }
    void set(int a, int b);
    void reset(int a, int b);
    int degree(int a) const;
    std::span<const std::uint64_t> row(int a) const
    {
        return {rows_.data() + static_cast<std::size_t>(a * words_), static_cast<std::size_t>(words_)};
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Immutable graph on [n]; edges sorted, colors (if any) parallel to edges().
class Graph {
public:
    Graph() = default;
    Graph(Mode mode, int n, std::vector<Edge> edges, std::vector<int> colors = {});

    Mode mode() const { return mode_; }
    int n() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& colors() const { return colors_; }
    bool colored() const { return !colors_.empty(); }

    bool has_edge(int a, int b) const;
    /// Index into edges(), or -1.
    int edge_index(Edge e) const;
    int color_of(Edge e) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    /// Sorted neighbour labels of v (1-based).
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }

    bool is_connected() const;
    bool is_tree() const;
    bool is_path() const;

    AdjacencyMatrix adjacency_matrix() const;

    /// Same edges, other interpretation of the vertex order.
    Graph with_mode(Mode mode) const;
    /// Subgraph keeping the listed edge indices (colors follow).
    Graph edge_subgraph(std::span<const int> indices) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.mode_ == b.mode_ && a.n_ == b.n_ && a.edges_ == b.edges_ && a.colors_ == b.colors_;
    }

private:
    Mode mode_ = Mode::linear;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> adjacency_;
};

Graph make_ordered(int n, std::initializer_list<std::pair<int, int>> edges);
Graph make_cg(int n, std::initializer_list<std::pair<int, int>> edges);
std::string to_string(const Graph& g);

/// Consecutive parts A_1 < ... < A_k given by their first vertices. In cyclic
/// mode the last part wraps around to starts.front().
struct IntervalSplit {
    Mode mode = Mode::linear;
    int n = 0;
    std::vector<int> starts;

    int parts() const { return static_cast<int>(starts.size()); }
    /// 0-based index of the part containing v.
    int part_of(int v) const;
    /// No edge of g has both ends in one part.
    bool is_proper_for(const Graph& g) const;
};

struct Chromatic {
    int value = 0;
    IntervalSplit split;
};

/// Interval chromatic number (linear order, regardless of g.mode()).
Chromatic chi_interval(const Graph& g);
/// Cyclic chromatic number (arcs of the circle, regardless of g.mode()).
Chromatic chi_cyclic(const Graph& g);
/// chi_interval or chi_cyclic according to g.mode().
Chromatic chromatic_number(const Graph& g);

/// i -> n + 1 - i. Allowed in both modes.
Graph mirror(const Graph& g);
/// i -> i + r (mod n). Cyclic graphs only.
Graph rotate(const Graph& g, int r);
/// Reversal of the circle; cyclic graphs only.
Graph reflect(const Graph& g);
/// Arbitrary relabelling; image[v - 1] is the new label of v.
Graph relabel(const Graph& g, std::span<const int> image, Mode mode);

} // namespace ordtree
