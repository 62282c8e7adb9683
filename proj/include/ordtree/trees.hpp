#pragma once

// Recognition and classification of ordered and cg trees.

#include "ordtree/containment.hpp"
#include "ordtree/graph.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ordtree {

/// Input outside an operation's domain (not a tree, chromatic number != 2).
class NotApplicable : public InputError {
public:
    using InputError::InputError;
};

/// Hub edge ij, increasing core T containing it as longest edge, the star
/// S_j = {hj : h < i} and the star S_i = {ik : k > j}.
struct ZDecomposition {
    Edge hub;
    std::vector<Edge> core;
    std::vector<Edge> s_j;
    std::vector<Edge> s_i;
    bool is_increasing = false;

    int a() const { return static_cast<int>(core.size()); }
    int b() const { return static_cast<int>(s_j.size()); }
    int c() const { return static_cast<int>(s_i.size()); }
    int k() const { return a() + b() + c(); }
};

/// Edges sorted by length form a chain, each strictly longer, containing
/// the previous one and sharing an endpoint with it.
bool is_increasing_tree(std::vector<Edge> edges);

/// Decomposition induced by a hub, or nullopt if the core is not an
/// increasing tree with the hub as its longest edge.
std::optional<ZDecomposition> decompose_at(const Graph& tree, Edge hub);

/// Re-checks every structural invariant of `d` against `tree`.
bool is_valid_decomposition(const Graph& tree, const ZDecomposition& d);

struct ZOutcome {
    std::optional<ZDecomposition> decomposition;
    std::string reason;

    explicit operator bool() const { return decomposition.has_value(); }
};

/// Hubs proposed by longest strictly length-increasing paths (second-to-last
/// edge, or the only edge of a one-edge path). Possibly several.
std::vector<Edge> longest_increasing_path_hubs(const Graph& tree);

/// Canonical decomposition of an ordered tree with chi_i = 2. Throws
/// NotApplicable outside that domain.
ZOutcome z_decompose(const Graph& tree);

/// Rotation by r followed by reading the circle backwards (n < n-1 < ... < 1).
Graph cg_linearize(const Graph& tree, int r);
/// Inverse of cg_linearize on vertex labels.
int cg_original_label(int n, int r, int linear_label);

struct CgZOutcome {
    int rotation = -1;
    /// In the labels of cg_linearize(tree, rotation).
    std::optional<ZDecomposition> decomposition;
    std::string reason;

    explicit operator bool() const { return decomposition.has_value(); }
};

/// Smallest rotation whose linearization is a z-tree. Throws NotApplicable
/// unless the input is a tree with chi_c = 2.
CgZOutcome cg_z_decompose(const Graph& tree);

enum class Provenance { pinned, derived };

struct CatalogEntry {
    Graph pattern;
    Provenance provenance = Provenance::derived;
};

struct ObstructionCatalog {
    std::vector<CatalogEntry> entries;

    /// First entry embedding in `tree`, with its embedding.
    std::optional<std::pair<std::size_t, Embedding>> first_match(const Graph& tree) const;
};

/// The path {13,14,24} on [4].
Graph pattern_p();

/// Minimal non-z-trees with chi_i = 2 among ordered trees with at most
/// max_edges edges.
ObstructionCatalog derive_obstructions(int max_edges);
/// derive_obstructions(5), computed once.
const ObstructionCatalog& default_catalog();

/// 4-edge path of a cg tree with two crossing edges; lexicographically first
/// vertex sequence.
std::optional<std::array<int, 5>> detect_crossing_path4(const Graph& tree);

struct PFamilyWitness {
    int kind = 0; // shared centre endpoints
    std::array<int, 4> first{};
    std::array<int, 4> second{};
};

std::optional<PFamilyWitness> detect_P_family(const Graph& tree);
/// Checks the defining conditions for two explicit 3-edge paths.
bool is_P_family_pair(int n, const std::array<int, 4>& first, const std::array<int, 4>& second);

/// x lies on the open clockwise arc from `from` to `to`.
bool on_open_arc(int n, int from, int to, int x);
/// x and y lie strictly on the same side of chord e.
bool same_side(int n, Edge e, int x, int y);

/// No crossing and chi_c = 2. Throws InputError if the tree is not a path.
bool is_zigzag(const Graph& path);
/// Both endpoints of e have a further neighbour on the same side of e.
bool is_heavy_edge(const Graph& tree, Edge e);

enum class VerdictKind { linear, nonlinear, not_applicable };
enum class Growth { linear, n_log_n, n_log_log_n, quadratic, none };

std::string_view to_string(VerdictKind kind);
std::string_view to_string(Growth growth);

struct Verdict {
    VerdictKind kind = VerdictKind::not_applicable;
    Mode mode = Mode::linear;
    int edges = 0;
    Growth growth = Growth::none;
    int chromatic = 0;
    std::string reason;

    // Linear: the decomposition (cg: in the labels of the linearization).
    std::optional<ZDecomposition> decomposition;
    int rotation = -1;

    // NonLinear, forbidden-pattern witnesses (one of them).
    std::optional<Graph> witness_pattern;
    std::optional<Embedding> witness_embedding;
    std::optional<std::array<int, 5>> crossing_path;
    std::optional<PFamilyWitness> p_family;

    /// Ordered linear verdicts: (k-1)n - C(k,2). Cg linear verdicts: the
    /// upper bound 2(k-1)n.
    long long formula(long long n) const;
};

/// Throws std::logic_error if the decomposition and forbidden-pattern routes
/// disagree.
Verdict classify_tree(const Graph& tree);

enum class TreeFilter { all, chi2 };

/// Every labelled tree on [k+1] (Pruefer order), 1 <= k <= 6.
void for_each_tree(int k, Mode mode, TreeFilter filter, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_trees(int k, Mode mode, TreeFilter filter);

} // namespace ordtree
