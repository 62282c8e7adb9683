#pragma once

// Exact extremal numbers by branch-and-bound, a naive oracle, and the
// constructive dense embeddings behind the linear upper bounds.

#include "ordtree/containment.hpp"
#include "ordtree/graph.hpp"
#include "ordtree/trees.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace ordtree {

/// Explicit refusal of a query above the exact-search budget.
class SolverRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExtremalResult {
    int n = 0;
    Mode mode = Mode::linear;
    Graph pattern;
    long long value = 0;
    Graph witness;
    std::uint64_t nodes = 0;
    double seconds = 0;
    bool naive = false;
};

inline constexpr int kSolverMaxN = 8;
inline constexpr int kNaiveMaxN = 7;

/// Maximum edge count of an n-vertex graph (mode of the pattern) without a
/// copy of `pattern`. Refuses n > kSolverMaxN.
ExtremalResult extremal_number(int n, const Graph& pattern);
/// Same value by scanning all 2^C(n,2) graphs. Refuses n > kNaiveMaxN.
ExtremalResult extremal_number_naive(int n, const Graph& pattern);

/// Edge count above which embed_dense is guaranteed to succeed:
/// (k-1)n - C(k,2) for ordered hosts, 2(k-1)n for cg hosts.
long long dense_threshold(Mode mode, int n, int k);

/// Ordered host, decomposition of an ordered z-tree on [pattern_n].
std::optional<Embedding> embed_dense(const Graph& host, const ZDecomposition& z, int pattern_n);
/// Decomposes `tree` (z_decompose or cg_z_decompose by mode) and embeds it.
/// Throws InputError on mode mismatch, NotApplicable if `tree` is not a
/// (cg) z-tree. Returned embeddings are validated.
std::optional<Embedding> embed_dense(const Graph& host, const Graph& tree);

} // namespace ordtree
