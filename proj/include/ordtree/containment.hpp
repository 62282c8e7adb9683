#pragma once

// Order-preserving (non-induced) pattern containment.

#include "ordtree/graph.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace ordtree {

/// map[v - 1] is the host vertex of pattern vertex v.
struct Embedding {
    Mode mode = Mode::linear;
    bool reflected = false;
    std::vector<int> map;

    int operator()(int pattern_vertex) const { return map[static_cast<std::size_t>(pattern_vertex - 1)]; }
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct SearchOptions {
    /// Cyclic mode only: also accept maps reversing the clockwise order.
    bool allow_reflection = false;
    /// Forced assignments (pattern vertex, host vertex).
    std::vector<std::pair<int, int>> pins;
};

/// Visitor returns false to stop the enumeration.
using EmbeddingVisitor = std::function<bool(const Embedding&)>;

/// Enumerates every embedding exactly once. Throws InputError on mode mismatch.
void for_each_embedding(const Graph& host, const Graph& pattern, const SearchOptions& options,
                        const EmbeddingVisitor& visit);

/// Same, against a mutable host given as a bit matrix over [n] (row v-1 is vertex v).
void for_each_embedding(Mode mode, const AdjacencyMatrix& host, const Graph& pattern,
                        const SearchOptions& options, const EmbeddingVisitor& visit);

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern, const SearchOptions& options = {});
std::vector<Embedding> find_all_embeddings(const Graph& host, const Graph& pattern,
                                           const SearchOptions& options = {});
bool contains(const Graph& host, const Graph& pattern, const SearchOptions& options = {});

/// First embedding whose image uses host edge `e` (for incremental searches).
std::optional<Embedding> find_embedding_through(Mode mode, const AdjacencyMatrix& host, const Graph& pattern,
                                                Edge e);

/// Independent check of order preservation, injectivity and edge preservation.
bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding);

} // namespace ordtree
