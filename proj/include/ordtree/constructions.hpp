#pragma once

// Extremal constructions: ordered hosts avoiding the non-z-tree obstructions
// or a given z-tree, and the colored cg graphs used for walk analysis.

#include "ordtree/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ordtree {

/// All edges whose length is a power of two (1 included). n >= 2.
Graph pow2(int n);
long long pow2_edge_count(int n);

/// Recursive constructions on 2*stage vertices built from four intervals
/// I < I' < J < J' of size stage/2. stage must be a power of two.
Graph fh_q(int stage);
Graph fh_r(int stage);
/// f(1) = 1, f(2s) = 2 f(s) + s.
long long fh_edge_count(int stage);

/// E_a u E_b u E_c on [n]. Requires n >= a+b+c+1, a >= 1, b, c >= 0.
Graph gstar(int n, int a, int b, int c);
/// (k-1)n - C(k,2) with k = a+b+c.
long long gstar_edge_count(int n, int a, int b, int c);

/// Colored cg graph: union of matchings M_1..M_{kappa-1}, color j on M_j.
/// n = 2^kappa with kappa >= 3.
Graph f_n(int n);
long long f_n_edge_count(int n);

/// Complete bipartite cg graph between {1..n/2} and {n/2+1..n}; n even.
Graph f_n0(int n);

/// Every edge has an odd left end and an even right end.
bool has_parity_ends(const Graph& g);
/// Path v1 v2 v3 v4 with v2 < v4 < v1 < v3, if any (first in lexicographic order).
std::optional<std::array<int, 4>> find_heavy_path(const Graph& g);

struct ConstructParams {
    int n = 0;
    int a = 1;
    int b = 0;
    int c = 0;
};

/// Dispatch by name: pow2 | fh_q | fh_r | gstar | f_n | f_n0. n is always
/// the vertex count (fh_*: stage n/2).
Graph construct(const std::string& name, const ConstructParams& params);
/// Names accepted by construct().
const std::vector<std::string>& construction_names();

} // namespace ordtree
