#pragma once

#include "minors/decomposition.hpp"
#include "minors/graph.hpp"

namespace minors {

struct TreewidthResult {
    int width = -1;
    TreeDecomposition witness;
};

struct PathwidthResult {
    int width = -1;
    PathDecomposition witness;
};

/// Exact treewidth by dynamic programming over elimination prefixes; the
/// returned witness always passes verify_decomposition at that width.
/// Rejects hosts above max_vertices (subset DP is 2^n).
TreewidthResult exact_treewidth(const Graph& g, int max_vertices = 22);

/// Exact pathwidth via vertex separation; witness included.
PathwidthResult exact_pathwidth(const Graph& g, int max_vertices = 22);

/// Value-only fast paths (no witness reconstruction).
int exact_treewidth_value(const Graph& g, int max_vertices = 22);
int exact_pathwidth_value(const Graph& g, int max_vertices = 22);

}  // namespace minors
