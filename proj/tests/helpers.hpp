#pragma once

#include <vector>

#include "minors/graph.hpp"

namespace testutil {

// All connected graphs on exactly n vertices (n <= 7), one representative
// per isomorphism class, vertex ids 0..n-1.
const std::vector<minors::Graph>& connected_census(int n);

// Longest monotone subsequence by exhaustive subset enumeration (n <= 20).
int brute_longest_monotone(const std::vector<int>& seq, bool increasing);

// Independent O(n^2) oracle for longer sequences.
int dp_longest_monotone(const std::vector<int>& seq, bool increasing);

}  // namespace testutil
