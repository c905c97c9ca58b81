#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minors/graph.hpp"

namespace minors {

enum class LinkedOutcome { linked, not_linked, unknown };

struct LinkedOptions {
    int max_set_size = 8;    // all-pairs enumeration is C(2|s|, |s|) flow runs
    long long budget_ms = 0; // 0 = none
    long long sample = 0;    // if > 0, test this many random pairs instead of all
    unsigned seed = 0;
};

struct LinkednessResult {
    LinkedOutcome outcome = LinkedOutcome::unknown;
    // first equal-size pair (X1, X2) with no valid linkage, if any
    std::optional<std::pair<std::vector<int>, std::vector<int>>> failing;
};

/// Whether |X1| vertex-disjoint paths join X1 to X2 such that every path has
/// length != 1 (null paths allowed), and only its endpoints lie in s.
bool has_disjoint_linkage(const Graph& g, const std::vector<int>& s, const std::vector<int>& x1,
                          const std::vector<int>& x2);

/// Checks the linkage condition for every pair of equal-size subsets of s
/// (sampled pairs when opts.sample is set).
LinkednessResult is_linked(const Graph& g, const std::vector<int>& s, LinkedOptions opts = {});

}  // namespace minors
