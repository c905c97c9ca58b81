#pragma once

#include <optional>

#include "minors/graph.hpp"
#include "minors/model.hpp"

namespace minors {

enum class SearchOutcome { found, absent, unknown };

struct MinorSearchOptions {
    long long max_nodes = 20'000'000;  // search-tree nodes before giving up
    long long budget_ms = 0;           // wall-clock deadline, 0 = none
};

struct MinorSearchResult {
    SearchOutcome outcome = SearchOutcome::unknown;
    std::optional<MinorModel> model;  // present iff found; always passes verify_model
};

/// Exhaustive branch-set search for a minor model of `pattern` in `host`
/// (hosts up to 64 vertices). Absent means the search space was exhausted;
/// budget exhaustion yields unknown, never a false negative.
MinorSearchResult is_minor(const Graph& pattern, const Graph& host, MinorSearchOptions opts = {});

}  // namespace minors
