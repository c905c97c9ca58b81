#pragma once

#include <set>
#include <string>
#include <vector>

#include "minors/graph.hpp"

namespace minors {

using Bag = std::set<int>;

struct TreeDecomposition {
    Graph shape;                  // must be a tree
    std::vector<std::pair<int, Bag>> bags;  // shape vertex -> bag
};

struct PathDecomposition {
    std::vector<Bag> bags;
};

enum class NodeKind { introduce, forget };

struct NiceAnnotation {
    std::vector<NodeKind> kinds;  // aligned with bags; kinds[0] is always introduce
};

/// Checks coverage, edge coverage and coherence; returns one message per
/// violated condition with a witness.
std::vector<std::string> verify_decomposition(const Graph& g, const TreeDecomposition& d);
std::vector<std::string> verify_decomposition(const Graph& g, const PathDecomposition& d);

/// max bag size - 1; rejects invalid decompositions.
int width(const Graph& g, const TreeDecomposition& d);
int width(const Graph& g, const PathDecomposition& d);

/// Width of a bag list without validity checking.
int raw_width(const PathDecomposition& d);

struct NicePathDecomposition {
    PathDecomposition decomposition;
    NiceAnnotation annotation;
};

/// Normalizes a valid path decomposition into a nice one of the same width
/// with exactly n introduce and n forget nodes (2n bags, last bag empty),
/// then pushes introduces as early as the width allows so the profile is:
/// w+1 leading introduces, alternation, w+1 trailing forgets.
NicePathDecomposition make_nice(const Graph& g, const PathDecomposition& p);

/// Remark-style exchange: bag i (1-based) must be a forget step and bag i+1
/// an introduce step; replaces X_i by X_{i-1} u X_{i+1} and swaps the kinds.
PathDecomposition swap_forget_introduce(const Graph& g, const PathDecomposition& p, int i);

struct CompactifyOptions {
    bool assume_optimal = false;  // skip the exact-pathwidth optimality check
};

/// Lemma-style compact form: every bag has size pw+1, adjacent bags exchange
/// exactly one vertex, |V| - pw bags. Input must be optimal.
PathDecomposition compactify(const Graph& g, const PathDecomposition& p, CompactifyOptions opts = {});

std::string decomposition_to_json(const PathDecomposition& d);
PathDecomposition path_decomposition_from_json(const std::string& text);

}  // namespace minors
