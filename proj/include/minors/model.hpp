#pragma once

#include <map>
#include <string>
#include <vector>

#include "minors/graph.hpp"

namespace minors {

/// Branch sets keyed by pattern vertex. A valid model has pairwise disjoint,
/// nonempty, connected branch sets realizing every pattern edge.
struct MinorModel {
    std::map<int, std::vector<int>> branch_sets;

    static MinorModel identity(const Graph& g);
};

/// Checks all three model invariants; one message per violation class, with
/// the first witness found.
std::vector<std::string> verify_model(const Graph& host, const Graph& pattern, const MinorModel& m);

std::string model_to_json(const MinorModel& m);
MinorModel model_from_json(const std::string& text);

}  // namespace minors
