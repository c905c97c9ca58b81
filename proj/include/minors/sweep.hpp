#pragma once

#include <random>
#include <string>
#include <vector>

#include "minors/constructions.hpp"
#include "minors/graph.hpp"
#include "minors/minor_search.hpp"

namespace minors {

/// Batch run of one construction over a parameter range. The primary
/// parameter is h for the tree-based families, k for the grid-based ones and
/// the sequence length for es. Each parameter point is repeated `repeats`
/// times with fresh seeded randomness (repeats = 0 means exhaustive where
/// that is feasible, currently only for es).
struct SweepSpec {
    std::string family;  // wheel | double_wheel | pw2 | xi | yurt | es
    int param_min = 0;
    int param_max = 0;
    int repeats = 1;
    int k = 0;               // es only: run length target (0 = largest guaranteed)
    unsigned seed = 0;
    long long budget_ms = 0;  // per row; 0 = unlimited
    bool timings = false;     // include wall_ms in reports (breaks byte determinism)
};

struct SweepRow {
    std::string params;   // "h=3;rep=0" style
    std::string outcome;  // verified | violated | unknown
    int order_achieved = 0;
    int order_promised = 0;
    long long wall_ms = 0;
    std::string witness;  // first verifier message on violated rows
};

struct SweepReport {
    std::vector<SweepRow> rows;
    bool any_violation() const;
};

/// One row per parameter point and repeat, in parameter order. Deterministic
/// given the seed as long as no budget is set. Malformed specs throw
/// std::invalid_argument.
SweepReport run_sweep(const SweepSpec& spec);

std::string sweep_to_csv(const SweepReport& report, bool timings = false);
std::string sweep_to_json(const SweepReport& report, bool timings = false);

struct CrossCheckReport {
    std::string family;
    int k = 0;
    int treewidth = -1;
    long long bound_value = 0;
    SearchOutcome minor = SearchOutcome::unknown;
    bool vacuous = true;     // treewidth below the bound
    bool applicable = true;  // bound at least tw(pattern); false at degenerate small k
    bool consistent = true;  // never tw >= bound with the minor certified absent
};

/// Tests the excluded-minor implication on one host: computes the exact
/// treewidth, the family bound and minor containment of the family's order-k
/// pattern (wheel, double wheel, C_k for the pathwidth-2 family, yurt).
CrossCheckReport cross_check(BoundFamily family, int k, const Graph& host, long long budget_ms = 0);

/// Uniform random tree on vertices 0..n-1 (Pruefer decode).
Graph random_tree(int n, std::mt19937& rng);

/// Random connected graph of pathwidth at most 2 on 0..n-1 (rejection
/// sampling over trees plus extra edges; falls back to a path).
Graph random_pw2_graph(int n, std::mt19937& rng);

}  // namespace minors
