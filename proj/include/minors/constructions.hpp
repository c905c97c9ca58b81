#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minors/decomposition.hpp"
#include "minors/graph.hpp"
#include "minors/model.hpp"
#include "minors/patterns.hpp"
#include "minors/separation.hpp"

namespace minors {

enum class BoundFamily { wheel, double_wheel, pw2, yurt };

/// Treewidth threshold above which the family's pattern of order k is forced.
long long bound(BoundFamily family, int k);
BoundFamily bound_family_from_name(const std::string& name);

/// Internal threshold of the pathwidth-2 argument: tw >= 3k(k-2) - 1 forces
/// a subdivided 2xk grid.
long long xi_threshold(int k);

enum class RunDirection { increasing, decreasing };

struct MonotoneWitness {
    std::vector<int> indices;  // strictly increasing positions into the input
    RunDirection direction = RunDirection::increasing;
};

/// Guaranteed monotone run: an increasing subsequence of length k or a
/// decreasing one of length l. Requires distinct values; (l-1)(k-1)+1 of
/// them always suffice, shorter inputs succeed only when a run exists.
/// Deterministic: longest-run DP, earliest end wins.
MonotoneWitness es_extract(const std::vector<int>& seq, int k, int l);

struct WheelBuild {
    Graph host;        // complete binary tree + path + leaf matching
    Graph pattern;     // the wheel actually realized
    MinorModel model;
    int order = 0;         // rim length + 1
    int rim_length = 0;
    int order_promised = 0;  // 2^{h-2} + 1
    bool lca_is_root = false;  // rim bound doubles when false
};

/// Builds the tree-plus-matched-path host for height h and extracts a wheel
/// minor of order at least 2^{h-2} + 1. psi[i] is the path position (0-based)
/// matched to the i-th leaf of the tree, in id order.
WheelBuild wheel_from_tree_path(int h, const std::vector<int>& psi);

struct HStar {
    Graph graph;            // tree + path + one bridge edge
    std::vector<int> path;  // path ids in order
};

/// Tree joined with a fresh path of path_len vertices by a single bridge
/// from the given tree vertex to the path position bridge_pos.
HStar make_hstar(const Graph& tree, int path_len, int bridge_tree_vertex, int bridge_pos);

/// Grows each paired branch set along its linkage path (all vertices except
/// the far endpoint), keeping the model valid. pairing maps a pattern vertex
/// to the near endpoint of the linkage path its branch set absorbs.
MinorModel extend_left_model(const Graph& host, const SeparationCertificate& cert,
                             const std::vector<std::pair<int, int>>& pairing);

struct LambdaExtraction {
    LambdaInstance instance;  // the realized member over `tree`
    MinorModel model;         // of instance.flat in the host
    bool long_path_case = false;
    int core_size = 0;  // vertices of the contracted linkage tree
};

/// Runs the tree-union-path extraction: contract the linkage through the
/// B side into markers, span them by a tree, and depending on that tree's
/// shape emit a long path or a leaf fan as the new path of the instance.
/// The certificate's pattern must be make_hstar(tree, |V(tree)|, ...).
LambdaExtraction lambda_from_certificate(const Graph& host, const Graph& tree,
                                         const SeparationCertificate& cert);

struct DoubleWheelBuild {
    Graph pattern;  // the double wheel realized
    MinorModel model;   // in inst.flat
    int order = 0;
    int order_promised = 0;
};

/// From an instance over a complete binary tree of height h, extracts a
/// double wheel of order at least (2^{h/2} - 2)/(2h - 3).
DoubleWheelBuild double_wheel_from_lambda(const LambdaInstance& inst);

struct XiEmbedding {
    Graph host;     // the subdivided grid
    Graph padded;   // input plus any edges added to reach pathwidth 2
    MinorModel model;  // of the input graph in host
};

/// Embeds any graph of pathwidth <= 2 on n >= 3 vertices into xi(n-1),
/// via a compact width-2 path decomposition (computed when not supplied).
XiEmbedding embed_pw2_in_xi(const Graph& g, std::optional<PathDecomposition> pd = {});

struct XiFromPaths {
    Graph host;    // two paths joined by length-2 paths per the permutation
    Graph pattern;  // xi(k)
    MinorModel model;
    MonotoneWitness run;
};

/// Hosts per the double-path lemma: P and R on p_len vertices each, vertex i
/// of P joined to vertex perm[i] of R through a fresh middle vertex. A
/// monotone run of length k yields an xi(k) minor (decreasing runs walk R
/// backwards). Rejected when the permutation has no such run; p_len of
/// (k-1)^2 + 1 always suffices.
XiFromPaths xi_from_double_path(int k, int p_len, const std::vector<int>& perm);

struct YurtBuild {
    Graph pattern;  // yurt(k)
    MinorModel model;   // in inst.flat
    MonotoneWitness run;
};

/// From an instance over a comb, selects k teeth whose spine order agrees
/// with the path order of their matched vertices and contracts the rest.
YurtBuild yurt_from_lambda_comb(const LambdaInstance& inst, int k);

}  // namespace minors
