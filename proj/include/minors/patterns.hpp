#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minors/graph.hpp"

namespace minors {

// Canonical vertex layouts (documented so tests and tools stay byte-stable):
//   wheel(r):        rim 0..r-1 (cycle), hub r.
//   double_wheel(r): rim 0..r-1, hubs r and r+1 (hubs not adjacent).
//   xi(r):           x_i = i, y_i = r+i, z_i = 2r+i.
//   yurt(k):         bottom x_i = i, top y_i = k+i, apex 2k.
//   comb(r):         spine p_i = i, tooth v_i = r+i.
//   complete_binary_tree(h): heap ids, root 0, children of i are 2i+1, 2i+2.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph grid_2xk(int k);  // bottom 0..k-1, top k..2k-1

Graph wheel(int r);          // r >= 3
Graph double_wheel(int r);   // r >= 3
Graph xi(int r);             // r >= 1
Graph yurt(int k);           // k >= 1
Graph comb(int r);           // r >= 1
Graph complete_binary_tree(int h);  // h >= 0

/// Member of the family built over a tree T: the tree, a fresh path of
/// |P| >= ceil(sqrt(|leaves(T)|)) vertices, an apex adjacent to all of P,
/// and |P| disjoint matching edges from P onto leaves of T.
struct LambdaInstance {
    Graph tree;
    std::vector<int> path;             // flat ids of the path, in order
    int apex = -1;                     // flat id
    std::vector<std::pair<int, int>> matching;  // (path vertex, tree leaf) pairs
    Graph flat;                        // the whole graph
};

/// Smallest t with t*t >= m.
int ceil_sqrt(long long m);

/// Build an instance over `tree` with a path of `path_len` vertices; the i-th
/// path vertex is matched to matched_leaves[i] (distinct leaves of the tree).
/// Path ids follow the tree's maximum id, apex comes last.
LambdaInstance lambda_build(const Graph& tree, int path_len, const std::vector<int>& matched_leaves);

struct LambdaCheck {
    bool member = false;
    std::string violation;             // empty when member
    std::optional<LambdaInstance> witness;
};

/// Decides whether h decomposes as tree + path + apex with exactly the
/// mandated edges (desk scale; tree isomorphism by canonical codes).
LambdaCheck is_in_lambda(const Graph& h, const Graph& tree);

}  // namespace minors
