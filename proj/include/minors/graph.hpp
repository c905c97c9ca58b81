#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace minors {

/// Unordered edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Finite simple undirected graph. Vertex ids are arbitrary non-negative
/// integers (they survive deletions and contractions). Immutable: every
/// operation returns a new graph.
class Graph {
public:
    Graph() = default;

    /// Vertices 0..n-1. Duplicate edges collapse; loops and out-of-range ids are rejected.
    static Graph make(int n_vertices, const std::vector<Edge>& edge_list);

    /// Explicit vertex set (need not be contiguous).
    static Graph from_vertices(std::vector<int> vertices, const std::vector<Edge>& edge_list);

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Merge the endpoints of an existing edge; the smaller id survives.
    Graph contract_edge(int u, int v) const;

    /// Remove a degree-2 vertex and join its two neighbors (edge collapses
    /// with an existing one if the neighbors were already adjacent).
    Graph dissolve_vertex(int v) const;

    Graph delete_vertices(const std::vector<int>& vs) const;
    Graph delete_edges(const std::vector<Edge>& es) const;

    /// Induced subgraph on the given vertices.
    Graph induced(const std::vector<int>& vs) const;

    bool operator==(const Graph& o) const { return verts_ == o.verts_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void build_adjacency();

    std::vector<int> verts_;   // sorted
    std::vector<Edge> edges_;  // sorted, normalized
    std::unordered_map<int, std::vector<int>> adj_;
};

/// Convenience alias for the three-argument spec form.
inline Graph make_graph(int n_vertices, const std::vector<Edge>& edge_list) {
    return Graph::make(n_vertices, edge_list);
}

/// Simple path in a host graph: consecutive vertices must be adjacent.
/// A single vertex is the null path (length 0).
struct VertexPath {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    void validate(const Graph& host) const;
};

bool is_connected(const Graph& g);  // empty graph and K_1 count as connected
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_tree(const Graph& g);

struct TreeMetrics {
    std::vector<int> leaves;
    int diameter = 0;  // edge count
};

/// Leaves and diameter of a tree; rejects non-trees with the reason.
TreeMetrics tree_metrics(const Graph& t);

/// Least common ancestor of u and v in the tree rooted at `root`.
int lca(const Graph& t, int root, int u, int v);

}  // namespace minors
