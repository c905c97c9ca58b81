#include "minors/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace minors {

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::make(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::make(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::make(n, edges);
}

Graph grid_2xk(int k) {
    if (k < 1) throw std::invalid_argument("grid needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) {
        edges.emplace_back(i, i + 1);
        edges.emplace_back(k + i, k + i + 1);
    }
    for (int i = 0; i < k; ++i) edges.emplace_back(i, k + i);
    return Graph::make(2 * k, edges);
}

Graph wheel(int r) {
    if (r < 3) throw std::invalid_argument("wheel order must satisfy r > 2, got " + std::to_string(r));
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) {
        edges.emplace_back(i, (i + 1) % r);
        edges.emplace_back(i, r);
    }
    return Graph::make(r + 1, edges);
}

Graph double_wheel(int r) {
    if (r < 3) throw std::invalid_argument("double wheel order must satisfy r > 2, got " + std::to_string(r));
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) {
        edges.emplace_back(i, (i + 1) % r);
        edges.emplace_back(i, r);
        edges.emplace_back(i, r + 1);
    }
    return Graph::make(r + 2, edges);
}

Graph xi(int r) {
    if (r < 1) throw std::invalid_argument("xi needs r >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < r; ++i) {
        edges.emplace_back(i, i + 1);              // x row
        edges.emplace_back(2 * r + i, 2 * r + i + 1);  // z row
    }
    for (int i = 0; i < r; ++i) {
        edges.emplace_back(i, r + i);          // x_i - y_i
        edges.emplace_back(r + i, 2 * r + i);  // y_i - z_i
    }
    return Graph::make(3 * r, edges);
}

Graph yurt(int k) {
    if (k < 1) throw std::invalid_argument("yurt needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) {
        edges.emplace_back(i, i + 1);          // bottom path
        edges.emplace_back(k + i, k + i + 1);  // top path
    }
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, k + i);   // vertical
        edges.emplace_back(k + i, 2 * k);  // apex over the top row
    }
    return Graph::make(2 * k + 1, edges);
}

Graph comb(int r) {
    if (r < 1) throw std::invalid_argument("comb needs r >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < r; ++i) edges.emplace_back(i, r + i);
    return Graph::make(2 * r, edges);
}

Graph complete_binary_tree(int h) {
    if (h < 0) throw std::invalid_argument("height must be >= 0");
    int n = (1 << (h + 1)) - 1;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
    return Graph::make(n, edges);
}

int ceil_sqrt(long long m) {
    if (m < 0) throw std::invalid_argument("negative argument");
    long long t = std::llround(std::sqrt(static_cast<double>(m)));
    while (t * t < m) ++t;
    while (t > 0 && (t - 1) * (t - 1) >= m) --t;
    return static_cast<int>(t);
}

LambdaInstance lambda_build(const Graph& tree, int path_len, const std::vector<int>& matched_leaves) {
    auto tm = tree_metrics(tree);  // rejects non-trees
    int need = ceil_sqrt(static_cast<long long>(tm.leaves.size()));
    if (path_len < need)
        throw std::invalid_argument("path too short: need |V(P)| >= ceil(sqrt(|leaves|)) = " +
                                    std::to_string(need) + ", got " + std::to_string(path_len));
    if (static_cast<int>(matched_leaves.size()) != path_len)
        throw std::invalid_argument("matching must pair every path vertex with a leaf");
    std::unordered_set<int> leaf_set(tm.leaves.begin(), tm.leaves.end()), used;
    for (int l : matched_leaves) {
        if (!leaf_set.count(l))
            throw std::invalid_argument("matched vertex " + std::to_string(l) + " is not a leaf of the tree");
        if (!used.insert(l).second)
            throw std::invalid_argument("matching is not injective: leaf " + std::to_string(l) + " used twice");
    }

    LambdaInstance inst;
    inst.tree = tree;
    int base = tree.vertices().back() + 1;
    std::vector<int> verts = tree.vertices();
    std::vector<Edge> edges = tree.edges();
    for (int i = 0; i < path_len; ++i) {
        inst.path.push_back(base + i);
        verts.push_back(base + i);
        if (i > 0) edges.emplace_back(base + i - 1, base + i);
    }
    inst.apex = base + path_len;
    verts.push_back(inst.apex);
    for (int p : inst.path) edges.emplace_back(inst.apex, p);
    for (int i = 0; i < path_len; ++i) {
        inst.matching.emplace_back(inst.path[i], matched_leaves[i]);
        edges.emplace_back(inst.path[i], matched_leaves[i]);
    }
    inst.flat = Graph::from_vertices(std::move(verts), edges);
    return inst;
}

namespace {

// AHU canonical code of a rooted tree.
std::string rooted_code(const Graph& t, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(v))
        if (w != parent) kids.push_back(rooted_code(t, w, v));
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (auto& k : kids) code += k;
    code += ")";
    return code;
}

std::vector<int> tree_centers(const Graph& t) {
    std::unordered_map<int, int> deg;
    std::vector<int> layer;
    for (int v : t.vertices()) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = t.num_vertices();
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    return layer;
}

std::string free_tree_code(const Graph& t) {
    std::string best;
    for (int c : tree_centers(t)) {
        auto code = rooted_code(t, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

// Orders the vertices of a graph known to be a path; nullopt if not a path.
std::optional<std::vector<int>> order_as_path(const Graph& g) {
    if (g.num_vertices() == 0) return std::nullopt;
    if (g.num_edges() + 1 != static_cast<std::size_t>(g.num_vertices())) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    int start = -1;
    for (int v : g.vertices()) {
        if (g.degree(v) > 2) return std::nullopt;
        if (g.degree(v) <= 1) start = v;
    }
    if (start < 0) return std::nullopt;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < g.num_vertices()) {
        int nxt = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) nxt = w;
        if (nxt < 0) return std::nullopt;
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return order;
}

}  // namespace

LambdaCheck is_in_lambda(const Graph& h, const Graph& tree) {
    LambdaCheck result;
    if (!is_tree(tree)) {
        result.violation = "reference tree is not a tree";
        return result;
    }
    auto tm = tree_metrics(tree);
    std::string tree_code = free_tree_code(tree);
    int min_path = ceil_sqrt(static_cast<long long>(tm.leaves.size()));
    std::string last_reason = "no vertex qualifies as the apex";

    for (int apex : h.vertices()) {
        std::vector<int> pverts = h.neighbors(apex);
        if (static_cast<int>(pverts.size()) < min_path) {
            continue;
        }
        std::unordered_set<int> pset(pverts.begin(), pverts.end());
        std::vector<int> tverts;
        for (int v : h.vertices())
            if (v != apex && !pset.count(v)) tverts.push_back(v);
        if (static_cast<int>(tverts.size()) != tree.num_vertices()) continue;

        auto path_order = order_as_path(h.induced(pverts));
        if (!path_order) {
            last_reason = "apex neighborhood does not induce a path";
            continue;
        }
        Graph tpart = h.induced(tverts);
        if (!is_tree(tpart) || free_tree_code(tpart) != tree_code) {
            last_reason = "remainder is not isomorphic to the reference tree";
            continue;
        }
        auto tpm = tree_metrics(tpart);
        std::unordered_set<int> leaf_set(tpm.leaves.begin(), tpm.leaves.end());

        // Cross edges must be a perfect matching from P into the leaves;
        // anything else violates condition (iii).
        std::unordered_map<int, int> matched;  // path vertex -> leaf
        std::unordered_set<int> used_leaves;
        bool ok = true;
        for (const auto& [u, v] : h.edges()) {
            bool up = pset.count(u), vp = pset.count(v);
            if (u == apex || v == apex) {
                int other = (u == apex) ? v : u;
                if (!pset.count(other)) {
                    ok = false;
                    last_reason = "apex adjacent outside the path (condition (iii))";
                    break;
                }
                continue;
            }
            if (up == vp) continue;  // path-internal or tree-internal edge
            int p = up ? u : v, t = up ? v : u;
            if (!leaf_set.count(t) || matched.count(p) || !used_leaves.insert(t).second) {
                ok = false;
                last_reason = "extra edge between path and tree (condition (iii))";
                break;
            }
            matched[p] = t;
        }
        if (!ok) continue;
        if (matched.size() != pverts.size()) {
            last_reason = "matching does not saturate the path (condition (ii))";
            continue;
        }

        result.member = true;
        LambdaInstance inst;
        inst.tree = tpart;
        inst.path = *path_order;
        inst.apex = apex;
        for (int p : inst.path) inst.matching.emplace_back(p, matched.at(p));
        inst.flat = h;
        result.witness = std::move(inst);
        return result;
    }
    result.violation = last_reason;
    return result;
}

}  // namespace minors
