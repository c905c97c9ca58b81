#include "minors/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace minors {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

void Graph::build_adjacency() {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.clear();
    adj_.reserve(verts_.size());
    for (int v : verts_) adj_[v];
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::make(int n_vertices, const std::vector<Edge>& edge_list) {
    if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
    std::vector<int> vs(n_vertices);
    std::iota(vs.begin(), vs.end(), 0);
    Graph g;
    g.verts_ = std::move(vs);
    g.edges_.reserve(edge_list.size());
    for (const auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("loop edge " + edge_str(u, v));
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
            throw std::invalid_argument("edge " + edge_str(u, v) + " out of range [0," +
                                        std::to_string(n_vertices) + ")");
        g.edges_.push_back(make_edge(u, v));
    }
    g.build_adjacency();
    return g;
}

Graph Graph::from_vertices(std::vector<int> vertices, const std::vector<Edge>& edge_list) {
    Graph g;
    g.verts_ = std::move(vertices);
    std::sort(g.verts_.begin(), g.verts_.end());
    g.verts_.erase(std::unique(g.verts_.begin(), g.verts_.end()), g.verts_.end());
    std::unordered_set<int> vset(g.verts_.begin(), g.verts_.end());
    g.edges_.reserve(edge_list.size());
    for (const auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("loop edge " + edge_str(u, v));
        if (!vset.count(u) || !vset.count(v))
            throw std::invalid_argument("edge " + edge_str(u, v) + " references unknown vertex");
        g.edges_.push_back(make_edge(u, v));
    }
    g.build_adjacency();
    return g;
}

bool Graph::has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

Graph Graph::contract_edge(int u, int v) const {
    if (!has_edge(u, v))
        throw std::invalid_argument("cannot contract absent edge " + edge_str(u, v));
    int keep = std::min(u, v), drop = std::max(u, v);
    Graph g;
    g.verts_.reserve(verts_.size() - 1);
    for (int w : verts_)
        if (w != drop) g.verts_.push_back(w);
    g.edges_.reserve(edges_.size());
    for (auto [a, b] : edges_) {
        if (a == drop) a = keep;
        if (b == drop) b = keep;
        if (a == b) continue;
        g.edges_.push_back(make_edge(a, b));
    }
    g.build_adjacency();
    return g;
}

Graph Graph::dissolve_vertex(int v) const {
    const auto& nb = neighbors(v);
    if (nb.size() != 2)
        throw std::invalid_argument("dissolve requires degree 2, vertex " + std::to_string(v) +
                                    " has degree " + std::to_string(nb.size()));
    int a = nb[0], b = nb[1];
    Graph g;
    g.verts_.reserve(verts_.size() - 1);
    for (int w : verts_)
        if (w != v) g.verts_.push_back(w);
    for (const auto& e : edges_)
        if (e.first != v && e.second != v) g.edges_.push_back(e);
    g.edges_.push_back(make_edge(a, b));
    g.build_adjacency();
    return g;
}

Graph Graph::delete_vertices(const std::vector<int>& vs) const {
    std::unordered_set<int> del;
    for (int v : vs) {
        if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        del.insert(v);
    }
    Graph g;
    for (int w : verts_)
        if (!del.count(w)) g.verts_.push_back(w);
    for (const auto& e : edges_)
        if (!del.count(e.first) && !del.count(e.second)) g.edges_.push_back(e);
    g.build_adjacency();
    return g;
}

Graph Graph::delete_edges(const std::vector<Edge>& es) const {
    std::unordered_set<std::int64_t> del;
    for (const auto& [u, v] : es) {
        if (!has_edge(u, v)) throw std::invalid_argument("unknown edge " + edge_str(u, v));
        auto [a, b] = make_edge(u, v);
        del.insert((static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b));
    }
    Graph g;
    g.verts_ = verts_;
    for (const auto& [a, b] : edges_)
        if (!del.count((static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b)))
            g.edges_.emplace_back(a, b);
    g.build_adjacency();
    return g;
}

Graph Graph::induced(const std::vector<int>& vs) const {
    std::unordered_set<int> keep;
    for (int v : vs) {
        if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        keep.insert(v);
    }
    Graph g;
    g.verts_.assign(keep.begin(), keep.end());
    for (const auto& e : edges_)
        if (keep.count(e.first) && keep.count(e.second)) g.edges_.push_back(e);
    g.build_adjacency();
    return g;
}

void VertexPath::validate(const Graph& host) const {
    if (vertices.empty()) throw std::invalid_argument("path must have at least one vertex");
    std::unordered_set<int> seen;
    for (int v : vertices) {
        if (!host.has_vertex(v)) throw std::invalid_argument("path vertex " + std::to_string(v) + " not in host");
        if (!seen.insert(v).second)
            throw std::invalid_argument("path repeats vertex " + std::to_string(v));
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!host.has_edge(vertices[i], vertices[i + 1]))
            throw std::invalid_argument("path step (" + std::to_string(vertices[i]) + "," +
                                        std::to_string(vertices[i + 1]) + ") is not a host edge");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::unordered_set<int> seen;
    for (int s : g.vertices()) {
        if (seen.count(s)) continue;
        std::vector<int> comp;
        std::deque<int> queue{s};
        seen.insert(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (seen.insert(w).second) queue.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    return g.num_edges() + 1 == static_cast<std::size_t>(g.num_vertices()) && is_connected(g);
}

namespace {

// BFS distances; returns the farthest vertex and its distance.
std::pair<int, int> farthest(const Graph& g, int from) {
    std::unordered_map<int, int> dist{{from, 0}};
    std::deque<int> queue{from};
    int best = from, bestd = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist.count(w)) continue;
            dist[w] = dist[v] + 1;
            if (dist[w] > bestd) {
                bestd = dist[w];
                best = w;
            }
            queue.push_back(w);
        }
    }
    return {best, bestd};
}

}  // namespace

TreeMetrics tree_metrics(const Graph& t) {
    if (t.num_vertices() == 0) throw std::invalid_argument("not a tree: empty graph");
    if (!is_connected(t)) throw std::invalid_argument("not a tree: disconnected");
    if (t.num_edges() + 1 != static_cast<std::size_t>(t.num_vertices()))
        throw std::invalid_argument("not a tree: cycle found");
    TreeMetrics m;
    for (int v : t.vertices())
        if (t.degree(v) == 1) m.leaves.push_back(v);
    auto [a, _] = farthest(t, t.vertices().front());
    m.diameter = farthest(t, a).second;
    return m;
}

int lca(const Graph& t, int root, int u, int v) {
    if (!is_tree(t)) throw std::invalid_argument("lca requires a tree");
    for (int x : {root, u, v})
        if (!t.has_vertex(x)) throw std::invalid_argument("unknown vertex " + std::to_string(x));
    std::unordered_map<int, int> parent{{root, root}};
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b : t.neighbors(a))
            if (!parent.count(b)) {
                parent[b] = a;
                queue.push_back(b);
            }
    }
    std::unordered_set<int> on_u_path;
    for (int x = u;; x = parent.at(x)) {
        on_u_path.insert(x);
        if (x == root) break;
    }
    for (int x = v;; x = parent.at(x)) {
        if (on_u_path.count(x)) return x;
        if (x == root) break;
    }
    return root;
}

}  // namespace minors
