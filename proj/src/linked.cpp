#include "minors/linked.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace minors {

namespace {

// Unit-capacity Dinic, small instances only.
class Flow {
  public:
    explicit Flow(int nodes) : head_(nodes) {}

    void add_edge(int from, int to) {
        head_[from].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({to, 1});
        head_[to].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({from, 0});
    }

    int max_flow(int source, int sink) {
        int total = 0;
        while (bfs(source, sink)) {
            iter_.assign(head_.size(), 0);
            while (dfs(source, sink)) ++total;
        }
        return total;
    }

  private:
    struct Edge {
        int to;
        int cap;
    };

    bool bfs(int source, int sink) {
        level_.assign(head_.size(), -1);
        std::queue<int> queue;
        level_[source] = 0;
        queue.push(source);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int e : head_[v])
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[v] + 1;
                    queue.push(edges_[e].to);
                }
        }
        return level_[sink] >= 0;
    }

    bool dfs(int v, int sink) {
        if (v == sink) return true;
        for (int& i = iter_[v]; i < static_cast<int>(head_[v].size()); ++i) {
            int e = head_[v][i];
            Edge& edge = edges_[e];
            if (edge.cap > 0 && level_[edge.to] == level_[v] + 1 && dfs(edge.to, sink)) {
                --edge.cap;
                ++edges_[e ^ 1].cap;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<int>> head_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace

bool has_disjoint_linkage(const Graph& g, const std::vector<int>& s, const std::vector<int>& x1,
                          const std::vector<int>& x2) {
    if (x1.size() != x2.size()) throw std::invalid_argument("has_disjoint_linkage: |X1| != |X2|");
    std::unordered_set<int> in_s(s.begin(), s.end());
    std::unordered_set<int> in_x1(x1.begin(), x1.end()), in_x2(x2.begin(), x2.end());
    for (int v : x1)
        if (!in_s.count(v)) throw std::invalid_argument("has_disjoint_linkage: X1 not within s");
    for (int v : x2)
        if (!in_s.count(v)) throw std::invalid_argument("has_disjoint_linkage: X2 not within s");
    for (int v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("has_disjoint_linkage: s vertex missing from graph");
    if (x1.empty()) return true;

    // Usable vertices: endpoints plus anything outside s. Each gets an
    // in-node and an out-node joined by a unit arc; a step u->v is allowed
    // when u can be a non-final and v a non-initial path vertex, and never
    // between two s vertices (that would be a length-1 path or an internal
    // s vertex).
    std::unordered_map<int, int> idx;
    for (int v : g.vertices())
        if (!in_s.count(v) || in_x1.count(v) || in_x2.count(v)) {
            int i = static_cast<int>(idx.size());
            idx[v] = i;
        }
    int n = static_cast<int>(idx.size());
    int source = 2 * n, sink = 2 * n + 1;
    Flow flow(2 * n + 2);
    for (const auto& [v, i] : idx) flow.add_edge(2 * i, 2 * i + 1);
    for (int v : x1) flow.add_edge(source, 2 * idx[v]);
    for (int v : x2) flow.add_edge(2 * idx[v] + 1, sink);
    for (const auto& [u, v] : g.edges()) {
        auto iu = idx.find(u), iv = idx.find(v);
        if (iu == idx.end() || iv == idx.end()) continue;
        if (in_s.count(u) && in_s.count(v)) continue;
        if ((in_x1.count(u) || !in_s.count(u)) && (in_x2.count(v) || !in_s.count(v)))
            flow.add_edge(2 * iu->second + 1, 2 * iv->second);
        if ((in_x1.count(v) || !in_s.count(v)) && (in_x2.count(u) || !in_s.count(u)))
            flow.add_edge(2 * iv->second + 1, 2 * iu->second);
    }
    return flow.max_flow(source, sink) == static_cast<int>(x1.size());
}

LinkednessResult is_linked(const Graph& g, const std::vector<int>& s, LinkedOptions opts) {
    if (static_cast<int>(s.size()) > opts.max_set_size && opts.sample <= 0)
        throw std::invalid_argument("is_linked: set of " + std::to_string(s.size()) +
                                    " vertices needs sampling (max exhaustive size " +
                                    std::to_string(opts.max_set_size) + ")");
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int m = static_cast<int>(sorted.size());

    auto expand = [&](unsigned mask) {
        std::vector<int> out;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) out.push_back(sorted[i]);
        return out;
    };

    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (opts.budget_ms > 0)
        deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.budget_ms);

    LinkednessResult res;
    auto check_pair = [&](unsigned m1, unsigned m2) -> bool {
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
            res.outcome = LinkedOutcome::unknown;
            return false;
        }
        auto x1 = expand(m1), x2 = expand(m2);
        if (!has_disjoint_linkage(g, sorted, x1, x2)) {
            res.outcome = LinkedOutcome::not_linked;
            res.failing = {std::move(x1), std::move(x2)};
            return false;
        }
        return true;
    };

    if (m >= 31) throw std::invalid_argument("is_linked: set too large to index");
    unsigned full = (1u << m) - 1;
    if (opts.sample > 0) {
        std::mt19937 rng(opts.seed);
        std::uniform_int_distribution<unsigned> dist(1, full);
        for (long long t = 0; t < opts.sample; ++t) {
            unsigned m1 = dist(rng);
            int k = std::popcount(m1);
            // random second subset of the same size
            std::vector<int> pool(m);
            for (int i = 0; i < m; ++i) pool[i] = i;
            std::shuffle(pool.begin(), pool.end(), rng);
            unsigned m2 = 0;
            for (int i = 0; i < k; ++i) m2 |= 1u << pool[i];
            if (!check_pair(m1, m2)) return res;
        }
    } else {
        // unordered pairs: linkages are symmetric under swapping X1 and X2
        for (unsigned m1 = 1; m1 <= full; ++m1)
            for (unsigned m2 = m1; m2 <= full; ++m2) {
                if (std::popcount(m1) != std::popcount(m2)) continue;
                if (!check_pair(m1, m2)) return res;
            }
    }
    res.outcome = LinkedOutcome::linked;
    return res;
}

}  // namespace minors
