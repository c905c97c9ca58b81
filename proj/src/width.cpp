#include "minors/width.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace minors {

namespace {

struct Indexed {
    std::vector<int> label;              // index -> original id
    std::vector<std::uint32_t> adj;      // bitmask adjacency
};

Indexed index_graph(const Graph& g, int max_vertices, const char* who) {
    int n = g.num_vertices();
    if (n > max_vertices)
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(n) +
                                    " vertices exceed the exact-solver budget of " +
                                    std::to_string(max_vertices));
    Indexed ix;
    ix.label = g.vertices();
    ix.adj.assign(n, 0);
    std::unordered_map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[ix.label[i]] = i;
    for (const auto& [u, v] : g.edges()) {
        ix.adj[pos[u]] |= 1u << pos[v];
        ix.adj[pos[v]] |= 1u << pos[u];
    }
    return ix;
}

// Vertices outside S u {v} seen from the component of v in G[S u {v}].
int q_value(const Indexed& ix, std::uint32_t s_without_v, int v) {
    std::uint32_t comp = 1u << v, reach = ix.adj[v];
    std::uint32_t add;
    while ((add = reach & s_without_v & ~comp)) {
        std::uint32_t scan = add;
        comp |= add;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            reach |= ix.adj[u];
        }
    }
    return std::popcount(reach & ~(s_without_v | (1u << v)));
}

// dp over subsets; fills choice[S] = vertex eliminated last within S.
int treewidth_dp(const Indexed& ix, std::vector<std::uint8_t>* choice_out) {
    int n = static_cast<int>(ix.label.size());
    if (n == 0) return -1;
    std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> dp(full + 1, 0), choice(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = 255, pick = -1;
        std::uint32_t scan = s;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint32_t rest = s & ~(1u << v);
            int cand = std::max<int>(rest ? dp[rest] : 0, q_value(ix, rest, v));
            if (cand < best) {
                best = cand;
                pick = v;
            }
        }
        dp[s] = static_cast<std::uint8_t>(best);
        choice[s] = static_cast<std::uint8_t>(pick);
        if (s == full) break;
    }
    if (choice_out) *choice_out = std::move(choice);
    return dp[full];
}

int boundary_size(const Indexed& ix, std::uint32_t s) {
    int b = 0;
    std::uint32_t scan = s;
    std::uint32_t full = (ix.label.size() == 32) ? ~0u : (1u << ix.label.size()) - 1;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        if (ix.adj[v] & full & ~s) ++b;
    }
    return b;
}

int pathwidth_dp(const Indexed& ix, std::vector<std::uint8_t>* choice_out) {
    int n = static_cast<int>(ix.label.size());
    if (n == 0) return -1;
    std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> dp(full + 1, 0), choice(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int inner = 255, pick = -1;
        std::uint32_t scan = s;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint32_t rest = s & ~(1u << v);
            int cand = rest ? dp[rest] : 0;
            if (cand < inner) {
                inner = cand;
                pick = v;
            }
        }
        dp[s] = static_cast<std::uint8_t>(std::max(inner, boundary_size(ix, s)));
        choice[s] = static_cast<std::uint8_t>(pick);
        if (s == full) break;
    }
    if (choice_out) *choice_out = std::move(choice);
    return dp[full];
}

std::vector<int> recover_order(const Indexed& ix, const std::vector<std::uint8_t>& choice) {
    int n = static_cast<int>(ix.label.size());
    std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[s];
        order[i] = v;
        s &= ~(1u << v);
    }
    return order;
}

}  // namespace

int exact_treewidth_value(const Graph& g, int max_vertices) {
    auto ix = index_graph(g, max_vertices, "exact_treewidth");
    return treewidth_dp(ix, nullptr);
}

int exact_pathwidth_value(const Graph& g, int max_vertices) {
    auto ix = index_graph(g, max_vertices, "exact_pathwidth");
    return pathwidth_dp(ix, nullptr);
}

TreewidthResult exact_treewidth(const Graph& g, int max_vertices) {
    auto ix = index_graph(g, max_vertices, "exact_treewidth");
    TreewidthResult res;
    int n = static_cast<int>(ix.label.size());
    if (n == 0) {
        res.width = -1;
        res.witness.shape = Graph::make(0, {});
        return res;
    }
    std::vector<std::uint8_t> choice;
    res.width = treewidth_dp(ix, &choice);
    auto order = recover_order(ix, choice);

    // Fill-in simulation along the elimination order; bag of v is v plus its
    // current neighborhood among later vertices.
    std::vector<std::uint32_t> adj = ix.adj;
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::uint32_t eliminated = 0;
    std::vector<Bag> bags(n);
    std::vector<Edge> shape_edges;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::uint32_t nb = adj[v] & ~eliminated;
        bags[i].insert(ix.label[v]);
        int first_later = -1;
        std::uint32_t scan = nb;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            bags[i].insert(ix.label[u]);
            if (first_later < 0 || position[u] < position[first_later]) first_later = u;
        }
        // make the remaining neighborhood a clique
        scan = nb;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            adj[u] |= nb & ~(1u << u);
        }
        eliminated |= 1u << v;
        if (first_later >= 0)
            shape_edges.emplace_back(i, position[first_later]);
        else if (i + 1 < n)
            shape_edges.emplace_back(i, i + 1);  // keep the shape connected
    }
    res.witness.shape = Graph::make(n, shape_edges);
    for (int i = 0; i < n; ++i) res.witness.bags.emplace_back(i, bags[i]);
    auto violations = verify_decomposition(g, res.witness);
    if (!violations.empty()) throw std::logic_error("treewidth witness invalid: " + violations.front());
    return res;
}

PathwidthResult exact_pathwidth(const Graph& g, int max_vertices) {
    auto ix = index_graph(g, max_vertices, "exact_pathwidth");
    PathwidthResult res;
    int n = static_cast<int>(ix.label.size());
    if (n == 0) {
        res.width = -1;
        return res;
    }
    std::vector<std::uint8_t> choice;
    res.width = pathwidth_dp(ix, &choice);
    auto order = recover_order(ix, choice);

    std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::uint32_t prefix = 0;
    for (int i = 0; i < n; ++i) {
        Bag bag;
        std::uint32_t scan = prefix;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            if (ix.adj[u] & full & ~prefix) bag.insert(ix.label[u]);  // still on the boundary
        }
        bag.insert(ix.label[order[i]]);
        res.witness.bags.push_back(std::move(bag));
        prefix |= 1u << order[i];
    }
    auto violations = verify_decomposition(g, res.witness);
    if (!violations.empty()) throw std::logic_error("pathwidth witness invalid: " + violations.front());
    if (raw_width(res.witness) != res.width)
        throw std::logic_error("pathwidth witness width mismatch");
    return res;
}

}  // namespace minors
