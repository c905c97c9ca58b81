#include "minors/minor_search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace minors {

namespace {

using Mask = std::uint64_t;

struct BudgetExceeded {};

class Search {
  public:
    Search(const Graph& pattern, const Graph& host, const MinorSearchOptions& opts)
        : pattern_(pattern), host_(host), opts_(opts) {
        host_label_ = host.vertices();
        int hn = host.num_vertices();
        std::unordered_map<int, int> pos;
        for (int i = 0; i < hn; ++i) pos[host_label_[i]] = i;
        host_adj_.assign(hn, 0);
        for (const auto& [u, v] : host.edges()) {
            host_adj_[pos[u]] |= Mask{1} << pos[v];
            host_adj_[pos[v]] |= Mask{1} << pos[u];
        }

        order_ = placement_order(pattern);
        int pn = static_cast<int>(order_.size());
        earlier_.resize(pn);
        later_degree_.assign(pn, 0);
        std::unordered_map<int, int> level_of;
        for (int i = 0; i < pn; ++i) level_of[order_[i]] = i;
        for (int i = 0; i < pn; ++i)
            for (int u : pattern.neighbors(order_[i])) {
                int j = level_of[u];
                if (j < i) {
                    earlier_[i].push_back(j);
                    ++later_degree_[j];
                }
            }
        branch_.assign(pn, 0);
        pending_.assign(pn, 0);
        if (opts_.budget_ms > 0)
            deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts_.budget_ms);
    }

    MinorSearchResult run() {
        MinorSearchResult res;
        if (pattern_.num_vertices() == 0) {
            res.outcome = SearchOutcome::found;
            res.model = MinorModel{};
            return res;
        }
        if (pattern_.num_vertices() > host_.num_vertices() ||
            pattern_.num_edges() > host_.num_edges()) {
            res.outcome = SearchOutcome::absent;
            return res;
        }
        int hn = host_.num_vertices();
        Mask avail = (hn == 64) ? ~Mask{0} : (Mask{1} << hn) - 1;
        try {
            if (place(0, avail)) {
                res.outcome = SearchOutcome::found;
                MinorModel m;
                for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
                    std::vector<int> set;
                    Mask scan = branch_[i];
                    while (scan) {
                        set.push_back(host_label_[std::countr_zero(scan)]);
                        scan &= scan - 1;
                    }
                    m.branch_sets[order_[i]] = std::move(set);
                }
                res.model = std::move(m);
            } else {
                res.outcome = SearchOutcome::absent;
            }
        } catch (const BudgetExceeded&) {
            res.outcome = SearchOutcome::unknown;
        }
        return res;
    }

  private:
    // BFS from a max-degree vertex of each component, so every non-root
    // level has at least one earlier pattern neighbor.
    static std::vector<int> placement_order(const Graph& p) {
        std::vector<int> order;
        std::unordered_set<int> seen;
        auto verts = p.vertices();
        std::stable_sort(verts.begin(), verts.end(),
                         [&](int a, int b) { return p.degree(a) > p.degree(b); });
        for (int root : verts) {
            if (seen.count(root)) continue;
            std::vector<int> queue{root};
            seen.insert(root);
            for (size_t i = 0; i < queue.size(); ++i) {
                int v = queue[i];
                order.push_back(v);
                auto nb = p.neighbors(v);
                std::stable_sort(nb.begin(), nb.end(),
                                 [&](int a, int b) { return p.degree(a) > p.degree(b); });
                for (int u : nb)
                    if (seen.insert(u).second) queue.push_back(u);
            }
        }
        return order;
    }

    void tick() {
        if (++nodes_ > opts_.max_nodes) throw BudgetExceeded{};
        if (deadline_ && (nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded{};
    }

    Mask neighborhood(Mask s) const {
        Mask nb = 0, scan = s;
        while (scan) {
            nb |= host_adj_[std::countr_zero(scan)];
            scan &= scan - 1;
        }
        return nb & ~s;
    }

    // Every placed pattern vertex with unfinished pattern neighbors needs that
    // many available host vertices next to its branch set.
    bool frontiers_ok(int placed, Mask avail) const {
        for (int j = 0; j < placed; ++j)
            if (pending_[j] > std::popcount(neighborhood(branch_[j]) & avail)) return false;
        return true;
    }

    bool place(int level, Mask avail) {
        if (level == static_cast<int>(order_.size())) return true;
        int remaining_after = static_cast<int>(order_.size()) - level - 1;
        int cap = std::popcount(avail) - remaining_after;
        if (cap < 1) return false;

        // Required adjacencies for this branch set.
        Mask req_union = 0;
        for (int j : earlier_[level]) req_union |= neighborhood(branch_[j]) & avail;
        Mask starts;
        if (earlier_[level].empty()) {
            starts = avail;
        } else {
            starts = neighborhood(branch_[earlier_[level].front()]) & avail;
        }

        Mask excluded = 0;
        Mask scan_starts = starts;
        while (scan_starts) {
            int v = std::countr_zero(scan_starts);
            scan_starts &= scan_starts - 1;
            if (grow(level, Mask{1} << v, avail, excluded, cap)) return true;
            excluded |= Mask{1} << v;
        }
        return false;
    }

    // `excluded` only steers the enumeration (each connected subset is visited
    // once); excluded vertices stay available to later branch sets.
    bool grow(int level, Mask set, Mask avail, Mask excluded, int cap) {
        tick();
        bool satisfied = true;
        for (int j : earlier_[level])
            if (!(neighborhood(branch_[j]) & set)) {
                satisfied = false;
                break;
            }
        if (satisfied) {
            branch_[level] = set;
            Mask rest = avail & ~set;
            pending_[level] = later_degree_[level];
            for (int j : earlier_[level]) --pending_[j];
            bool ok = pending_[level] <= std::popcount(neighborhood(set) & rest) &&
                      frontiers_ok(level, rest) && place(level + 1, rest);
            for (int j : earlier_[level]) ++pending_[j];
            if (ok) return true;
            branch_[level] = 0;
        }
        if (std::popcount(set) >= cap) return false;
        Mask cand = neighborhood(set) & avail & ~excluded;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (grow(level, set | (Mask{1} << u), avail, excluded, cap)) return true;
            excluded |= Mask{1} << u;
        }
        return false;
    }

    const Graph& pattern_;
    const Graph& host_;
    MinorSearchOptions opts_;
    std::vector<int> host_label_;
    std::vector<Mask> host_adj_;
    std::vector<int> order_;
    std::vector<std::vector<int>> earlier_;
    std::vector<int> later_degree_;
    std::vector<Mask> branch_;
    std::vector<int> pending_;
    long long nodes_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace

MinorSearchResult is_minor(const Graph& pattern, const Graph& host, MinorSearchOptions opts) {
    if (host.num_vertices() > 64) return {SearchOutcome::unknown, std::nullopt};
    Search search(pattern, host, opts);
    auto res = search.run();
    if (res.outcome == SearchOutcome::found) {
        auto violations = verify_model(host, pattern, *res.model);
        if (!violations.empty()) throw std::logic_error("minor search produced invalid model: " + violations.front());
    }
    return res;
}

}  // namespace minors
