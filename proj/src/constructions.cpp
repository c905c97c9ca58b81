#include "minors/constructions.hpp"

#include "minors/width.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace minors {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void ensure(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

std::vector<int> tree_path_between(const Graph& t, int a, int b) {
    std::unordered_map<int, int> parent;
    std::deque<int> queue{a};
    parent[a] = a;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == b) break;
        for (int w : t.neighbors(v))
            if (!parent.count(w)) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    require(parent.count(b), "vertices are not connected in the tree");
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Graph shrink with branch-set bookkeeping; every merge follows a current
// edge, so each blob stays connected in the original host.
struct Shrink {
    Graph g;
    std::map<int, std::vector<int>> blob;

    explicit Shrink(const Graph& start) : g(start) {
        for (int v : g.vertices()) blob[v] = {v};
    }

    void contract_into(int keep, int gone) {
        ensure(g.has_edge(keep, gone), "contraction needs an edge");
        std::vector<int> verts;
        for (int v : g.vertices())
            if (v != gone) verts.push_back(v);
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges()) {
            if (u == gone) u = keep;
            if (v == gone) v = keep;
            if (u != v) edges.push_back(make_edge(u, v));
        }
        g = Graph::from_vertices(std::move(verts), edges);
        auto& dst = blob[keep];
        auto& src = blob[gone];
        dst.insert(dst.end(), src.begin(), src.end());
        blob.erase(gone);
    }
};

// Longest path of a tree, as a vertex list (double sweep).
std::vector<int> tree_diameter_path(const Graph& t) {
    auto farthest = [&](int from) {
        std::unordered_map<int, int> parent;
        std::deque<int> queue{from};
        parent[from] = from;
        int last = from;
        while (!queue.empty()) {
            last = queue.front();
            queue.pop_front();
            for (int w : t.neighbors(last))
                if (!parent.count(w)) {
                    parent[w] = last;
                    queue.push_back(w);
                }
        }
        return std::pair{last, parent};
    };
    int start = t.vertices().front();
    auto [a, ignore] = farthest(start);
    auto [b, parent] = farthest(a);
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    return path;
}

// Splits 0..m-1 into |selected| consecutive intervals, the j-th containing
// selected[j] (positions must be increasing).
std::vector<std::pair<int, int>> intervals_around(const std::vector<int>& selected, int m) {
    std::vector<std::pair<int, int>> out;
    int k = static_cast<int>(selected.size());
    for (int j = 0; j < k; ++j) {
        int lo = (j == 0) ? 0 : selected[j];
        int hi = (j + 1 == k) ? m - 1 : selected[j + 1] - 1;
        out.emplace_back(lo, hi);
    }
    return out;
}

}  // namespace

long long bound(BoundFamily family, int k) {
    require(k >= 1, "bound needs k >= 1");
    long long kk = k;
    switch (family) {
        case BoundFamily::wheel:
            return 36 * kk - 2;  // ceil(36k - 5/2)
        case BoundFamily::double_wheel: {
            double base = 8.0 * k * std::log2(8.0 * k) + 2.0;
            return static_cast<long long>(std::ceil(12.0 * base * base - 4.0 - 1e-9));
        }
        case BoundFamily::pw2:
            return 3 * kk * (kk - 4) + 8;
        case BoundFamily::yurt:
            return 6 * kk * kk * kk * kk - 24 * kk * kk * kk + 48 * kk * kk - 48 * kk + 23;
    }
    throw std::invalid_argument("unknown bound family");
}

BoundFamily bound_family_from_name(const std::string& name) {
    if (name == "wheel") return BoundFamily::wheel;
    if (name == "double_wheel") return BoundFamily::double_wheel;
    if (name == "pw2") return BoundFamily::pw2;
    if (name == "yurt") return BoundFamily::yurt;
    throw std::invalid_argument("unknown bound family: " + name);
}

long long xi_threshold(int k) {
    require(k >= 1, "xi_threshold needs k >= 1");
    return 3LL * k * (k - 2) - 1;
}

namespace {

// Longest-run DP; empty when neither target is reachable.
std::optional<MonotoneWitness> find_monotone_run(const std::vector<int>& seq, int k, int l) {
    int n = static_cast<int>(seq.size());
    auto runs = [&](bool increasing) {
        std::vector<int> len(n, 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                bool ok = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
                if (ok) len[i] = std::max(len[i], len[j] + 1);
            }
        return len;
    };
    auto backtrack = [&](const std::vector<int>& len, int target, bool increasing) {
        int end = -1;
        for (int i = 0; i < n && end < 0; ++i)
            if (len[i] == target) end = i;  // earliest end index
        std::vector<int> idx(target);
        idx[target - 1] = end;
        for (int c = target - 1; c >= 1; --c) {
            int i = idx[c];
            for (int j = 0; j < i; ++j) {
                bool ok = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
                if (ok && len[j] == c) {
                    idx[c - 1] = j;
                    break;
                }
            }
        }
        return idx;
    };

    if (n > 0) {
        auto inc = runs(true);
        if (*std::max_element(inc.begin(), inc.end()) >= k)
            return MonotoneWitness{backtrack(inc, k, true), RunDirection::increasing};
        auto dec = runs(false);
        if (*std::max_element(dec.begin(), dec.end()) >= l)
            return MonotoneWitness{backtrack(dec, l, false), RunDirection::decreasing};
    }
    return std::nullopt;
}

}  // namespace

MonotoneWitness es_extract(const std::vector<int>& seq, int k, int l) {
    require(k >= 1 && l >= 1, "targets must be positive");
    int n = static_cast<int>(seq.size());
    {
        std::set<int> distinct(seq.begin(), seq.end());
        require(static_cast<int>(distinct.size()) == n, "sequence values must be distinct");
    }
    auto run = find_monotone_run(seq, k, l);
    // (l-1)(k-1)+1 values guarantee a run; shorter inputs are accepted when
    // one happens to exist anyway.
    long long need = static_cast<long long>(l - 1) * (k - 1) + 1;
    require(run.has_value(), "sequence too short: " + std::to_string(n) + " < (l-1)(k-1)+1 = " +
                                 std::to_string(need));
    return *run;
}

WheelBuild wheel_from_tree_path(int h, const std::vector<int>& psi) {
    require(h >= 3, "height must be at least 3");
    Graph t = complete_binary_tree(h);
    int leaf_count = 1 << h;
    int first_leaf = leaf_count - 1;  // heap layout
    require(static_cast<int>(psi.size()) == leaf_count, "psi must map every leaf");
    {
        std::vector<bool> seen(leaf_count, false);
        for (int p : psi) {
            require(p >= 0 && p < leaf_count && !seen[p], "psi must be a bijection onto path positions");
            seen[p] = true;
        }
    }

    int tree_n = t.num_vertices();
    int path_base = tree_n;  // path position i gets id path_base + i
    std::vector<int> verts;
    std::vector<Edge> edges = t.edges();
    for (int v : t.vertices()) verts.push_back(v);
    for (int i = 0; i < leaf_count; ++i) {
        verts.push_back(path_base + i);
        if (i > 0) edges.emplace_back(path_base + i - 1, path_base + i);
    }
    std::vector<int> leaf_at_position(leaf_count);  // path position -> leaf id
    for (int j = 0; j < leaf_count; ++j) {
        int leaf = first_leaf + j;
        edges.emplace_back(leaf, path_base + psi[j]);
        leaf_at_position[psi[j]] = leaf;
    }
    Graph host = Graph::from_vertices(std::move(verts), edges);

    int u = leaf_at_position[0];
    int v = leaf_at_position[leaf_count - 1];
    auto uv_path = tree_path_between(t, u, v);
    std::unordered_set<int> on_path(uv_path.begin(), uv_path.end());
    int w = lca(t, 0, u, v);

    // Biggest complete subtree avoiding the u-v path; in the heap layout the
    // subtree below any vertex is complete, so scan roots by depth.
    int tau_root = -1, tau_size = -1;
    for (int cand = 0; cand < tree_n; ++cand) {
        bool disjoint = true;
        std::vector<int> stack{cand};
        int size = 0;
        while (!stack.empty() && disjoint) {
            int x = stack.back();
            stack.pop_back();
            if (on_path.count(x)) disjoint = false;
            ++size;
            if (2 * x + 2 < tree_n) {
                stack.push_back(2 * x + 1);
                stack.push_back(2 * x + 2);
            }
        }
        if (disjoint && size > tau_size) {
            tau_size = size;
            tau_root = cand;
        }
    }
    ensure(tau_root >= 0, "no complete subtree avoids the leaf-to-leaf path");

    std::vector<int> tau_vertices, tau_leaves;
    {
        std::vector<int> stack{tau_root};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            tau_vertices.push_back(x);
            if (2 * x + 2 < tree_n) {
                stack.push_back(2 * x + 1);
                stack.push_back(2 * x + 2);
            } else {
                tau_leaves.push_back(x);
            }
        }
    }
    std::vector<int> rim_positions;  // positions on the path matched into tau
    for (int leaf : tau_leaves) rim_positions.push_back(psi[leaf - first_leaf]);
    std::sort(rim_positions.begin(), rim_positions.end());
    int q = static_cast<int>(rim_positions.size());
    ensure(q >= (1 << (h - 2)), "the off-path subtree is smaller than guaranteed");
    ensure(rim_positions.front() > 0 && rim_positions.back() < leaf_count - 1,
           "the matched subtree touches a path end");

    MinorModel model;
    // rim arcs along the path, half-open at the right
    for (int i = 0; i + 1 < q; ++i) {
        std::vector<int> arc;
        for (int p = rim_positions[i]; p < rim_positions[i + 1]; ++p) arc.push_back(path_base + p);
        model.branch_sets[i] = std::move(arc);
    }
    model.branch_sets[q - 1] = {path_base + rim_positions[q - 1]};
    // closing rim vertex: path suffix, the whole u-v tree path, path prefix
    {
        std::vector<int> closing;
        for (int p = rim_positions[q - 1] + 1; p < leaf_count; ++p) closing.push_back(path_base + p);
        for (int x : uv_path) closing.push_back(x);
        for (int p = 0; p < rim_positions[0]; ++p) closing.push_back(path_base + p);
        model.branch_sets[q] = std::move(closing);
    }
    // hub: the subtree plus the climb toward w, stopping before the u-v path
    {
        std::vector<int> hub = tau_vertices;
        auto climb = tree_path_between(t, tau_root, w);
        for (std::size_t i = 1; i < climb.size(); ++i) {
            if (on_path.count(climb[i])) break;
            hub.push_back(climb[i]);
        }
        model.branch_sets[q + 1] = std::move(hub);
    }

    WheelBuild out;
    out.host = std::move(host);
    out.pattern = wheel(q + 1);
    out.model = std::move(model);
    out.order = q + 1;
    out.rim_length = q;
    out.lca_is_root = (w == 0);
    // off the root, a whole height-(h-1) child subtree avoids the path
    out.order_promised = (1 << (out.lca_is_root ? h - 2 : h - 1)) + 1;
    ensure(q >= out.order_promised - 1, "rim shorter than the case guarantees");
    auto violations = verify_model(out.host, out.pattern, out.model);
    ensure(violations.empty(), "wheel model invalid: " + (violations.empty() ? "" : violations.front()));
    return out;
}

HStar make_hstar(const Graph& tree, int path_len, int bridge_tree_vertex, int bridge_pos) {
    require(is_tree(tree), "hstar needs a tree");
    require(path_len >= 1, "path must be nonempty");
    require(tree.has_vertex(bridge_tree_vertex), "bridge endpoint missing from the tree");
    require(bridge_pos >= 0 && bridge_pos < path_len, "bridge position out of range");
    int base = tree.vertices().back() + 1;
    std::vector<int> verts = tree.vertices();
    std::vector<Edge> edges = tree.edges();
    HStar out;
    for (int i = 0; i < path_len; ++i) {
        out.path.push_back(base + i);
        verts.push_back(base + i);
        if (i > 0) edges.emplace_back(base + i - 1, base + i);
    }
    edges.emplace_back(bridge_tree_vertex, base + bridge_pos);
    out.graph = Graph::from_vertices(std::move(verts), edges);
    return out;
}

MinorModel extend_left_model(const Graph& host, const SeparationCertificate& cert,
                             const std::vector<std::pair<int, int>>& pairing) {
    auto report = verify_separation_certificate(host, cert);
    require(report.ok(), "certificate invalid: " + (report.violations.empty() ? "" : report.violations.front()));

    std::map<int, std::pair<int, bool>> endpoint_path;  // endpoint -> (path index, is_front)
    for (std::size_t i = 0; i < cert.linkage.size(); ++i) {
        const auto& vs = cert.linkage[i].vertices;
        endpoint_path[vs.front()] = {static_cast<int>(i), true};
        if (vs.size() > 1) endpoint_path[vs.back()] = {static_cast<int>(i), false};
    }

    MinorModel out = cert.left_model;
    std::set<int> used_paths;
    for (const auto& [pattern_vertex, endpoint] : pairing) {
        auto bs = out.branch_sets.find(pattern_vertex);
        require(bs != out.branch_sets.end(),
                "pairing names unknown pattern vertex " + std::to_string(pattern_vertex));
        auto ep = endpoint_path.find(endpoint);
        require(ep != endpoint_path.end(),
                "pairing vertex " + std::to_string(endpoint) + " is not a linkage endpoint");
        require(std::find(bs->second.begin(), bs->second.end(), endpoint) != bs->second.end(),
                "endpoint " + std::to_string(endpoint) + " is outside its branch set");
        auto [idx, from_front] = ep->second;
        require(used_paths.insert(idx).second, "two branch sets absorb the same linkage path");
        auto vs = cert.linkage[idx].vertices;
        if (!from_front) std::reverse(vs.begin(), vs.end());
        for (std::size_t i = 1; i + 1 < vs.size(); ++i) bs->second.push_back(vs[i]);
        // keep the near endpoint, drop the far one
    }
    auto violations = verify_model(host, cert.pattern, out);
    ensure(violations.empty(), "extended model invalid: " + (violations.empty() ? "" : violations.front()));
    return out;
}

LambdaExtraction lambda_from_certificate(const Graph& host, const Graph& tree,
                                         const SeparationCertificate& cert) {
    require(is_tree(tree), "reference tree is not a tree");
    int n = tree.num_vertices();

    auto report = verify_separation_certificate(host, cert);
    require(report.ok(), "certificate invalid: " + (report.violations.empty() ? "" : report.violations.front()));

    // The pattern must be the tree joined to a fresh n-vertex path by one edge.
    require(cert.pattern.num_vertices() == 2 * n, "pattern must have 2n vertices");
    std::unordered_set<int> tree_ids(tree.vertices().begin(), tree.vertices().end());
    std::vector<int> path_ids;
    for (int v : cert.pattern.vertices())
        if (!tree_ids.count(v)) path_ids.push_back(v);
    require(static_cast<int>(path_ids.size()) == n, "pattern must contain the reference tree by id");
    require(cert.pattern.induced(tree.vertices()) == tree, "pattern does not contain the tree");
    std::sort(path_ids.begin(), path_ids.end());
    for (std::size_t i = 0; i + 1 < path_ids.size(); ++i)
        require(cert.pattern.has_edge(path_ids[i], path_ids[i + 1]),
                "pattern path ids must be consecutive in id order");
    require(cert.pattern.num_edges() == tree.num_edges() + (n - 1) + 1,
            "pattern must add exactly one bridge edge");

    // Owners: each separator vertex sits in exactly one branch set.
    std::set<int> a(cert.a.begin(), cert.a.end()), b(cert.b.begin(), cert.b.end());
    std::set<int> sep;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(sep, sep.begin()));
    std::unordered_map<int, int> owner;
    for (const auto& [pv, set] : cert.left_model.branch_sets)
        for (int x : set)
            if (sep.count(x)) owner[x] = pv;

    std::unordered_set<int> path_id_set(path_ids.begin(), path_ids.end());
    auto leaves = tree_metrics(tree).leaves;
    std::unordered_set<int> leaf_set(leaves.begin(), leaves.end());
    std::unordered_map<int, int> position_of_path_id;
    for (std::size_t i = 0; i < path_ids.size(); ++i) position_of_path_id[path_ids[i]] = static_cast<int>(i);

    struct Link {
        int leaf;        // tree leaf (pattern id)
        int position;    // pattern path position
        int near;        // separator endpoint on the tree side
        int far;         // separator endpoint on the path side
        std::vector<int> inner;
    };
    require(cert.linkage.size() == static_cast<std::size_t>(n), "linkage must have n paths");
    std::vector<Link> leaf_links;
    std::vector<int> pattern_path_owners_of_inner_markers;
    for (const auto& p : cert.linkage) {
        require(p.length() >= 2, "linkage paths must have length at least 2");
        int x = p.vertices.front(), y = p.vertices.back();
        require(owner.count(x) && owner.count(y), "linkage endpoint not in any branch set");
        int ox = owner[x], oy = owner[y];
        if (path_id_set.count(ox)) {
            std::swap(x, y);
            std::swap(ox, oy);
        }
        require(tree_ids.count(ox) && path_id_set.count(oy),
                "each linkage path must join a tree-side and a path-side branch set");
        if (leaf_set.count(ox)) {
            Link link;
            link.leaf = ox;
            link.position = position_of_path_id[oy];
            link.near = x;
            link.far = y;
            if (p.vertices.front() == x)
                link.inner.assign(p.vertices.begin() + 1, p.vertices.end() - 1);
            else
                link.inner.assign(p.vertices.rbegin() + 1, p.vertices.rend() - 1);
            leaf_links.push_back(std::move(link));
        }
    }
    ensure(leaf_links.size() == leaf_set.size(), "one linkage path per tree leaf expected");

    // Contract each leaf linkage's interior to a marker inside G[B minus A].
    std::vector<int> b_only;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(b_only));
    Shrink shrink(host.induced(b_only));
    std::unordered_map<int, int> marker_to_link;  // marker vertex -> leaf_links index
    std::unordered_set<int> markers;
    for (std::size_t i = 0; i < leaf_links.size(); ++i) {
        int rep = leaf_links[i].inner.front();
        for (std::size_t j = 1; j < leaf_links[i].inner.size(); ++j) {
            int nxt = leaf_links[i].inner[j];
            shrink.contract_into(std::min(rep, nxt), std::max(rep, nxt));
            rep = std::min(rep, nxt);
        }
        marker_to_link[rep] = static_cast<int>(i);
        markers.insert(rep);
    }

    // Spanning tree of the contracted side, pruned to an inclusion-minimal
    // tree whose leaves are all markers.
    ensure(is_connected(shrink.g), "B side must stay connected after contraction");
    std::unordered_map<int, int> parent;
    {
        std::deque<int> queue{*markers.begin()};
        parent[*markers.begin()] = -1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : shrink.g.neighbors(v))
                if (!parent.count(w)) {
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
    }
    std::vector<Edge> span_edges;
    std::vector<int> span_verts;
    for (const auto& [v, p] : parent) {
        span_verts.push_back(v);
        if (p >= 0) span_edges.push_back(make_edge(v, p));
    }
    Graph steiner = Graph::from_vertices(std::move(span_verts), span_edges);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> prune;
        for (int v : steiner.vertices())
            if (steiner.degree(v) <= 1 && !markers.count(v)) prune.push_back(v);
        if (!prune.empty()) {
            steiner = steiner.delete_vertices(prune);
            changed = true;
        }
    }
    // Restrict the shrink graph to the Steiner tree and dissolve the
    // degree-2 vertices that are not markers.
    Shrink core(steiner);
    core.blob.clear();
    for (int v : steiner.vertices()) core.blob[v] = shrink.blob.at(v);
    for (bool changed = true; changed;) {
        changed = false;
        for (int v : core.g.vertices())
            if (core.g.degree(v) == 2 && !markers.count(v)) {
                auto nb = core.g.neighbors(v);
                int keep = std::min(nb[0], nb[1]);
                // merge v into a neighbor; the tree edge survives as keep-other
                auto merged = core.blob.at(v);
                auto& dst = core.blob[keep];
                dst.insert(dst.end(), merged.begin(), merged.end());
                core.blob.erase(v);
                core.g = core.g.dissolve_vertex(v);
                changed = true;
                break;
            }
    }
    int core_size = core.g.num_vertices();
    require(core_size >= 2, "degenerate linkage tree");
    ensure(is_tree(core.g), "contracted linkage core must be a tree");

    int s = ceil_sqrt(core_size);
    auto diameter_path = tree_diameter_path(core.g);
    bool long_path = static_cast<int>(diameter_path.size()) - 1 >= s;

    LambdaExtraction out;
    out.long_path_case = long_path;
    out.core_size = core_size;

    auto left_set = [&](int pattern_vertex) { return cert.left_model.branch_sets.at(pattern_vertex); };

    if (long_path) {
        std::unordered_set<int> on_r(diameter_path.begin(), diameter_path.end());
        // attach every off-path subtree to its anchor on the path
        std::unordered_map<int, std::vector<int>> hanging;   // anchor -> off-path vertices
        std::unordered_map<int, int> marker_of_anchor;       // anchor -> its marker identity
        for (int r : diameter_path) {
            if (markers.count(r)) marker_of_anchor[r] = r;
            for (int w : core.g.neighbors(r)) {
                if (on_r.count(w)) continue;
                // walk the whole subtree hanging below w
                std::vector<int> stack{w};
                std::unordered_set<int> seen{r};
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    if (!seen.insert(x).second) continue;
                    hanging[r].push_back(x);
                    if (!marker_of_anchor.count(r) && markers.count(x) && core.g.degree(x) == 1)
                        marker_of_anchor[r] = x;
                    for (int y : core.g.neighbors(x))
                        if (!seen.count(y)) stack.push_back(y);
                }
            }
            ensure(marker_of_anchor.count(r), "path vertex without a marker identity");
        }

        int m = static_cast<int>(diameter_path.size());
        std::vector<int> matched;
        for (int r : diameter_path) matched.push_back(leaf_links[marker_to_link.at(marker_of_anchor.at(r))].leaf);
        out.instance = lambda_build(tree, m, matched);

        for (int t : tree.vertices()) out.model.branch_sets[t] = left_set(t);
        for (int j = 0; j < m; ++j) {
            int r = diameter_path[j];
            std::vector<int> set = core.blob.at(r);
            for (int x : hanging[r]) {
                const auto& extra = core.blob.at(x);
                set.insert(set.end(), extra.begin(), extra.end());
            }
            out.model.branch_sets[out.instance.path[j]] = std::move(set);
        }
        std::vector<int> apex_set;
        for (int p : path_ids) {
            const auto& part = left_set(p);
            apex_set.insert(apex_set.end(), part.begin(), part.end());
        }
        out.model.branch_sets[out.instance.apex] = std::move(apex_set);
    } else {
        // leaf-fan case: the fan is the marker leaves of the core, the apex
        // is the contracted interior
        std::vector<int> fan;  // marker leaves
        std::vector<int> interior;
        for (int v : core.g.vertices()) {
            if (core.g.degree(v) == 1) {
                ensure(markers.count(v) > 0, "core leaf that is not a marker");
                fan.push_back(v);
            } else {
                interior.push_back(v);
            }
        }
        require(!interior.empty(), "degenerate linkage tree: no interior");
        int l = static_cast<int>(fan.size());
        ensure(l >= ceil_sqrt(static_cast<long long>(leaf_set.size())), "leaf fan smaller than guaranteed");

        // order the fan by the pattern path position of its far endpoint
        std::sort(fan.begin(), fan.end(), [&](int x, int y) {
            return leaf_links[marker_to_link.at(x)].position < leaf_links[marker_to_link.at(y)].position;
        });
        std::vector<int> kept_positions;
        std::vector<int> matched;
        for (int v : fan) {
            kept_positions.push_back(leaf_links[marker_to_link.at(v)].position);
            matched.push_back(leaf_links[marker_to_link.at(v)].leaf);
        }
        out.instance = lambda_build(tree, l, matched);

        for (int t : tree.vertices()) out.model.branch_sets[t] = left_set(t);
        auto spans = intervals_around(kept_positions, n);
        for (int j = 0; j < l; ++j) {
            std::vector<int> set = core.blob.at(fan[j]);
            for (int p = spans[j].first; p <= spans[j].second; ++p) {
                const auto& part = left_set(path_ids[p]);
                set.insert(set.end(), part.begin(), part.end());
            }
            out.model.branch_sets[out.instance.path[j]] = std::move(set);
        }
        std::vector<int> apex_set;
        for (int v : interior) {
            const auto& part = core.blob.at(v);
            apex_set.insert(apex_set.end(), part.begin(), part.end());
        }
        out.model.branch_sets[out.instance.apex] = std::move(apex_set);
    }

    auto violations = verify_model(host, out.instance.flat, out.model);
    ensure(violations.empty(), "extracted model invalid: " + (violations.empty() ? "" : violations.front()));
    return out;
}

DoubleWheelBuild double_wheel_from_lambda(const LambdaInstance& inst) {
    int n = inst.tree.num_vertices();
    int h = 0;
    while ((1 << (h + 2)) - 1 <= n) ++h;
    require((1 << (h + 1)) - 1 == n && inst.tree == complete_binary_tree(h),
            "instance tree must be the canonical complete binary tree");
    require(2 * h - 3 > 0, "height too small");
    double q = (std::pow(2.0, h / 2.0) - 2.0) / (2.0 * h - 3.0);
    int promised = static_cast<int>(std::ceil(q - 1e-9));
    require(promised >= 3, "degenerate order: the guaranteed rim length " + std::to_string(q) +
                               " is below 3");

    std::unordered_map<int, int> leaf_of_path;  // path vertex -> matched leaf
    for (const auto& [p, l] : inst.matching) leaf_of_path[p] = l;
    int u = leaf_of_path.at(inst.path.front());
    int u2 = leaf_of_path.at(inst.path.back());
    auto q_path = tree_path_between(inst.tree, u, u2);
    std::unordered_set<int> on_q(q_path.begin(), q_path.end());

    // components of the tree minus the leaf-to-leaf path
    std::unordered_map<int, int> comp;
    std::vector<std::vector<int>> comp_verts;
    for (int v : inst.tree.vertices()) {
        if (on_q.count(v) || comp.count(v)) continue;
        int id = static_cast<int>(comp_verts.size());
        comp_verts.emplace_back();
        std::vector<int> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp_verts[id].push_back(x);
            for (int y : inst.tree.neighbors(x))
                if (!on_q.count(y) && !comp.count(y)) {
                    comp[y] = id;
                    stack.push_back(y);
                }
        }
    }

    int m = static_cast<int>(inst.path.size());
    std::vector<int> count(comp_verts.size(), 0);
    for (int j = 0; j < m; ++j) {
        int leaf = leaf_of_path.at(inst.path[j]);
        if (!on_q.count(leaf)) ++count[comp[leaf]];
    }
    int best = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    ensure(!count.empty() && count[best] >= promised, "pigeonhole subtree too small");

    std::vector<int> rim_positions;  // path positions whose leaf lies in the hub subtree
    for (int j = 0; j < m; ++j) {
        int leaf = leaf_of_path.at(inst.path[j]);
        if (!on_q.count(leaf) && comp[leaf] == best) rim_positions.push_back(j);
    }
    int order = static_cast<int>(rim_positions.size());

    // cycle: the path, then the tree path walked back from u2 to u
    std::vector<int> cycle = inst.path;
    for (auto it = q_path.rbegin(); it != q_path.rend(); ++it) cycle.push_back(*it);
    // rim positions index into the path prefix of the cycle
    MinorModel model;
    int cn = static_cast<int>(cycle.size());
    for (int i = 0; i < order; ++i) {
        int from = rim_positions[i];
        int to = (i + 1 < order) ? rim_positions[i + 1] : cn;  // last arc absorbs the tree path
        std::vector<int> arc;
        for (int p = from; p < to; ++p) arc.push_back(cycle[p]);
        if (i + 1 == order)
            for (int p = 0; p < rim_positions[0]; ++p) arc.push_back(cycle[p]);
        model.branch_sets[i] = std::move(arc);
    }
    model.branch_sets[order] = comp_verts[best];
    model.branch_sets[order + 1] = {inst.apex};

    DoubleWheelBuild out;
    out.pattern = double_wheel(order);
    out.model = std::move(model);
    out.order = order;
    out.order_promised = promised;
    auto violations = verify_model(inst.flat, out.pattern, out.model);
    ensure(violations.empty(), "double wheel model invalid: " + (violations.empty() ? "" : violations.front()));
    return out;
}

XiEmbedding embed_pw2_in_xi(const Graph& g, std::optional<PathDecomposition> pd) {
    int n = g.num_vertices();
    require(n >= 3, "embedding needs at least 3 vertices");
    Graph padded = g;
    int pw = exact_pathwidth_value(padded);
    require(pw <= 2, "pathwidth " + std::to_string(pw) + " exceeds 2");
    while (pw < 2) {
        bool added = false;
        const auto& vs = padded.vertices();
        for (std::size_t i = 0; i < vs.size() && !added; ++i)
            for (std::size_t j = i + 1; j < vs.size() && !added; ++j) {
                if (padded.has_edge(vs[i], vs[j])) continue;
                auto edges = padded.edges();
                edges.push_back(make_edge(vs[i], vs[j]));
                Graph trial = Graph::from_vertices(padded.vertices(), edges);
                int w = exact_pathwidth_value(trial);
                if (w <= 2) {
                    padded = std::move(trial);
                    pw = w;
                    added = true;
                }
            }
        ensure(added, "padding failed to raise the pathwidth");
    }

    PathDecomposition compact;
    if (pd) {
        compact = *pd;
        auto violations = verify_decomposition(padded, compact);
        require(violations.empty(), "supplied decomposition invalid: " +
                                        (violations.empty() ? "" : violations.front()));
        require(static_cast<int>(compact.bags.size()) == n - 2, "supplied decomposition is not compact");
        for (std::size_t i = 0; i < compact.bags.size(); ++i) {
            require(compact.bags[i].size() == 3, "supplied decomposition is not compact");
            if (i > 0) {
                std::vector<int> diff;
                std::set_difference(compact.bags[i].begin(), compact.bags[i].end(),
                                    compact.bags[i - 1].begin(), compact.bags[i - 1].end(),
                                    std::back_inserter(diff));
                require(diff.size() == 1, "supplied decomposition is not compact");
            }
        }
    } else {
        compact = compactify(padded, exact_pathwidth(padded).witness);
    }

    int r = static_cast<int>(compact.bags.size());
    Graph host = xi(r + 1);
    auto x_id = [&](int i) { return i; };
    auto y_id = [&](int i) { return (r + 1) + i; };
    auto z_id = [&](int i) { return 2 * (r + 1) + i; };

    std::unordered_map<int, std::vector<int>> classes;  // input vertex -> host vertices
    auto only = [](const Bag& lhs, const Bag& rhs) {
        std::vector<int> diff;
        std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
        ensure(diff.size() == 1, "compact bags must exchange one vertex");
        return diff[0];
    };
    // Bag i is handled in column i+1; column 0 seeds the two vertices of the
    // first bag that outlive it. Duplicating the x-rail seed on y_0 realizes
    // the seed pair through the middle vertex, which the rails alone cannot.
    int fresh0 = (r >= 2) ? only(compact.bags[0], compact.bags[1]) : *compact.bags[0].rbegin();
    std::vector<int> seeds;
    for (int v : compact.bags[0])
        if (v != fresh0) seeds.push_back(v);
    int cur_x = seeds[0], cur_z = seeds[1];  // sorted: smallest id rides the x rail
    classes[cur_x] = {x_id(0), y_id(0)};
    classes[cur_z] = {z_id(0)};
    for (int i = 0; i < r; ++i) {
        int c = i + 1;
        int fresh = (i == 0) ? fresh0 : only(compact.bags[i], compact.bags[i - 1]);
        classes[fresh].push_back(y_id(c));
        int gone = (i + 1 < r) ? only(compact.bags[i], compact.bags[i + 1]) : -1;
        if (gone == cur_x) {
            classes[fresh].push_back(x_id(c));
            classes[cur_z].push_back(z_id(c));
            cur_x = fresh;
        } else if (gone == cur_z) {
            classes[fresh].push_back(z_id(c));
            classes[cur_x].push_back(x_id(c));
            cur_z = fresh;
        } else {  // the fresh vertex dies next (or this is the last bag)
            classes[cur_x].push_back(x_id(c));
            classes[cur_z].push_back(z_id(c));
        }
    }

    XiEmbedding out;
    out.host = std::move(host);
    out.padded = std::move(padded);
    for (auto& [v, set] : classes) out.model.branch_sets[v] = std::move(set);
    auto violations = verify_model(out.host, out.padded, out.model);
    ensure(violations.empty(), "grid embedding invalid: " + (violations.empty() ? "" : violations.front()));
    auto original = verify_model(out.host, g, out.model);
    ensure(original.empty(), "grid embedding misses an input edge");
    return out;
}

XiFromPaths xi_from_double_path(int k, int p_len, const std::vector<int>& perm) {
    require(k >= 2, "grid order must be at least 2");
    require(p_len >= 1, "paths must be nonempty");
    require(static_cast<int>(perm.size()) == p_len, "permutation size must match the path length");
    {
        std::vector<bool> seen(p_len, false);
        for (int v : perm) {
            require(v >= 0 && v < p_len && !seen[v], "linkage must be a permutation");
            seen[v] = true;
        }
    }

    int m = p_len;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) {
        edges.emplace_back(i, i + 1);          // path P
        edges.emplace_back(m + i, m + i + 1);  // path R
    }
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(i, 2 * m + i);                // P_i to its middle vertex
        edges.emplace_back(2 * m + i, m + perm[i]);      // middle vertex to R_{perm[i]}
    }
    Graph host = Graph::make(3 * m, edges);

    XiFromPaths out;
    {
        auto run = find_monotone_run(perm, k, k);
        // p_len >= (k-1)^2 + 1 guarantees a run; shorter inputs may still
        // carry one, so only their absence is an error.
        require(run.has_value(), "paths too short: no monotone run of length " + std::to_string(k) +
                                     "; (k-1)^2+1 = " +
                                     std::to_string(static_cast<long long>(k - 1) * (k - 1) + 1) +
                                     " vertices always suffice");
        out.run = *run;
    }
    const auto& sel = out.run.indices;

    auto p_spans = intervals_around(sel, m);
    std::vector<int> r_selected;
    for (int i : sel) r_selected.push_back(perm[i]);
    std::vector<int> r_sorted = r_selected;
    std::sort(r_sorted.begin(), r_sorted.end());
    auto r_spans_sorted = intervals_around(r_sorted, m);
    std::unordered_map<int, std::pair<int, int>> r_span_of;
    for (int j = 0; j < k; ++j) r_span_of[r_sorted[j]] = r_spans_sorted[j];

    MinorModel model;
    for (int j = 0; j < k; ++j) {
        std::vector<int> top, bottom;
        for (int p = p_spans[j].first; p <= p_spans[j].second; ++p) top.push_back(p);
        auto [lo, hi] = r_span_of.at(r_selected[j]);
        for (int p = lo; p <= hi; ++p) bottom.push_back(m + p);
        model.branch_sets[j] = std::move(top);              // x row
        model.branch_sets[k + j] = {2 * m + sel[j]};        // y row, the middle vertex
        model.branch_sets[2 * k + j] = std::move(bottom);   // z row
    }

    out.host = std::move(host);
    out.pattern = xi(k);
    out.model = std::move(model);
    auto violations = verify_model(out.host, out.pattern, out.model);
    ensure(violations.empty(), "grid model invalid: " + (violations.empty() ? "" : violations.front()));
    return out;
}

YurtBuild yurt_from_lambda_comb(const LambdaInstance& inst, int k) {
    require(k >= 1, "yurt order must be positive");
    int l = inst.tree.num_vertices() / 2;
    require(inst.tree == comb(l), "instance tree must be the canonical comb");
    int m = static_cast<int>(inst.path.size());
    long long need = static_cast<long long>(k - 1) * (k - 1) + 1;
    require(m >= need, "insufficient teeth: need a matched path of " + std::to_string(need) +
                           " vertices, got " + std::to_string(m));

    std::unordered_map<int, int> leaf_of_path;
    for (const auto& [p, leaf] : inst.matching) leaf_of_path[p] = leaf;
    std::vector<int> spine_order;  // spine index of the tooth matched to each path vertex
    for (int p : inst.path) {
        int leaf = leaf_of_path.at(p);
        require(leaf >= l && leaf < 2 * l, "matched vertex is not a tooth");
        spine_order.push_back(leaf - l);
    }

    YurtBuild out;
    out.run = es_extract(spine_order, k, k);
    const auto& sel = out.run.indices;  // path positions

    auto top_spans = intervals_around(sel, m);
    std::vector<int> teeth;
    for (int j : sel) teeth.push_back(spine_order[j]);
    std::vector<int> teeth_sorted = teeth;
    std::sort(teeth_sorted.begin(), teeth_sorted.end());
    auto spine_spans_sorted = intervals_around(teeth_sorted, l);
    std::unordered_map<int, std::pair<int, int>> spine_span_of;
    for (int j = 0; j < k; ++j) spine_span_of[teeth_sorted[j]] = spine_spans_sorted[j];

    MinorModel model;
    for (int j = 0; j < k; ++j) {
        std::vector<int> bottom;
        auto [lo, hi] = spine_span_of.at(teeth[j]);
        for (int p = lo; p <= hi; ++p) bottom.push_back(p);  // spine run
        bottom.push_back(l + teeth[j]);                       // plus its tooth
        std::vector<int> top;
        for (int p = top_spans[j].first; p <= top_spans[j].second; ++p) top.push_back(inst.path[p]);
        model.branch_sets[j] = std::move(bottom);
        model.branch_sets[k + j] = std::move(top);
    }
    model.branch_sets[2 * k] = {inst.apex};

    out.pattern = yurt(k);
    out.model = std::move(model);
    auto violations = verify_model(inst.flat, out.pattern, out.model);
    ensure(violations.empty(), "yurt model invalid: " + (violations.empty() ? "" : violations.front()));
    return out;
}

}  // namespace minors
