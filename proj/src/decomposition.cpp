#include "minors/decomposition.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "minors/width.hpp"

namespace minors {

namespace {

std::string bag_str(const Bag& b) {
    std::string s = "{";
    for (int v : b) s += std::to_string(v) + ",";
    if (s.size() > 1) s.pop_back();
    return s + "}";
}

std::vector<std::string> verify_impl(const Graph& g, const Graph& shape,
                                     const std::vector<std::pair<int, Bag>>& bags) {
    std::vector<std::string> violations;
    std::unordered_map<int, const Bag*> bag_of;
    for (const auto& [t, bag] : bags) {
        if (!shape.has_vertex(t)) violations.push_back("bag index " + std::to_string(t) + " not in shape");
        bag_of[t] = &bag;
    }
    for (int t : shape.vertices())
        if (!bag_of.count(t)) violations.push_back("shape vertex " + std::to_string(t) + " has no bag");
    if (!violations.empty()) return violations;
    if (shape.num_vertices() > 0 && !is_tree(shape)) {
        violations.push_back("shape is not a tree");
        return violations;
    }

    // (i) coverage
    std::unordered_set<int> covered;
    for (const auto& [t, bag] : bags)
        for (int v : bag) {
            if (!g.has_vertex(v)) violations.push_back("bag contains unknown vertex " + std::to_string(v));
            covered.insert(v);
        }
    for (int v : g.vertices())
        if (!covered.count(v)) {
            violations.push_back("vertex " + std::to_string(v) + " uncovered");
            break;
        }

    // (ii) edge coverage
    for (const auto& [u, v] : g.edges()) {
        bool found = false;
        for (const auto& [t, bag] : bags)
            if (bag.count(u) && bag.count(v)) {
                found = true;
                break;
            }
        if (!found) {
            violations.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) + "} uncovered");
            break;
        }
    }

    // (iii) coherence: the support of each host vertex induces a subtree
    for (int v : g.vertices()) {
        std::vector<int> support;
        for (const auto& [t, bag] : bags)
            if (bag.count(v)) support.push_back(t);
        if (support.empty()) continue;
        if (!is_connected(shape.induced(support))) {
            violations.push_back("support of vertex " + std::to_string(v) + " disconnected");
        }
    }
    return violations;
}

std::pair<Graph, std::vector<std::pair<int, Bag>>> as_tree(const PathDecomposition& d) {
    int m = static_cast<int>(d.bags.size());
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    std::vector<std::pair<int, Bag>> bags;
    for (int i = 0; i < m; ++i) bags.emplace_back(i, d.bags[i]);
    return {Graph::make(m, edges), std::move(bags)};
}

}  // namespace

std::vector<std::string> verify_decomposition(const Graph& g, const TreeDecomposition& d) {
    return verify_impl(g, d.shape, d.bags);
}

std::vector<std::string> verify_decomposition(const Graph& g, const PathDecomposition& d) {
    auto [shape, bags] = as_tree(d);
    return verify_impl(g, shape, bags);
}

int raw_width(const PathDecomposition& d) {
    int w = -1;
    for (const auto& b : d.bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

int width(const Graph& g, const TreeDecomposition& d) {
    auto v = verify_decomposition(g, d);
    if (!v.empty()) throw std::invalid_argument("invalid decomposition: " + v.front());
    int w = -1;
    for (const auto& [t, b] : d.bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

int width(const Graph& g, const PathDecomposition& d) {
    auto v = verify_decomposition(g, d);
    if (!v.empty()) throw std::invalid_argument("invalid decomposition: " + v.front());
    return raw_width(d);
}

NicePathDecomposition make_nice(const Graph& g, const PathDecomposition& p) {
    auto violations = verify_decomposition(g, p);
    if (!violations.empty()) throw std::invalid_argument("invalid decomposition: " + violations.front());

    NicePathDecomposition out;
    Bag cur;
    auto push = [&](NodeKind k) {
        out.decomposition.bags.push_back(cur);
        out.annotation.kinds.push_back(k);
    };
    for (const auto& target : p.bags) {
        std::vector<int> to_forget, to_introduce;
        for (int v : cur)
            if (!target.count(v)) to_forget.push_back(v);
        for (int v : target)
            if (!cur.count(v)) to_introduce.push_back(v);
        for (int v : to_forget) {
            cur.erase(v);
            push(NodeKind::forget);
        }
        for (int v : to_introduce) {
            cur.insert(v);
            push(NodeKind::introduce);
        }
    }
    while (!cur.empty()) {
        cur.erase(cur.begin());
        push(NodeKind::forget);
    }

    // Push introduces as early as the width allows (repeated forget/introduce
    // exchanges). The fixpoint is the canonical profile: s leading introduces,
    // alternation at the top, s trailing forgets.
    const int s = raw_width(p) + 1;
    auto& bags = out.decomposition.bags;
    auto& kinds = out.annotation.kinds;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i + 1 < bags.size(); ++i) {
            if (kinds[i] == NodeKind::forget && kinds[i + 1] == NodeKind::introduce &&
                static_cast<int>(bags[i].size()) + 2 <= s) {
                Bag merged = bags[i - 1];
                merged.insert(bags[i + 1].begin(), bags[i + 1].end());
                bags[i] = std::move(merged);
                std::swap(kinds[i], kinds[i + 1]);
                changed = true;
            }
        }
    }
    return out;
}

PathDecomposition swap_forget_introduce(const Graph& g, const PathDecomposition& p, int i) {
    auto violations = verify_decomposition(g, p);
    if (!violations.empty()) throw std::invalid_argument("invalid decomposition: " + violations.front());
    int m = static_cast<int>(p.bags.size());
    if (i < 2 || i + 1 > m)
        throw std::invalid_argument("position out of range");
    auto step_kind = [&](int idx) {  // 1-based bag index, idx >= 2
        const Bag &a = p.bags[idx - 2], &b = p.bags[idx - 1];
        std::vector<int> diff;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
        if (diff.size() != 1) throw std::invalid_argument("decomposition is not nice at bag " + std::to_string(idx));
        return b.size() > a.size() ? NodeKind::introduce : NodeKind::forget;
    };
    if (step_kind(i) != NodeKind::forget || step_kind(i + 1) != NodeKind::introduce)
        throw std::invalid_argument("bag " + std::to_string(i) + " must be a forget step followed by an introduce step");
    PathDecomposition out = p;
    Bag merged = p.bags[i - 2];
    merged.insert(p.bags[i].begin(), p.bags[i].end());
    out.bags[i - 1] = std::move(merged);
    return out;
}

PathDecomposition compactify(const Graph& g, const PathDecomposition& p, CompactifyOptions opts) {
    if (g.num_vertices() == 0) throw std::invalid_argument("empty host");
    int w = width(g, p);
    if (!opts.assume_optimal) {
        int pw = exact_pathwidth(g).width;
        if (w != pw)
            throw std::invalid_argument("decomposition is not optimal: width " + std::to_string(w) +
                                        " but pathwidth is " + std::to_string(pw));
    }
    auto nice = make_nice(g, p);
    const int s = w + 1;
    PathDecomposition out;
    int intro_seen = 0;
    for (std::size_t i = 0; i < nice.decomposition.bags.size(); ++i) {
        if (nice.annotation.kinds[i] != NodeKind::introduce) continue;
        if (++intro_seen >= s) out.bags.push_back(nice.decomposition.bags[i]);
    }
    int n = g.num_vertices();
    if (static_cast<int>(out.bags.size()) != n - w)
        throw std::logic_error("compactify produced " + std::to_string(out.bags.size()) +
                               " bags, expected " + std::to_string(n - w));
    for (const auto& b : out.bags)
        if (static_cast<int>(b.size()) != s)
            throw std::logic_error("compactify produced bag " + bag_str(b) + " of size != pw+1");
    auto violations = verify_decomposition(g, out);
    if (!violations.empty()) throw std::logic_error("compactify output invalid: " + violations.front());
    return out;
}

std::string decomposition_to_json(const PathDecomposition& d) {
    nlohmann::json j;
    auto& bags = j["bags"] = nlohmann::json::array();
    for (const auto& b : d.bags) bags.push_back(std::vector<int>(b.begin(), b.end()));
    return j.dump();
}

PathDecomposition path_decomposition_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    PathDecomposition d;
    for (const auto& b : j.at("bags")) {
        Bag bag;
        for (const auto& v : b) bag.insert(v.get<int>());
        d.bags.push_back(std::move(bag));
    }
    return d;
}

}  // namespace minors
