#include "minors/model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace minors {

MinorModel MinorModel::identity(const Graph& g) {
    MinorModel m;
    for (int v : g.vertices()) m.branch_sets[v] = {v};
    return m;
}

std::vector<std::string> verify_model(const Graph& host, const Graph& pattern, const MinorModel& m) {
    std::vector<std::string> violations;

    for (int u : pattern.vertices())
        if (!m.branch_sets.count(u)) {
            violations.push_back("bijection: pattern vertex " + std::to_string(u) + " has no branch set");
            break;
        }
    for (const auto& [u, set] : m.branch_sets) {
        if (!pattern.has_vertex(u)) {
            violations.push_back("bijection: branch set keyed by unknown pattern vertex " + std::to_string(u));
            break;
        }
        if (set.empty()) {
            violations.push_back("branch set of " + std::to_string(u) + " is empty");
            break;
        }
    }
    if (!violations.empty()) return violations;

    std::unordered_map<int, int> owner;
    for (const auto& [u, set] : m.branch_sets) {
        for (int x : set) {
            if (!host.has_vertex(x)) {
                violations.push_back("branch set of " + std::to_string(u) + " contains unknown host vertex " +
                                     std::to_string(x));
                return violations;
            }
            auto [it, inserted] = owner.emplace(x, u);
            if (!inserted) {
                violations.push_back("disjointness: host vertex " + std::to_string(x) + " in branch sets of " +
                                     std::to_string(it->second) + " and " + std::to_string(u));
                return violations;
            }
        }
    }

    for (const auto& [u, set] : m.branch_sets) {
        if (!is_connected(host.induced(set))) {
            violations.push_back("connectivity: branch set of " + std::to_string(u) + " is disconnected");
            break;
        }
    }

    for (const auto& [a, b] : pattern.edges()) {
        bool realized = false;
        const auto& sa = m.branch_sets.at(a);
        const auto& sb = m.branch_sets.at(b);
        std::unordered_set<int> in_b(sb.begin(), sb.end());
        for (int x : sa) {
            for (int y : host.neighbors(x))
                if (in_b.count(y)) {
                    realized = true;
                    break;
                }
            if (realized) break;
        }
        if (!realized) {
            violations.push_back("edge {" + std::to_string(a) + "," + std::to_string(b) + "} unrealized");
            break;
        }
    }
    return violations;
}

std::string model_to_json(const MinorModel& m) {
    nlohmann::json j;
    auto& bs = j["branch_sets"] = nlohmann::json::object();
    for (const auto& [u, set] : m.branch_sets) bs[std::to_string(u)] = set;
    return j.dump();
}

MinorModel model_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    MinorModel m;
    for (const auto& [key, val] : j.at("branch_sets").items()) {
        auto set = val.get<std::vector<int>>();
        std::sort(set.begin(), set.end());
        m.branch_sets[std::stoi(key)] = std::move(set);
    }
    return m;
}

}  // namespace minors
