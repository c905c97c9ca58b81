#include "minors/separation.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "minors/graph_io.hpp"

namespace minors {

namespace {

std::vector<int> set_difference(const std::set<int>& lhs, const std::set<int>& rhs) {
    std::vector<int> out;
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
    return out;
}

}  // namespace

CertificateReport verify_separation_certificate(const Graph& host, const SeparationCertificate& c,
                                                CertificateCheckOptions opts) {
    CertificateReport report;
    auto& v = report.violations;

    std::set<int> a(c.a.begin(), c.a.end()), b(c.b.begin(), c.b.end());
    for (int x : a)
        if (!host.has_vertex(x)) {
            v.push_back("separation: A contains unknown host vertex " + std::to_string(x));
            return report;
        }
    for (int x : b)
        if (!host.has_vertex(x)) {
            v.push_back("separation: B contains unknown host vertex " + std::to_string(x));
            return report;
        }
    if (a.size() + b.size() < c.a.size() + c.b.size())
        v.push_back("separation: A or B lists a vertex twice");
    std::set<int> cover(a);
    cover.insert(b.begin(), b.end());
    if (static_cast<int>(cover.size()) != host.num_vertices())
        v.push_back("separation: A and B do not cover the host");

    std::set<int> sep;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(sep, sep.begin()));
    auto a_only = set_difference(a, b);
    auto b_only = set_difference(b, a);
    std::unordered_set<int> a_side(a_only.begin(), a_only.end());
    [&] {
        for (int x : b_only)
            for (int y : host.neighbors(x))
                if (a_side.count(y)) {
                    v.push_back("separation: edge {" + std::to_string(std::min(x, y)) + "," +
                                std::to_string(std::max(x, y)) + "} crosses A-B");
                    return;
                }
    }();

    if (static_cast<int>(sep.size()) != c.pattern.num_vertices())
        v.push_back("order: |A cap B| = " + std::to_string(sep.size()) + " but the pattern has " +
                    std::to_string(c.pattern.num_vertices()) + " vertices");

    if (!is_connected(host.induced(b_only)))
        v.push_back("connectivity: host[B minus A] is disconnected");

    {
        auto model_violations = verify_model(host.induced(c.a), c.pattern, c.left_model);
        for (const auto& msg : model_violations) v.push_back("left-model: " + msg);
    }
    for (const auto& [u, set] : c.left_model.branch_sets) {
        int hits = 0;
        for (int x : set)
            if (sep.count(x)) ++hits;
        if (hits != 1) {
            v.push_back("left-contains: branch set of " + std::to_string(u) + " meets A cap B " +
                        std::to_string(hits) + " times");
            break;
        }
    }

    Graph side_b = host.induced(c.b);
    std::unordered_set<int> used;
    for (std::size_t i = 0; i < c.linkage.size(); ++i) {
        const auto& path = c.linkage[i];
        std::string tag = "linkage path " + std::to_string(i) + ": ";
        try {
            path.validate(side_b);
        } catch (const std::exception& e) {
            v.push_back(tag + e.what());
            continue;
        }
        if (path.length() == 1) v.push_back(tag + "has length one");
        if (!sep.count(path.vertices.front()) || !sep.count(path.vertices.back()))
            v.push_back(tag + "endpoint outside A cap B");
        for (std::size_t j = 1; j + 1 < path.vertices.size(); ++j)
            if (sep.count(path.vertices[j])) {
                v.push_back(tag + "internal vertex " + std::to_string(path.vertices[j]) + " lies in A cap B");
                break;
            }
        for (int x : path.vertices)
            if (!used.insert(x).second) {
                v.push_back(tag + "shares vertex " + std::to_string(x) + " with another path");
                break;
            }
    }

    if (opts.check_linkedness && v.empty()) {
        std::vector<int> sep_list(sep.begin(), sep.end());
        auto linked = is_linked(side_b, sep_list, opts.linked);
        report.linkedness = linked.outcome;
        if (linked.outcome == LinkedOutcome::not_linked)
            v.push_back("linkedness: A cap B is not linked in host[B]");
    }
    return report;
}

std::string certificate_to_json(const SeparationCertificate& c) {
    nlohmann::json j;
    j["A"] = c.a;
    j["B"] = c.b;
    j["pattern"] = nlohmann::json::parse(to_json(c.pattern));
    j["left_model"] = nlohmann::json::parse(model_to_json(c.left_model));
    auto& paths = j["linkage"] = nlohmann::json::array();
    for (const auto& p : c.linkage) paths.push_back(p.vertices);
    return j.dump();
}

SeparationCertificate certificate_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SeparationCertificate c;
    c.a = j.at("A").get<std::vector<int>>();
    c.b = j.at("B").get<std::vector<int>>();
    c.pattern = graph_from_json(j.at("pattern").dump());
    c.left_model = model_from_json(j.at("left_model").dump());
    for (const auto& p : j.at("linkage")) c.linkage.push_back({p.get<std::vector<int>>()});
    return c;
}

}  // namespace minors
