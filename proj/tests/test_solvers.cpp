#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "minors/graph.hpp"
#include "minors/linked.hpp"
#include "minors/minor_search.hpp"
#include "minors/model.hpp"
#include "minors/patterns.hpp"
#include "minors/separation.hpp"
#include "minors/width.hpp"

using namespace minors;

TEST_CASE("verify_model") {
    Graph w6 = wheel(6);
    CHECK(verify_model(w6, w6, MinorModel::identity(w6)).empty());

    // K_4 in wheel(5): rim split 2+2, hub kept
    Graph k4 = complete_graph(4);
    MinorModel split;
    split.branch_sets[0] = {0, 1};
    split.branch_sets[1] = {2, 3};
    split.branch_sets[2] = {4};
    split.branch_sets[3] = {5};  // hub
    CHECK(verify_model(wheel(5), k4, split).empty());

    MinorModel overlap;
    overlap.branch_sets[0] = {0, 1};
    overlap.branch_sets[1] = {1, 2};
    overlap.branch_sets[2] = {3};
    overlap.branch_sets[3] = {5};
    auto v = verify_model(wheel(5), k4, overlap);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("disjoint") != std::string::npos);
}

TEST_CASE("is_minor") {
    CHECK(is_minor(complete_graph(4), wheel(6)).outcome == SearchOutcome::found);
    CHECK(is_minor(complete_graph(5), xi(5)).outcome == SearchOutcome::absent);
    CHECK(is_minor(cycle_graph(4), cycle_graph(6)).outcome == SearchOutcome::found);

    // reflexive on a few corpus graphs
    for (const Graph& g : {wheel(5), xi(3), yurt(3), comb(4)})
        CHECK(is_minor(g, g).outcome == SearchOutcome::found);

    // budget exhaustion reports unknown, never absent
    MinorSearchOptions tight;
    tight.max_nodes = 1;
    auto res = is_minor(complete_graph(5), complete_graph(6), tight);
    CHECK(res.outcome == SearchOutcome::unknown);
}

TEST_CASE("is_minor soundness over the 5-vertex census") {
    std::vector<Graph> patterns = {complete_graph(3), cycle_graph(4), path_graph(4),
                                   complete_graph(4)};
    for (const auto& host : testutil::connected_census(5)) {
        for (const auto& pattern : patterns) {
            auto res = is_minor(pattern, host);
            REQUIRE(res.outcome != SearchOutcome::unknown);
            if (res.outcome == SearchOutcome::found) {
                REQUIRE(res.model.has_value());
                CHECK(verify_model(host, pattern, *res.model).empty());
                // minor-monotonicity of treewidth
                CHECK(exact_treewidth_value(pattern) <= exact_treewidth_value(host));
            }
        }
    }
}

TEST_CASE("exact treewidth") {
    CHECK(exact_treewidth_value(complete_graph(5)) == 4);
    CHECK(exact_treewidth_value(xi(5)) == 2);
    CHECK(exact_treewidth_value(wheel(6)) == 3);
    auto res = exact_treewidth(wheel(6));
    CHECK(res.width == 3);
    CHECK(verify_decomposition(wheel(6), res.witness).empty());
    CHECK(width(wheel(6), res.witness) == 3);
    CHECK_THROWS_AS(exact_treewidth_value(complete_graph(23)), std::invalid_argument);
}

TEST_CASE("exact pathwidth") {
    CHECK(exact_pathwidth_value(path_graph(9)) == 1);
    CHECK(exact_pathwidth_value(xi(5)) == 2);
    CHECK(exact_pathwidth_value(yurt(4)) == 3);
    auto res = exact_pathwidth(yurt(4));
    CHECK(res.width == 3);
    CHECK(verify_decomposition(yurt(4), res.witness).empty());
}

TEST_CASE("treewidth closed forms and pathwidth dominance") {
    for (int n = 3; n <= 8; ++n) {
        CHECK(exact_treewidth_value(cycle_graph(n)) == 2);
        CHECK(exact_treewidth_value(complete_graph(n)) == n - 1);
        CHECK(exact_pathwidth_value(complete_graph(n)) == n - 1);
    }
    for (int k = 2; k <= 6; ++k) CHECK(exact_treewidth_value(grid_2xk(k)) == 2);
    for (int h = 1; h <= 3; ++h) CHECK(exact_treewidth_value(complete_binary_tree(h)) == 1);
    for (const auto& g : testutil::connected_census(5))
        CHECK(exact_treewidth_value(g) <= exact_pathwidth_value(g));
}

TEST_CASE("is_linked") {
    // P_3 with s = both ends: the long path plus null paths
    CHECK(is_linked(path_graph(3), {0, 2}).outcome == LinkedOutcome::linked);

    // K_2: the only connecting path has length one
    auto k2 = is_linked(path_graph(2), {0, 1});
    CHECK(k2.outcome == LinkedOutcome::not_linked);

    // star: center is shared by any two leaf-to-leaf paths
    Graph star = Graph::make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(has_disjoint_linkage(star, {1, 2, 3, 4}, {1}, {2}));
    CHECK_FALSE(has_disjoint_linkage(star, {1, 2, 3, 4}, {1, 2}, {3, 4}));
    auto s = is_linked(star, {1, 2, 3, 4});
    CHECK(s.outcome == LinkedOutcome::not_linked);
    REQUIRE(s.failing.has_value());
    CHECK(s.failing->first.size() == s.failing->second.size());

    // a clique minus its direct edges still links through outside vertices
    CHECK(is_linked(complete_graph(6), {0, 1, 2}).outcome == LinkedOutcome::linked);
}

namespace {

// ten-vertex host: P_3 on the separator with pendant A-side leaves, B side a
// wired hub that links the separator
SeparationCertificate small_certificate() {
    // A = {0,1,2,3,4}: separator path 0-1-2 plus private vertices 3,4
    // B = {0,1,2,5,...,9}: hub 5 adjacent to everything, ring 6-9
    Graph host = Graph::make(10, {{0, 1},
                                  {1, 2},
                                  {0, 3},
                                  {2, 4},
                                  {0, 5},
                                  {1, 5},
                                  {2, 5},
                                  {5, 6},
                                  {6, 7},
                                  {7, 8},
                                  {8, 9},
                                  {9, 5},
                                  {0, 6},
                                  {2, 7}});
    SeparationCertificate c;
    c.a = {0, 1, 2, 3, 4};
    c.b = {0, 1, 2, 5, 6, 7, 8, 9};
    c.pattern = path_graph(3);
    c.left_model.branch_sets[0] = {0, 3};
    c.left_model.branch_sets[1] = {1};
    c.left_model.branch_sets[2] = {2, 4};
    c.linkage.push_back({{0, 6, 7, 2}});
    return c;
}

}  // namespace

TEST_CASE("verify_separation_certificate") {
    Graph host = Graph::make(10, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {0, 5}, {1, 5}, {2, 5},
                                  {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}, {0, 6}, {2, 7}});
    auto cert = small_certificate();
    auto report = verify_separation_certificate(host, cert);
    CHECK(report.ok());

    CertificateCheckOptions with_linked;
    with_linked.check_linkedness = true;
    auto full = verify_separation_certificate(host, cert, with_linked);
    CHECK(full.ok());
    CHECK(full.linkedness == LinkedOutcome::linked);

    // crossing edge: move 5 into A-only so {5,6} crosses
    auto crossing = cert;
    crossing.a.push_back(5);
    crossing.b.erase(std::find(crossing.b.begin(), crossing.b.end(), 5));
    auto r1 = verify_separation_certificate(host, crossing);
    CHECK_FALSE(r1.ok());
    bool cites_separation = false;
    for (const auto& msg : r1.violations)
        if (msg.find("separation") != std::string::npos) cites_separation = true;
    CHECK(cites_separation);

    // a branch set meeting the separator twice
    auto doubled = cert;
    doubled.left_model.branch_sets[0] = {0, 1};
    doubled.left_model.branch_sets[1] = {3};
    auto r2 = verify_separation_certificate(host, doubled);
    CHECK_FALSE(r2.ok());
    bool cites_left = false;
    for (const auto& msg : r2.violations)
        if (msg.find("left-contains") != std::string::npos || msg.find("left-model") != std::string::npos)
            cites_left = true;
    CHECK(cites_left);
}

TEST_CASE("certificate json round trip") {
    auto cert = small_certificate();
    auto back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.a == cert.a);
    CHECK(back.b == cert.b);
    CHECK(back.pattern == cert.pattern);
    CHECK(back.left_model.branch_sets == cert.left_model.branch_sets);
    CHECK(back.linkage.size() == cert.linkage.size());
}
