#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "minors/constructions.hpp"
#include "minors/minor_search.hpp"
#include "minors/patterns.hpp"
#include "minors/width.hpp"

using namespace minors;

namespace {

bool witness_valid(const std::vector<int>& seq, const MonotoneWitness& w) {
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
        int idx = w.indices[i];
        if (idx < 0 || idx >= static_cast<int>(seq.size())) return false;
        if (i > 0) {
            if (idx <= w.indices[i - 1]) return false;
            bool ok = w.direction == RunDirection::increasing ? seq[w.indices[i - 1]] < seq[idx]
                                                              : seq[w.indices[i - 1]] > seq[idx];
            if (!ok) return false;
        }
    }
    return true;
}

std::vector<int> shuffled(int n, unsigned seed) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::mt19937 rng(seed);
    for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
    return p;
}

}  // namespace

TEST_CASE("bound formulas") {
    CHECK(bound(BoundFamily::wheel, 10) == 358);
    CHECK(bound(BoundFamily::yurt, 2) == 23);
    CHECK(bound(BoundFamily::double_wheel, 1) == 8108);
    CHECK(bound(BoundFamily::pw2, 10) == 188);
    CHECK(xi_threshold(4) == 23);
    CHECK(bound_family_from_name("wheel") == BoundFamily::wheel);
    CHECK_THROWS_AS(bound_family_from_name("prism"), std::invalid_argument);
    CHECK_THROWS_AS(bound(BoundFamily::wheel, 0), std::invalid_argument);
}

TEST_CASE("es_extract") {
    std::vector<int> mixed{3, 1, 4, 2, 5};
    auto w = es_extract(mixed, 3, 3);
    CHECK(w.indices.size() == 3);
    CHECK(witness_valid(mixed, w));

    std::vector<int> desc{5, 4, 3, 2, 1};
    auto d = es_extract(desc, 5, 5);
    CHECK(d.direction == RunDirection::decreasing);
    CHECK(d.indices.size() == 5);
    CHECK(witness_valid(desc, d));

    CHECK_THROWS_AS(es_extract({1, 2, 3}, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(es_extract({1, 1, 2, 3, 4}, 2, 2), std::invalid_argument);
}

TEST_CASE("es_extract against the subset oracle on short sequences") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (int k = 1; k * k <= n + 2; ++k) {
                long long need = static_cast<long long>(k - 1) * (k - 1) + 1;
                if (n < need) continue;
                auto run = es_extract(perm, k, k);
                REQUIRE(witness_valid(perm, run));
                int len = static_cast<int>(run.indices.size());
                REQUIRE(len == k);
                bool inc = run.direction == RunDirection::increasing;
                REQUIRE(testutil::brute_longest_monotone(perm, inc) >= len);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("wheel_from_tree_path") {
    {
        std::vector<int> psi(8);
        std::iota(psi.begin(), psi.end(), 0);
        auto out = wheel_from_tree_path(3, psi);
        CHECK(out.order >= 3);
        CHECK(out.order >= out.order_promised);
        CHECK(verify_model(out.host, out.pattern, out.model).empty());
    }
    {
        std::vector<int> psi(16);
        std::iota(psi.begin(), psi.end(), 0);
        std::reverse(psi.begin(), psi.end());
        auto out = wheel_from_tree_path(4, psi);
        CHECK(out.order >= 5);
        CHECK(verify_model(out.host, out.pattern, out.model).empty());
    }
    {
        auto psi = shuffled(32, 42);
        auto out = wheel_from_tree_path(5, psi);
        CHECK(out.order >= 9);
        CHECK(verify_model(out.host, out.pattern, out.model).empty());
        // the hub keeps a complete subtree with at least 2^{h-2} leaves
        int first_leaf = 31;  // heap ids of B_5 leaves start here
        const auto& hub = out.model.branch_sets.at(out.order);
        int hub_leaves = static_cast<int>(std::count_if(
            hub.begin(), hub.end(), [&](int v) { return v >= first_leaf && v < 63; }));
        CHECK(hub_leaves >= 8);
        // the case split matches the promise
        CHECK(out.order_promised == (out.lca_is_root ? 9 : 17));
    }
    CHECK_THROWS_AS(wheel_from_tree_path(2, {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(wheel_from_tree_path(3, {0, 0, 1, 2, 3, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("make_hstar") {
    Graph t = comb(4);
    auto hs = make_hstar(t, 8, 0, 0);
    CHECK(hs.graph.num_vertices() == 16);
    CHECK(hs.graph.num_edges() == t.num_edges() + 7 + 1);
    CHECK(hs.path.front() == 8);
    CHECK(hs.graph.has_edge(0, 8));
    CHECK_THROWS_AS(make_hstar(cycle_graph(4), 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_hstar(t, 2, 99, 0), std::invalid_argument);
}

namespace {

// Host embedding H* = tree + n-path + bridge as the left side, with one
// interior vertex per linkage path on the B side. `wiring` adds edges among
// the B-side interiors 2n..3n-1 (indices are offsets). `pair_with[i]` is the
// path position paired with tree vertex i.
struct CertFixture {
    Graph host;
    SeparationCertificate cert;
    Graph tree;
};

CertFixture build_cert(const Graph& tree, const std::vector<int>& pair_with,
                       const std::vector<std::pair<int, int>>& wiring) {
    int n = tree.num_vertices();
    auto hs = make_hstar(tree, n, 0, 0);
    std::vector<Edge> edges = hs.graph.edges();
    int base = 2 * n;
    for (int t = 0; t < n; ++t) {
        edges.push_back(make_edge(t, base + t));              // tree endpoint
        edges.push_back(make_edge(base + t, n + pair_with[t]));  // path endpoint
    }
    for (auto [a, b] : wiring) edges.push_back(make_edge(base + a, base + b));
    CertFixture f;
    f.tree = tree;
    f.host = Graph::make(3 * n, edges);
    f.cert.pattern = hs.graph;
    for (int v = 0; v < 2 * n; ++v) {
        f.cert.a.push_back(v);
        f.cert.b.push_back(v);
        f.cert.left_model.branch_sets[v] = {v};
    }
    for (int v = base; v < 3 * n; ++v) f.cert.b.push_back(v);
    for (int t = 0; t < n; ++t) f.cert.linkage.push_back({{t, base + t, n + pair_with[t]}});
    return f;
}

}  // namespace

TEST_CASE("extend_left_model") {
    Graph tree = comb(4);
    std::vector<int> pairing_pos(8);
    std::iota(pairing_pos.begin(), pairing_pos.end(), 0);
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < 8; ++i) chain.emplace_back(i, i + 1);
    auto f = build_cert(tree, pairing_pos, chain);

    // absorb two linkage paths into their tree-side branch sets
    auto extended = extend_left_model(f.host, f.cert, {{4, 4}, {5, 5}});
    CHECK(verify_model(f.host, f.cert.pattern, extended).empty());
    CHECK(extended.branch_sets.at(4).size() == 2);

    // empty pairing leaves the model unchanged
    auto same = extend_left_model(f.host, f.cert, {});
    CHECK(same.branch_sets == f.cert.left_model.branch_sets);

    // near endpoint must be a linkage endpoint inside the named branch set
    CHECK_THROWS_AS(extend_left_model(f.host, f.cert, {{4, 17}}), std::invalid_argument);
    CHECK_THROWS_AS(extend_left_model(f.host, f.cert, {{4, 5}}), std::invalid_argument);
}

TEST_CASE("lambda_from_certificate long-path case") {
    // comb(4): interiors of the four tooth linkages sit on a B-side path, so
    // the contracted linkage tree is a path of markers
    Graph tree = comb(4);
    std::vector<int> pair_with(8);
    std::iota(pair_with.begin(), pair_with.end(), 0);
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < 8; ++i) chain.emplace_back(i, i + 1);
    auto f = build_cert(tree, pair_with, chain);

    auto out = lambda_from_certificate(f.host, tree, f.cert);
    CHECK(out.long_path_case);
    CHECK(is_in_lambda(out.instance.flat, tree).member);
    CHECK(verify_model(f.host, out.instance.flat, out.model).empty());
}

TEST_CASE("lambda_from_certificate leaf-fan case") {
    // star tree: every interior hangs off one B-side hub, the contracted
    // linkage tree is a star and the fan of marker leaves becomes the path
    Graph star = Graph::make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    std::vector<int> pair_with{0, 4, 3, 2, 1};  // reversed pairing for the leaves
    // hub = interior of the center linkage (offset 0); spokes to the rest
    std::vector<std::pair<int, int>> spokes{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    auto f = build_cert(star, pair_with, spokes);

    auto out = lambda_from_certificate(f.host, star, f.cert);
    CHECK_FALSE(out.long_path_case);
    CHECK(out.core_size == 5);
    CHECK(static_cast<int>(out.instance.path.size()) >= ceil_sqrt(out.core_size));
    CHECK(is_in_lambda(out.instance.flat, star).member);
    CHECK(verify_model(f.host, out.instance.flat, out.model).empty());
}

TEST_CASE("lambda_from_certificate rejects a broken certificate") {
    Graph tree = comb(4);
    std::vector<int> pair_with(8);
    std::iota(pair_with.begin(), pair_with.end(), 0);
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < 8; ++i) chain.emplace_back(i, i + 1);
    auto f = build_cert(tree, pair_with, chain);
    f.cert.linkage[1] = f.cert.linkage[0];  // shared vertices
    CHECK_THROWS_AS(lambda_from_certificate(f.host, tree, f.cert), std::invalid_argument);
}

TEST_CASE("double_wheel_from_lambda") {
    for (int h : {12, 13}) {
        Graph tree = complete_binary_tree(h);
        auto leaves = tree_metrics(tree).leaves;
        auto inst = lambda_build(tree, static_cast<int>(leaves.size()), leaves);
        auto out = double_wheel_from_lambda(inst);
        CHECK(out.order >= out.order_promised);
        CHECK(out.order_promised >= 3);
        CHECK(verify_model(inst.flat, out.pattern, out.model).empty());
    }
    {
        Graph tree = complete_binary_tree(4);
        auto leaves = tree_metrics(tree).leaves;
        auto inst = lambda_build(tree, static_cast<int>(leaves.size()), leaves);
        CHECK_THROWS_AS(double_wheel_from_lambda(inst), std::invalid_argument);
    }
}

TEST_CASE("embed_pw2_in_xi") {
    {
        auto out = embed_pw2_in_xi(cycle_graph(4));
        CHECK(out.host == xi(3));
        CHECK(verify_model(out.host, cycle_graph(4), out.model).empty());
        CHECK(is_minor(cycle_graph(4), xi(3)).outcome == SearchOutcome::found);
    }
    {
        Graph k23 = Graph::make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
        auto out = embed_pw2_in_xi(k23);
        CHECK(out.host == xi(4));
        CHECK(verify_model(out.host, k23, out.model).empty());
    }
    {
        auto out = embed_pw2_in_xi(path_graph(5));  // pw 1, gets padded
        CHECK(out.host == xi(4));
        CHECK(exact_pathwidth_value(out.padded) == 2);
        CHECK(verify_model(out.host, path_graph(5), out.model).empty());
    }
    CHECK_THROWS_AS(embed_pw2_in_xi(complete_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(embed_pw2_in_xi(path_graph(2)), std::invalid_argument);
    // a non-compact decomposition is rejected
    PathDecomposition loose{{{0, 1, 2}, {1, 2, 3}, {1, 2, 3}}};
    CHECK_THROWS_AS(embed_pw2_in_xi(cycle_graph(4), loose), std::invalid_argument);
}

TEST_CASE("xi_from_double_path") {
    {
        auto out = xi_from_double_path(3, 3, {0, 1, 2});
        CHECK(out.run.direction == RunDirection::increasing);
        CHECK(verify_model(out.host, out.pattern, out.model).empty());
    }
    {
        auto out = xi_from_double_path(3, 3, {2, 1, 0});
        CHECK(out.run.direction == RunDirection::decreasing);
        CHECK(verify_model(out.host, out.pattern, out.model).empty());
    }
    {
        auto perm = shuffled(10, 5);
        auto out = xi_from_double_path(4, 10, perm);
        CHECK(verify_model(out.host, out.pattern, out.model).empty());
        CHECK(is_minor(xi(4), out.host).outcome != SearchOutcome::absent);
    }
    CHECK_THROWS_AS(xi_from_double_path(1, 3, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(xi_from_double_path(4, 3, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("yurt_from_lambda_comb") {
    {
        Graph tree = comb(4);
        std::vector<int> teeth{4, 5, 6, 7};
        auto inst = lambda_build(tree, 4, teeth);
        auto out = yurt_from_lambda_comb(inst, 2);
        CHECK(verify_model(inst.flat, out.pattern, out.model).empty());
    }
    {
        // the paper-sized comb for k = 3: l = k^4 - 4k^3 + 8k^2 - 8k + 4 = 31
        Graph tree = comb(31);
        std::vector<int> teeth;
        for (int i : shuffled(31, 9)) teeth.push_back(31 + i);
        auto inst = lambda_build(tree, 31, teeth);
        auto out = yurt_from_lambda_comb(inst, 3);
        CHECK(verify_model(inst.flat, out.pattern, out.model).empty());
        CHECK(out.pattern == yurt(3));
    }
    {
        Graph tree = comb(4);
        std::vector<int> teeth{4, 5, 6, 7};
        auto inst = lambda_build(tree, 4, teeth);
        CHECK_THROWS_AS(yurt_from_lambda_comb(inst, 3), std::invalid_argument);  // 4 < 5 teeth
    }
}
