#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "minors/decomposition.hpp"
#include "minors/patterns.hpp"
#include "minors/width.hpp"

using namespace minors;

TEST_CASE("verify_decomposition") {
    Graph p3 = path_graph(3);
    PathDecomposition good{{{0, 1}, {1, 2}}};
    CHECK(verify_decomposition(p3, good).empty());
    CHECK(width(p3, good) == 1);

    Graph c3 = cycle_graph(3);
    PathDecomposition missing{{{0, 1}, {1, 2}}};
    auto v = verify_decomposition(c3, missing);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("edge") != std::string::npos);

    PathDecomposition torn{{{0, 1}, {2}, {1}}};
    auto v2 = verify_decomposition(p3, torn);
    REQUIRE_FALSE(v2.empty());
}

TEST_CASE("width") {
    Graph p3 = path_graph(3);
    CHECK(width(p3, PathDecomposition{{{0, 1}, {1, 2}}}) == 1);
    Graph k4 = complete_graph(4);
    CHECK(width(k4, PathDecomposition{{{0, 1, 2, 3}}}) == 3);
    CHECK_THROWS_AS(width(cycle_graph(3), PathDecomposition{{{0, 1}, {1, 2}}}),
                    std::invalid_argument);
}

TEST_CASE("make_nice") {
    Graph p3 = path_graph(3);
    auto nice = make_nice(p3, PathDecomposition{{{0, 1}, {1, 2}}});
    CHECK(nice.decomposition.bags.size() == 6);  // n introduces + n forgets
    CHECK(nice.decomposition.bags.back().empty());
    CHECK(verify_decomposition(p3, nice.decomposition).empty());
    CHECK(raw_width(nice.decomposition) == 1);

    Graph k1 = make_graph(1, {});
    auto single = make_nice(k1, PathDecomposition{{{0}}});
    CHECK(single.decomposition.bags.size() == 2);
    CHECK(single.annotation.kinds[0] == NodeKind::introduce);
    CHECK(single.annotation.kinds[1] == NodeKind::forget);

    // width preserved on random decompositions from the exact solver
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        const auto& census = testutil::connected_census(n);
        const Graph& g = census[rng() % census.size()];
        auto pw = exact_pathwidth(g);
        auto out = make_nice(g, pw.witness);
        CHECK(verify_decomposition(g, out.decomposition).empty());
        CHECK(raw_width(out.decomposition) == pw.width);
        // prefix balance: forgets never outpace introduces, spread <= width+1
        int open = 0;
        bool balanced = true;
        for (auto kind : out.annotation.kinds) {
            open += (kind == NodeKind::introduce) ? 1 : -1;
            if (open < 0 || open > pw.width + 1) balanced = false;
        }
        CHECK(balanced);
    }
}

TEST_CASE("swap_forget_introduce") {
    Graph p3 = path_graph(3);
    PathDecomposition nice{{{0}, {0, 1}, {1}, {1, 2}}};
    auto swapped = swap_forget_introduce(p3, nice, 3);
    CHECK(swapped.bags[2] == Bag{0, 1, 2});
    CHECK(verify_decomposition(p3, swapped).empty());

    CHECK_THROWS_AS(swap_forget_introduce(p3, nice, 2), std::invalid_argument);
}

TEST_CASE("compactify reference shapes") {
    Graph p4 = path_graph(4);
    auto cp = compactify(p4, exact_pathwidth(p4).witness);
    REQUIRE(cp.bags.size() == 3);
    for (const auto& b : cp.bags) CHECK(b.size() == 2);
    CHECK(verify_decomposition(p4, cp).empty());

    Graph c4 = cycle_graph(4);
    auto cc = compactify(c4, exact_pathwidth(c4).witness);
    CHECK(cc.bags.size() == 2);
    for (const auto& b : cc.bags) CHECK(b.size() == 3);

    Graph x4 = xi(4);
    auto cx = compactify(x4, exact_pathwidth(x4).witness);
    CHECK(cx.bags.size() == 10);  // 12 vertices - pw 2
    CHECK(verify_decomposition(x4, cx).empty());
}

TEST_CASE("compactify pipeline over the small census") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& g : testutil::connected_census(n)) {
            auto pw = exact_pathwidth(g);
            auto compact = compactify(g, pw.witness);
            CHECK(verify_decomposition(g, compact).empty());
            CHECK(static_cast<int>(compact.bags.size()) == n - pw.width);
            bool sizes_ok = true, no_nesting = true;
            for (std::size_t i = 0; i < compact.bags.size(); ++i) {
                if (static_cast<int>(compact.bags[i].size()) != pw.width + 1) sizes_ok = false;
                if (i > 0 && (std::includes(compact.bags[i].begin(), compact.bags[i].end(),
                                            compact.bags[i - 1].begin(), compact.bags[i - 1].end()) ||
                              std::includes(compact.bags[i - 1].begin(), compact.bags[i - 1].end(),
                                            compact.bags[i].begin(), compact.bags[i].end())))
                    no_nesting = false;
            }
            CHECK(sizes_ok);
            CHECK(no_nesting);
        }
    }
}

TEST_CASE("decomposition json round trip") {
    PathDecomposition d{{{0, 1}, {1, 2}}};
    auto back = path_decomposition_from_json(decomposition_to_json(d));
    CHECK(back.bags == d.bags);
}
