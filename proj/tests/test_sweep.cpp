#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "minors/patterns.hpp"
#include "minors/sweep.hpp"
#include "minors/width.hpp"

using namespace minors;

TEST_CASE("run_sweep wheel") {
    SweepSpec spec;
    spec.family = "wheel";
    spec.param_min = 3;
    spec.param_max = 5;
    spec.repeats = 5;
    spec.seed = 7;
    auto report = run_sweep(spec);
    REQUIRE(report.rows.size() == 15);
    CHECK_FALSE(report.any_violation());
    for (const auto& row : report.rows) {
        CHECK(row.outcome == "verified");
        CHECK(row.order_achieved >= row.order_promised);
    }
    CHECK(report.rows[0].params.find("family=wheel") != std::string::npos);
    CHECK(report.rows[0].params.find("h=3") != std::string::npos);
}

TEST_CASE("run_sweep is deterministic for a fixed seed") {
    for (const char* family : {"wheel", "pw2", "xi", "yurt", "es"}) {
        SweepSpec spec;
        spec.family = family;
        spec.param_min = 3;
        spec.param_max = 4;
        spec.repeats = 3;
        spec.seed = 123;
        auto a = sweep_to_csv(run_sweep(spec));
        auto b = sweep_to_csv(run_sweep(spec));
        CHECK(a == b);

        spec.seed = 124;
        auto c = sweep_to_csv(run_sweep(spec));
        CHECK(a.substr(0, a.find('\n')) == c.substr(0, c.find('\n')));  // same header
    }
}

TEST_CASE("run_sweep rejects out-of-range parameters") {
    SweepSpec spec;
    spec.family = "wheel";
    spec.param_min = 2;
    spec.param_max = 4;
    try {
        run_sweep(spec);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("h > 2") != std::string::npos);
    }

    spec.family = "no_such_family";
    spec.param_min = 3;
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

TEST_CASE("run_sweep es exhaustive mode agrees with the oracle") {
    SweepSpec spec;
    spec.family = "es";
    spec.param_min = 4;
    spec.param_max = 4;
    spec.repeats = 0;  // all 24 permutations
    spec.k = 2;
    auto report = run_sweep(spec);
    CHECK(report.rows.size() == 24);
    CHECK_FALSE(report.any_violation());
}

TEST_CASE("sweep report formats") {
    SweepSpec spec;
    spec.family = "yurt";
    spec.param_min = 2;
    spec.param_max = 3;
    spec.seed = 1;
    auto report = run_sweep(spec);

    auto csv = sweep_to_csv(report);
    CHECK(csv.rfind("params,outcome,order_achieved,order_promised,witness\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(report.rows.size()));

    auto timed = sweep_to_csv(report, true);
    CHECK(timed.rfind("params,outcome,order_achieved,order_promised,witness,wall_ms\n", 0) == 0);

    auto js = sweep_to_json(report);
    CHECK(js.find("\"rows\"") != std::string::npos);
    CHECK(js.find("\"outcome\": \"verified\"") != std::string::npos);
    CHECK(js.find("wall_ms") == std::string::npos);
}

TEST_CASE("cross_check") {
    // bound far above any small treewidth: vacuously consistent
    auto vac = cross_check(BoundFamily::pw2, 4, xi(6));
    CHECK(vac.vacuous);
    CHECK(vac.consistent);
    CHECK(vac.treewidth == 2);

    // K_8 against wheel order 3: bound not reached, but the minor is present
    auto k8 = cross_check(BoundFamily::wheel, 3, complete_graph(8));
    CHECK(k8.treewidth == 7);
    CHECK(k8.bound_value == 106);
    CHECK(k8.minor == SearchOutcome::found);
    CHECK(k8.consistent);

    // trees keep every family honest
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        Graph t = random_tree(6, rng);
        for (auto fam : {BoundFamily::wheel, BoundFamily::double_wheel, BoundFamily::pw2,
                         BoundFamily::yurt})
            CHECK(cross_check(fam, 3, t).consistent);
    }
}

TEST_CASE("random graph helpers") {
    std::mt19937 rng(17);
    for (int n = 2; n <= 12; ++n) {
        Graph t = random_tree(n, rng);
        CHECK(t.num_vertices() == n);
        CHECK(t.num_edges() == static_cast<std::size_t>(n - 1));
        CHECK(is_connected(t));

        Graph g = random_pw2_graph(n, rng);
        CHECK(is_connected(g));
        CHECK(exact_pathwidth_value(g) <= 2);
    }
}
