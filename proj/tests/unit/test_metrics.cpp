#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "svc/errors.hpp"
#include "svc/graph.hpp"
#include "svc/metrics.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using namespace svc;

namespace {

StakeholderId id(const std::string& raw) { return StakeholderId::from_raw(raw); }

// n nodes named v00..v<n-1>, edges by index pair.
SimpleGraph graph_of(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<StakeholderId> nodes;
    for (int i = 0; i < n; ++i) {
        std::string name = "v" + std::string(i < 10 ? "0" : "") + std::to_string(i);
        nodes.push_back(id(name));
    }
    std::vector<std::pair<StakeholderId, StakeholderId>> pairs;
    for (auto [a, b] : edges) pairs.emplace_back(nodes[a], nodes[b]);
    return SimpleGraph::build(std::move(nodes), pairs);
}

SimpleGraph triangle() { return graph_of(3, {{0, 1}, {1, 2}, {0, 2}}); }
SimpleGraph star4() { return graph_of(4, {{0, 1}, {0, 2}, {0, 3}}); }
SimpleGraph k4() { return graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
SimpleGraph cycle4() { return graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
SimpleGraph triangle_with_pendant() { return graph_of(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

template <typename F>
ErrorCode error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io; // unreachable
}

} // namespace

TEST_CASE("average degree") {
    CHECK(average_degree(triangle()) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(average_degree(star4()) == doctest::Approx(1.5).epsilon(1e-12));
    SUBCASE("93 nodes, 128 edges") {
        // Ring of 93 plus 35 extra chords = 128 edges.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 93; ++i) edges.emplace_back(i, (i + 1) % 93);
        for (int i = 0; i < 35; ++i) edges.emplace_back(i, i + 40);
        auto sg = graph_of(93, edges);
        REQUIRE(sg.n_nodes() == 93);
        REQUIRE(sg.n_edges() == 128);
        double k = average_degree(sg);
        CHECK(k == doctest::Approx(256.0 / 93.0).epsilon(1e-12));
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", k);
        CHECK(std::string(buf) == "2.7527");
        CHECK(std::round(k * 100) / 100 == doctest::Approx(2.75));

        double rho = density(sg);
        CHECK(rho == doctest::Approx(256.0 / (93.0 * 92.0)).epsilon(1e-12));
        CHECK(std::fabs(rho - 0.029920) < 1e-6); // quoted to six figures
        std::snprintf(buf, sizeof buf, "%.6f", rho);
        CHECK(std::string(buf) == "0.029921"); // exact value 0.02992052... rounds up
    }
    SUBCASE("empty graph") {
        CHECK(error_code_of([] { (void)average_degree(SimpleGraph{}); }) == ErrorCode::EmptyGraph);
    }
}

TEST_CASE("density") {
    CHECK(density(k4()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(density(graph_of(5, {})) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(error_code_of([] { (void)density(graph_of(1, {})); }) == ErrorCode::TooSmall);
    CHECK(error_code_of([] { (void)density(SimpleGraph{}); }) == ErrorCode::TooSmall);
}

TEST_CASE("closed-form identities hold exactly") {
    test::Rng rng(81);
    for (int round = 0; round < 40; ++round) {
        auto sg = test::random_graph(rng, 2 + static_cast<int>(rng.below(10)),
                                     static_cast<int>(rng.below(80)));
        const double v = sg.n_nodes(), e = sg.n_edges();
        CHECK(average_degree(sg) == 2.0 * e / v);
        CHECK(density(sg) == 2.0 * e / (v * (v - 1.0)));
    }
}

TEST_CASE("average clustering") {
    CHECK(average_clustering(triangle()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(average_clustering(star4()) == doctest::Approx(0.0).epsilon(1e-12));
    SUBCASE("triangle with pendant") {
        // Node 0: neighbors {1,2,3}, one link among them -> 1/3; nodes 1,2 -> 1;
        // pendant -> 0. Mean = (1/3 + 1 + 1 + 0)/4 = 7/12.
        double c = average_clustering(triangle_with_pendant());
        CHECK(c == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
        CHECK(c == doctest::Approx(0.58333).epsilon(1e-4));
    }
    SUBCASE("policy: exclude low-degree nodes") {
        double c = average_clustering(triangle_with_pendant(), LowDegreePolicy::Exclude);
        CHECK(c == doctest::Approx((1.0 / 3.0 + 1.0 + 1.0) / 3.0).epsilon(1e-12));
        CHECK(error_code_of([] {
                  (void)average_clustering(graph_of(3, {{0, 1}}), LowDegreePolicy::Exclude);
              }) == ErrorCode::NoQualifyingDegrees);
    }
    SUBCASE("empty graph") {
        CHECK(error_code_of([] { (void)average_clustering(SimpleGraph{}); }) ==
              ErrorCode::EmptyGraph);
    }
}

TEST_CASE("assortativity") {
    SUBCASE("star S_4") {
        auto r = assortativity(star4());
        REQUIRE(r.has_value());
        CHECK(*r == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("triangle with pendant") {
        // Ordered endpoint degree pairs: (2,2) x2 from the 1-2 edge, (2,3) and
        // (3,2) x2 from the two hub-triangle edges, (3,1),(1,3) from the
        // pendant. Pearson over those eight pairs is -5/7.
        auto r = assortativity(triangle_with_pendant());
        REQUIRE(r.has_value());
        CHECK(*r == doctest::Approx(-5.0 / 7.0).epsilon(1e-12));
        CHECK(*r == doctest::Approx(-0.714285).epsilon(1e-5));
    }
    SUBCASE("regular graph is undefined") {
        CHECK(!assortativity(cycle4()).has_value());
        CHECK(!assortativity(k4()).has_value());
        CHECK(!assortativity(triangle()).has_value());
    }
    SUBCASE("no edges") {
        CHECK(error_code_of([] { (void)assortativity(graph_of(3, {})); }) == ErrorCode::NoEdges);
    }
}

TEST_CASE("power-law gamma") {
    SUBCASE("all-ones sample") {
        auto g = fit_power_law_gamma({1, 1, 1, 1}, 1);
        REQUIRE(g.has_value());
        CHECK(*g == doctest::Approx(1.0 + 1.0 / std::log(2.0)).epsilon(1e-12));
        CHECK(*g == doctest::Approx(2.4427).epsilon(1e-4));
    }
    SUBCASE("k_min = 2") {
        auto g = fit_power_law_gamma({2, 2, 2, 2}, 2);
        REQUIRE(g.has_value());
        CHECK(*g == doctest::Approx(1.0 + 1.0 / std::log(2.0 / 1.5)).epsilon(1e-12));
        CHECK(*g == doctest::Approx(4.4761).epsilon(1e-4));
    }
    SUBCASE("single sample") {
        auto g = fit_power_law_gamma({1}, 1);
        REQUIRE(g.has_value());
        CHECK(*g == doctest::Approx(2.4427).epsilon(1e-4));
    }
    SUBCASE("scale-free in sample size") {
        auto reference = fit_power_law_gamma({1}, 1);
        for (int n : {2, 5, 17, 100}) {
            std::vector<int> degrees(static_cast<size_t>(n), 1);
            auto g = fit_power_law_gamma(degrees, 1);
            REQUIRE(g.has_value());
            CHECK(*g == doctest::Approx(*reference).epsilon(1e-12));
        }
    }
    SUBCASE("zeros and sub-threshold degrees are ignored") {
        auto with_zeros = fit_power_law_gamma({0, 0, 1, 1}, 1);
        auto without = fit_power_law_gamma({1, 1}, 1);
        REQUIRE(with_zeros.has_value());
        CHECK(*with_zeros == doctest::Approx(*without).epsilon(1e-12));
        auto filtered = fit_power_law_gamma({1, 2, 3}, 2);
        auto direct = fit_power_law_gamma({2, 3}, 2);
        CHECK(*filtered == doctest::Approx(*direct).epsilon(1e-12));
    }
    SUBCASE("no qualifying degrees") {
        CHECK(error_code_of([] { (void)fit_power_law_gamma({0, 0}, 1); }) ==
              ErrorCode::NoQualifyingDegrees);
        CHECK(error_code_of([] { (void)fit_power_law_gamma({}, 1); }) ==
              ErrorCode::NoQualifyingDegrees);
        CHECK(error_code_of([] { (void)fit_power_law_gamma({1, 2}, 3); }) ==
              ErrorCode::NoQualifyingDegrees);
    }
}

TEST_CASE("betweenness") {
    SUBCASE("path a-b-c") {
        auto sg = graph_of(3, {{0, 1}, {1, 2}});
        auto values = betweenness_values(sg);
        CHECK(values[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(values[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(values[2] == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("star center carries every leaf pair") {
        auto sg = star4();
        auto values = betweenness_values(sg);
        CHECK(values[0] == doctest::Approx(3.0).epsilon(1e-12));
        for (int i = 1; i < 4; ++i) CHECK(values[i] == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("complete graph has none") {
        for (double v : betweenness_values(k4())) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("split shortest paths") {
        // Two equal-length paths between 0 and 3; nodes 1 and 2 get 1/2 each.
        auto sg = cycle4();
        for (double v : betweenness_values(sg)) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("centrality rankings are ordered and tie-broken by id") {
    auto sg = star4(); // v00 is the hub
    auto by_degree = degree_centrality(sg);
    REQUIRE(by_degree.size() == 4);
    CHECK(by_degree[0].first == id("v00"));
    CHECK(by_degree[0].second == 3);
    CHECK(by_degree[1].first == id("v01")); // leaves tie at 1, id order
    CHECK(by_degree[2].first == id("v02"));
    CHECK(by_degree[3].first == id("v03"));

    auto by_betweenness = betweenness_centrality(sg);
    CHECK(by_betweenness[0].first == id("v00"));
    CHECK(by_betweenness[0].second == doctest::Approx(3.0));
    CHECK(by_betweenness[1].first == id("v01"));
}

TEST_CASE("oracle equivalence on random and exhaustive small graphs") {
    auto check_graph = [](const SimpleGraph& sg) {
        auto m = test::to_matrix(sg);

        CHECK(average_clustering(sg) ==
              doctest::Approx(test::oracle_average_clustering(m)).epsilon(1e-9));

        if (sg.n_edges() > 0) {
            auto got = assortativity(sg);
            auto expected = test::oracle_assortativity(m);
            REQUIRE(got.has_value() == expected.has_value());
            if (got) CHECK(*got == doctest::Approx(*expected).epsilon(1e-9));
        }

        auto got_b = betweenness_values(sg);
        auto expected_b = test::oracle_betweenness(m);
        REQUIRE(got_b.size() == expected_b.size());
        for (size_t i = 0; i < got_b.size(); ++i)
            CHECK(got_b[i] == doctest::Approx(expected_b[i]).epsilon(1e-9));
    };

    SUBCASE("random graphs up to 7 nodes") {
        test::Rng rng(82);
        for (int round = 0; round < 120; ++round) {
            int n = 1 + static_cast<int>(rng.below(7));
            check_graph(test::random_graph(rng, n, static_cast<int>(rng.below(101))));
        }
    }
    SUBCASE("every 4-node graph") {
        const std::vector<std::pair<int, int>> all_pairs = {{0, 1}, {0, 2}, {0, 3},
                                                            {1, 2}, {1, 3}, {2, 3}};
        for (int mask = 0; mask < 64; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int bit = 0; bit < 6; ++bit)
                if (mask & (1 << bit)) edges.push_back(all_pairs[static_cast<size_t>(bit)]);
            check_graph(graph_of(4, edges));
        }
    }
}

TEST_CASE("robustness curve") {
    SUBCASE("hub removal disconnects the star") {
        auto curve = robustness_curve(star4(), RemovalStrategy::HighestDegreeFirst);
        REQUIRE(curve.size() == 5);
        CHECK(curve[0] == RobustnessPoint{0.0, 1.0});
        CHECK(curve[1].fraction_removed == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(curve[1].lcc_fraction == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(curve.back() == RobustnessPoint{1.0, 0.0});
    }
    SUBCASE("triangle loses a third per step") {
        auto curve = robustness_curve(triangle(), RemovalStrategy::HighestDegreeFirst);
        REQUIRE(curve.size() == 4);
        CHECK(curve[1].lcc_fraction == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(curve[2].lcc_fraction == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(curve[3].lcc_fraction == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("single node") {
        auto curve = robustness_curve(graph_of(1, {}), RemovalStrategy::HighestDegreeFirst);
        REQUIRE(curve.size() == 2);
        CHECK(curve[0] == RobustnessPoint{0.0, 1.0});
        CHECK(curve[1] == RobustnessPoint{1.0, 0.0});
    }
    SUBCASE("random strategy is reproducible per seed") {
        test::Rng rng(83);
        auto sg = test::random_graph(rng, 9, 35);
        auto a = robustness_curve(sg, RemovalStrategy::Random, 42);
        auto b = robustness_curve(sg, RemovalStrategy::Random, 42);
        CHECK(a == b);
        // Same length regardless of seed; trajectory may differ.
        auto c = robustness_curve(sg, RemovalStrategy::Random, 7);
        CHECK(c.size() == a.size());
    }
    SUBCASE("non-increasing on trees under highest-degree-first") {
        test::Rng rng(84);
        for (int round = 0; round < 30; ++round) {
            auto tree = test::random_tree(rng, 1 + static_cast<int>(rng.below(14)));
            auto curve = robustness_curve(tree, RemovalStrategy::HighestDegreeFirst);
            for (size_t i = 1; i < curve.size(); ++i)
                CHECK(curve[i].lcc_fraction <= curve[i - 1].lcc_fraction + 1e-12);
        }
    }
    SUBCASE("empty graph") {
        CHECK(error_code_of([] {
                  (void)robustness_curve(SimpleGraph{}, RemovalStrategy::HighestDegreeFirst);
              }) == ErrorCode::EmptyGraph);
    }
}

TEST_CASE("compute_metrics bundles the statistics") {
    auto report = compute_metrics(triangle_with_pendant());
    CHECK(report.n_nodes == 4);
    CHECK(report.n_edges == 4);
    CHECK(report.avg_degree == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(report.density == doctest::Approx(4.0 / 6.0).epsilon(1e-12));
    CHECK(report.avg_clustering == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
    REQUIRE(report.assortativity.has_value());
    CHECK(*report.assortativity == doctest::Approx(-5.0 / 7.0).epsilon(1e-12));
    REQUIRE(report.gamma.has_value());
    CHECK(report.component_sizes == std::vector<int>{4});

    SUBCASE("degenerate statistics become nullopt") {
        auto regular = compute_metrics(cycle4());
        CHECK(!regular.assortativity.has_value()); // zero variance
        auto edgeless = compute_metrics(graph_of(3, {}));
        CHECK(!edgeless.assortativity.has_value());
        CHECK(!edgeless.gamma.has_value()); // all degrees below k_min
        CHECK(edgeless.component_sizes == std::vector<int>{1, 1, 1});
    }
    SUBCASE("too small to report") {
        CHECK(error_code_of([] { (void)compute_metrics(graph_of(1, {})); }) == ErrorCode::TooSmall);
        CHECK(error_code_of([] { (void)compute_metrics(SimpleGraph{}); }) == ErrorCode::EmptyGraph);
    }
}
