#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ganc/agglomerate.hpp"
#include "ganc/metrics.hpp"
#include "ganc/refine.hpp"
#include "ganc/testkit.hpp"
#include "test_support.hpp"

using namespace ganc;

TEST_CASE("ring of cliques shape") {
    auto [g, truth] = ring_of_cliques(24, 5);
    CHECK(g.node_count() == 120);
    CHECK(g.edge_count() == 264);  // 24 * C(5,2) + 24 bridges
    CHECK(truth.k == 24);
    Partition p = Partition::from_assignment(g, truth.labels);
    CHECK(nassoc(g, p) == doctest::Approx(240.0 / 11.0).epsilon(1e-12));

    auto [small, small_truth] = ring_of_cliques(3, 2);
    CHECK(small.node_count() == 6);
    CHECK(small.edge_count() == 6);

    CHECK_THROWS_AS(ring_of_cliques(2, 5), InfeasibleError);
    CHECK_THROWS_AS(ring_of_cliques(3, 1), InfeasibleError);
}

TEST_CASE("two chains fixture") {
    auto [g, truth] = two_chains();
    CHECK(g.node_count() == 8);
    CHECK(g.edge_count() == 6);
    CHECK(connected_component_count(g) == 2);
    Partition p = Partition::from_assignment(g, truth.labels);
    CHECK(nassoc(g, p) == doctest::Approx(2.0).epsilon(1e-14));
    Partition pairs = Partition::from_assignment(g, {0, 0, 1, 1, 2, 2, 3, 3});
    CHECK(nassoc(g, pairs) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("planted partition is deterministic under a seed") {
    PlantedParams params;
    params.n = 200;
    params.c_min = 10;
    params.c_max = 25;
    params.mu = 0.2;
    params.d_avg = 12;
    params.d_max = 16;
    params.seed = 7;

    auto serialize = [](const WeightedGraph& g) {
        std::ostringstream out;
        write_edge_list(out, g, numeric_tokens(g.node_count()));
        return out.str();
    };
    auto first = planted_partition(params);
    auto second = planted_partition(params);
    CHECK(serialize(first.graph) == serialize(second.graph));
    CHECK(first.truth.labels == second.truth.labels);

    params.seed = 8;
    CHECK(serialize(planted_partition(params).graph) != serialize(first.graph));
}

TEST_CASE("planted partition respects sizes, degrees and labels") {
    PlantedParams params;
    params.n = 500;
    params.c_min = 20;
    params.c_max = 50;
    params.mu = 0.3;
    params.d_avg = 15;
    params.d_max = 20;
    params.seed = 3;
    auto [g, truth] = planted_partition(params);
    CHECK(g.node_count() == 500);
    CHECK(truth.labels.size() == 500);
    CHECK(truth.params.seed == 3);

    std::vector<std::uint32_t> sizes(truth.k, 0);
    for (std::uint32_t label : truth.labels) ++sizes[label];
    for (std::uint32_t size : sizes) {
        CHECK(size >= params.c_min);
        CHECK(size <= params.c_max);
    }
    // unit weights, so degree == neighbor count
    for (std::uint32_t u = 0; u < g.node_count(); ++u)
        CHECK(g.neighbors(u).size() <= params.d_max);
    Partition truth_partition = Partition::from_assignment(g, truth.labels);
    CHECK(truth_partition.cluster_count() == truth.k);
}

TEST_CASE("mu = 0 keeps every edge inside its cluster") {
    PlantedParams params;
    params.n = 120;
    params.c_min = 16;
    params.c_max = 24;
    params.mu = 0.0;
    params.d_avg = 10;
    params.d_max = 14;
    params.seed = 11;
    auto [g, truth] = planted_partition(params);
    for (std::uint32_t u = 0; u < g.node_count(); ++u)
        for (const Neighbor& nb : g.neighbors(u))
            CHECK(truth.labels[u] == truth.labels[nb.node]);
    CHECK(connected_component_count(g) == static_cast<int>(truth.k));
}

TEST_CASE("fixed-k planted partition balances cluster sizes") {
    PlantedParams params;
    params.n = 103;
    params.k = 10;
    params.mu = 0.1;
    params.d_avg = 8;
    params.d_max = 12;
    params.seed = 5;
    auto [g, truth] = planted_partition(params);
    CHECK(truth.k == 10);
    std::vector<std::uint32_t> sizes(10, 0);
    for (std::uint32_t label : truth.labels) ++sizes[label];
    CHECK(*std::min_element(sizes.begin(), sizes.end()) == 10);
    CHECK(*std::max_element(sizes.begin(), sizes.end()) == 11);
}

TEST_CASE("planted partition rejects infeasible parameters") {
    PlantedParams params;
    params.n = 10;
    params.c_min = 20;
    params.c_max = 30;
    params.d_avg = 5;
    params.d_max = 5;
    CHECK_THROWS_AS(planted_partition(params), InfeasibleError);
    params.c_min = 2;
    params.c_max = 5;
    params.mu = 1.0;
    CHECK_THROWS_AS(planted_partition(params), InfeasibleError);
    params.mu = 0.1;
    params.k = 11;
    CHECK_THROWS_AS(planted_partition(params), InfeasibleError);
}

TEST_CASE("oracle on desk-size fixtures") {
    SUBCASE("K2 at k=1 is exactly 1") {
        OracleResult r = brute_force_max_nassoc(test::make_graph(2, {{0, 1, 1.0}}), 1);
        CHECK(r.nassoc == 1.0);
    }
    SUBCASE("4-chain optimum splits in the middle") {
        OracleResult r = brute_force_max_nassoc(test::chain_graph(4), 2);
        CHECK(r.nassoc == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
        CHECK(r.partition.labels()[0] == 0);
        CHECK(r.partition.labels()[1] == 0);
        CHECK(r.partition.labels()[2] == 1);
        CHECK(r.partition.labels()[3] == 1);
    }
    SUBCASE("triangle ties resolve to the lexicographically smallest assignment") {
        OracleResult r = brute_force_max_nassoc(test::triangle_graph(), 2);
        CHECK(r.nassoc == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(r.partition.labels()[0] == 0);
        CHECK(r.partition.labels()[1] == 0);
        CHECK(r.partition.labels()[2] == 1);
    }
    SUBCASE("limits") {
        CHECK_THROWS_AS(brute_force_max_nassoc(test::chain_graph(13), 2), InfeasibleError);
        CHECK_THROWS_AS(brute_force_max_nassoc(test::chain_graph(4), 5), InfeasibleError);
        CHECK_THROWS_AS(brute_force_max_nassoc(test::chain_graph(4), 0), InfeasibleError);
    }
}

TEST_CASE("oracle value is exactly 1 at k=1 on weighted graphs") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        WeightedGraph g = test::random_connected_graph(rng, 4 + rng() % 7, 1.5, true, true);
        CHECK(brute_force_max_nassoc(g, 1).nassoc == 1.0);
    }
}

TEST_CASE("oracle dominates the partitions every other module produces") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 15; ++trial) {
        const std::uint32_t n = 4 + rng() % 6;  // up to 9
        WeightedGraph g = test::random_connected_graph(rng, n, 1.2, trial % 2 == 0, false);
        const std::uint32_t k = 2 + rng() % 2;
        if (k > n) continue;
        OracleResult best = brute_force_max_nassoc(g, k);

        Dendrogram d = build_dendrogram(g);
        Partition raw = d.flat_partition(g, k);
        CHECK(best.nassoc >= nassoc(g, raw) - 1e-9);
        Partition refined = refine(g, raw).partition;
        CHECK(best.nassoc >= nassoc(g, refined) - 1e-9);
        CHECK(best.nassoc >= nassoc(g, Partition::from_assignment(
                                            g, test::random_labels(rng, n, k))) -
                                 1e-9);
    }
}

TEST_CASE("generated truths are valid partitions of the generated graphs") {
    auto check_truth = [](const GeneratedGraph& gen) {
        Partition p = Partition::from_assignment(gen.graph, gen.truth.labels);
        CHECK(p.cluster_count() == gen.truth.k);
    };
    check_truth(ring_of_cliques(5, 3));
    check_truth(two_chains());
    PlantedParams params;
    params.n = 60;
    params.c_min = 8;
    params.c_max = 16;
    params.mu = 0.25;
    params.d_avg = 6;
    params.d_max = 10;
    params.seed = 2;
    check_truth(planted_partition(params));
}
