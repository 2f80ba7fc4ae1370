#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ganc/graph.hpp"
#include "test_support.hpp"

using namespace ganc;

namespace {

LoadedGraph load_text(const std::string& text, LoadOptions opts = {}) {
    std::istringstream in(text);
    return load_edge_list(in, opts);
}

}  // namespace

TEST_CASE("unweighted path graph loads with unit weights") {
    auto loaded = load_text("a b\nb c\n");
    const WeightedGraph& g = loaded.graph;
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(*loaded.ids.find("a")) == 1.0);
    CHECK(g.degree(*loaded.ids.find("b")) == 2.0);
    CHECK(g.degree(*loaded.ids.find("c")) == 1.0);
    CHECK(loaded.ids.token(0) == "a");  // first-appearance order
}

TEST_CASE("tokens are arbitrary UTF-8 strings") {
    auto loaded = load_text("αβ γδ\nγδ node:3\n");
    CHECK(loaded.graph.node_count() == 3);
    CHECK(loaded.ids.token(0) == "αβ");
    CHECK(*loaded.ids.find("node:3") == 2);
    std::ostringstream out;
    write_edge_list(out, loaded.graph, loaded.ids);
    CHECK(out.str() == "αβ γδ\nγδ node:3\n");
}

TEST_CASE("reciprocal orientations accumulate onto one undirected pair") {
    auto loaded = load_text("0 1 2.0\n1 0 3.0\n", {.weighted = true});
    CHECK(loaded.graph.edge_count() == 1);
    CHECK(loaded.graph.weight(0, 1) == 5.0);
    CHECK(loaded.graph.degree(0) == 5.0);
    CHECK(loaded.graph.degree(1) == 5.0);

    auto sym = load_text("0 1 2.0\n1 0 3.0\n", {.weighted = true, .symmetrize = true});
    CHECK(sym.graph.weight(0, 1) == 5.0);
}

TEST_CASE("triangle total weight counts each edge from both endpoints") {
    auto loaded = load_text("0 1\n1 2\n2 0\n");
    CHECK(loaded.graph.total_weight() == 6.0);
    CHECK(loaded.graph.edge_count() == 3);
}

TEST_CASE("duplicate lines sum and self-loops are stored once") {
    auto loaded = load_text("# comment\n\na b 1.5\na b 0.5\na a 2\n", {.weighted = true});
    const WeightedGraph& g = loaded.graph;
    std::uint32_t a = *loaded.ids.find("a");
    CHECK(g.weight(a, a) == 2.0);
    CHECK(g.self_weight(a) == 2.0);
    CHECK(g.degree(a) == 4.0);  // self-loop counted once
    CHECK(g.edge_count() == 2);
    CHECK(g.total_weight() == doctest::Approx(4.0 + 2.0).epsilon(1e-15));
}

TEST_CASE("malformed input is rejected with a line number") {
    CHECK_THROWS_WITH_AS(load_text("a b\nc\n"), doctest::Contains("line 2"), InputError);
    CHECK_THROWS_WITH_AS(load_text("a b c d\n"), doctest::Contains("line 1"), InputError);
    CHECK_THROWS_WITH_AS(load_text("a b -1\n", {.weighted = true}),
                         doctest::Contains("negative weight"), InputError);
    CHECK_THROWS_WITH_AS(load_text("a b -1\n", {.weighted = true}), doctest::Contains("line 1"),
                         InputError);
    CHECK_THROWS_WITH_AS(load_text("a b x\n", {.weighted = true}),
                         doctest::Contains("malformed weight"), InputError);
    CHECK_THROWS_AS(load_text("a b 1\n"), InputError);  // weight without --weighted
    CHECK_THROWS_AS(load_text(""), InputError);
    CHECK_THROWS_AS(load_text("# only comments\n"), InputError);
}

TEST_CASE("zero-degree nodes are rejected unless kept explicitly") {
    // The zero-weight pair is dropped, leaving c isolated.
    CHECK_THROWS_WITH_AS(load_text("a b 1\nc a 0\n", {.weighted = true}),
                         doctest::Contains("zero degree"), InputError);
    auto kept = load_text("a b 1\nc a 0\n", {.weighted = true, .keep_isolated = true});
    CHECK(kept.graph.node_count() == 3);
    CHECK(kept.graph.has_isolated_node());
    auto lcc = largest_connected_component(kept.graph);
    CHECK(lcc.graph.node_count() == 2);
    CHECK_FALSE(lcc.graph.has_isolated_node());
}

TEST_CASE("edge list round-trips exactly") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        WeightedGraph g = test::random_connected_graph(rng, 40, 2.0, true, true);
        NodeIdMap ids = numeric_tokens(g.node_count());
        std::ostringstream out;
        write_edge_list(out, g, ids);
        auto reloaded = load_text(out.str(), {.weighted = true});
        REQUIRE(reloaded.graph.node_count() == g.node_count());
        CHECK(reloaded.graph.edge_count() == g.edge_count());
        CHECK(reloaded.graph.total_weight() == g.total_weight());
        for (std::uint32_t u = 0; u < g.node_count(); ++u) {
            std::uint32_t mapped = *reloaded.ids.find(ids.token(u));
            CHECK(reloaded.graph.degree(mapped) == g.degree(u));
        }
    }
}

TEST_CASE("degrees match a from-scratch recomputation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        WeightedGraph g = test::random_connected_graph(rng, 60, 1.5, true, true);
        double m = 0.0;
        for (std::uint32_t u = 0; u < g.node_count(); ++u) {
            double d = 0.0;
            for (const Neighbor& nb : g.neighbors(u)) d += nb.weight;
            CHECK(g.degree(u) == doctest::Approx(d).epsilon(1e-12));
            m += g.degree(u);
        }
        CHECK(g.total_weight() == m);
    }
}

TEST_CASE("adjacency is symmetric with identical weights") {
    std::mt19937_64 rng(13);
    WeightedGraph g = test::random_connected_graph(rng, 50, 2.0, true, true);
    for (std::uint32_t u = 0; u < g.node_count(); ++u)
        for (const Neighbor& nb : g.neighbors(u)) CHECK(g.weight(nb.node, u) == nb.weight);
}

TEST_CASE("connected component counting") {
    CHECK(connected_component_count(test::triangle_graph()) == 1);
    CHECK(connected_component_count(test::make_graph(4, {{0, 1, 1}, {2, 3, 1}})) == 2);
    // star
    CHECK(connected_component_count(
              test::make_graph(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}})) == 1);
}

TEST_CASE("largest connected component extraction") {
    SUBCASE("connected graph is returned whole") {
        WeightedGraph g = test::triangle_graph();
        auto lcc = largest_connected_component(g);
        CHECK(lcc.graph.node_count() == 3);
        CHECK(lcc.kept == std::vector<std::uint32_t>{0, 1, 2});
    }
    SUBCASE("larger component wins") {
        WeightedGraph g = test::make_graph(5, {{0, 1, 1}, {2, 3, 1}, {3, 4, 1}});
        auto lcc = largest_connected_component(g);
        CHECK(lcc.graph.node_count() == 3);
        CHECK(lcc.kept == std::vector<std::uint32_t>{2, 3, 4});
        CHECK(connected_component_count(lcc.graph) == 1);
    }
    SUBCASE("size ties go to the component with the smallest id") {
        WeightedGraph g = test::make_graph(4, {{2, 3, 1}, {0, 1, 1}});
        auto lcc = largest_connected_component(g);
        CHECK(lcc.kept == std::vector<std::uint32_t>{0, 1});
    }
    SUBCASE("token remap composes with the original map") {
        auto loaded = load_text("x y\np q\nq r\n");
        auto lcc = largest_connected_component(loaded.graph);
        NodeIdMap sub = remap_tokens(loaded.ids, lcc.kept);
        CHECK(sub.size() == 3);
        CHECK(sub.token(0) == "p");
        CHECK(*sub.find("r") == 2);
    }
}
