#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nutkit/catalog.hpp"
#include "nutkit/graph.hpp"
#include "oracles.hpp"

using nutkit::Graph;
using nutkit::GraphError;

TEST_CASE("construction accepts K1 and the first 7-vertex nut graph") {
    Graph k1(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph fig1_left(7, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(fig1_left.edge_count() == 8);
    CHECK(fig1_left.degree(4) == 4);
}

TEST_CASE("construction rejects exactly the three edge error classes") {
    CHECK_THROWS_WITH_AS(Graph(4, {{0, 0}}), doctest::Contains("self-loop"), GraphError);
    CHECK_THROWS_AS(Graph(4, {{0, 5}}), GraphError);
    CHECK_THROWS_AS(Graph(4, {{1, 0}, {0, 1}}), GraphError);
    try {
        Graph(4, {{0, 4}});
        FAIL("expected rejection");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::LabelOutOfRange);
    }
    try {
        Graph(3, {{0, 1}, {1, 0}});
        FAIL("expected rejection");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::DuplicateEdge);
    }
    CHECK_THROWS_AS(Graph(0, {}), GraphError);
    // everything valid is accepted: dense graph with both edge orientations mixed
    CHECK_NOTHROW(Graph(5, {{4, 0}, {1, 3}, {2, 0}, {3, 4}}));
}

TEST_CASE("degree and regularity") {
    Graph k1(1, {});
    CHECK(k1.degree(0) == 0);
    CHECK_THROWS_AS(k1.degree(1), GraphError);

    const Graph& frucht = nutkit::seed("frucht").graph;
    for (int v = 0; v < frucht.order(); ++v) CHECK(frucht.degree(v) == 3);
    CHECK(frucht.is_regular(3));
    CHECK_FALSE(frucht.is_regular(4));

    const Graph& a4 = nutkit::seed("antiprism4").graph;
    for (int v = 0; v < a4.order(); ++v) CHECK(a4.degree(v) == 4);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.is_regular(2));

    // Fig. 1 middle graph is irregular
    CHECK_FALSE(nutkit::seed("nut7_b").graph.is_regular(3));
}

TEST_CASE("graph6 decodes K4 from C~ and encodes K1 as @") {
    Graph k4 = nutkit::parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(nutkit::write_graph6(Graph(1, {})) == "@");
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(nutkit::parse_graph6(""), GraphError);
    CHECK_THROWS_AS(nutkit::parse_graph6("C~~"), GraphError);   // trailing garbage
    CHECK_THROWS_AS(nutkit::parse_graph6("C"), GraphError);     // body too short
    CHECK_THROWS_AS(nutkit::parse_graph6("C\x20\x20"), GraphError);  // char below 0x3F
    CHECK_THROWS_AS(nutkit::parse_graph6("?"), GraphError);     // order 0 unsupported
    try {
        nutkit::parse_graph6("!!!");
        FAIL("expected rejection");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::BadFormat);
    }
}

TEST_CASE("graph6 round-trips on random graphs and all seeds") {
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = oracles::random_graph(n, 0.4, rng);
        Graph back = nutkit::parse_graph6(nutkit::write_graph6(g));
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
    }
    for (const auto& entry : nutkit::all_seeds()) {
        Graph back = nutkit::parse_graph6(nutkit::write_graph6(entry.graph));
        CHECK(back.edges() == entry.graph.edges());
    }
    // parse-then-write is the identity on valid strings
    CHECK(nutkit::write_graph6(nutkit::parse_graph6("C~")) == "C~");
    CHECK(nutkit::write_graph6(nutkit::parse_graph6("FhcGW")) == "FhcGW");
}

TEST_CASE("graph6 handles orders above 62") {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < 70; ++v) edges.emplace_back(0, v);
    Graph star(70, edges);
    Graph back = nutkit::parse_graph6(nutkit::write_graph6(star));
    CHECK(back.order() == 70);
    CHECK(back.edges() == star.edges());
}

TEST_CASE("connectivity") {
    CHECK(Graph(1, {}).connected());
    CHECK_FALSE(Graph(2, {}).connected());
    CHECK(Graph(3, {{0, 1}, {1, 2}}).connected());
    CHECK_FALSE(oracles::disjoint_union(Graph(3, {{0, 1}, {1, 2}}), Graph(2, {{0, 1}})).connected());
}

TEST_CASE("dot export lists every vertex and edge") {
    Graph p3(3, {{0, 1}, {1, 2}});
    std::string dot = nutkit::write_dot(p3);
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
}
