#include "doctest.h"
#include "oracles.hpp"
#include "planar/graph.hpp"

using namespace planar;

TEST_CASE("build: triangle, edgeless, K_{2,3}") {
    Graph tri = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.degree(0) == 2);
    CHECK(tri.degree(1) == 2);
    CHECK(tri.degree(2) == 2);
    CHECK(tri.edge_count() == 3);

    Graph e2 = Graph::build(2, {});
    CHECK(e2.edge_count() == 0);

    Graph k23 = Graph::build(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(k23.degree(0) == 3);
    CHECK(k23.degree(1) == 3);
    CHECK(k23.degree(2) == 2);
    CHECK(k23.degree(3) == 2);
    CHECK(k23.degree(4) == 2);
}

TEST_CASE("build: duplicate pairs collapse") {
    Graph g = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("build errors") {
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::build(65, {}), GraphError);
}

TEST_CASE("induced subgraph examples") {
    Graph k23 = Graph::build(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    auto empty = induced_subgraph(k23, {});
    CHECK(empty.graph.n() == 0);

    Bits64 side;
    side.set(2);
    side.set(3);
    side.set(4);
    auto sub = induced_subgraph(k23, side);
    CHECK(sub.graph.n() == 3);
    CHECK(sub.graph.edge_count() == 0);
    CHECK(sub.label_map == std::vector<int>{2, 3, 4});
}

TEST_CASE("adjacency symmetry, irreflexivity, degree sum on random graphs") {
    for (int t = 0; t < 200; ++t) {
        Graph g = oracle::random_graph(3 + t % 18, 0.4, 1000 + t);
        int degsum = 0;
        for (int v = 0; v < g.n(); ++v) {
            CHECK(!g.has_edge(v, v));
            degsum += g.degree(v);
            g.neighbors(v).for_each([&](int u) { CHECK(g.has_edge(u, v)); });
        }
        CHECK(degsum == 2 * g.edge_count());
    }
}

TEST_CASE("wide graph basics") {
    EdgeList es;
    for (int i = 2; i < 100; ++i) {
        es.emplace_back(0, i);
        es.emplace_back(1, i);
    }
    WideGraph g = WideGraph::build(100, es);
    CHECK(g.n() == 100);
    CHECK(g.degree(0) == 98);
    CHECK(g.degree(5) == 2);
    CHECK(g.edge_count() == 196);
    CHECK(g.has_edge(17, 0));
    CHECK(!g.has_edge(2, 3));
}
