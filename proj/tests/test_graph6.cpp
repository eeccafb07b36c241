#include "doctest.h"
#include "oracles.hpp"
#include "planar/dot.hpp"
#include "planar/graph6.hpp"

using namespace planar;

TEST_CASE("graph6: hand-packed triangle") {
    Graph tri = Graph::build(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(graph6_encode(tri) == "Bw");
    CHECK(graph6_decode("Bw").to_graph() == tri);
}

TEST_CASE("graph6: zero-vertex graph") {
    auto d = graph6_decode("?");
    CHECK(d.n == 0);
    CHECK(d.edges.empty());
    CHECK(graph6_encode(Graph::build(0, {})) == "?");
}

TEST_CASE("graph6: K_{2,8} round trip") {
    EdgeList es;
    for (int i = 2; i < 10; ++i) {
        es.emplace_back(0, i);
        es.emplace_back(1, i);
    }
    Graph g = Graph::build(10, es);
    CHECK(graph6_decode(graph6_encode(g)).to_graph() == g);
}

TEST_CASE("graph6: header tolerated on decode, never emitted") {
    Graph tri = Graph::build(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(graph6_decode(">>graph6<<Bw").to_graph() == tri);
    CHECK(graph6_encode(tri).substr(0, 2) == "Bw");
}

TEST_CASE("graph6: malformed inputs") {
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);     // length mismatch
    CHECK_THROWS_AS(graph6_decode("Bww"), Graph6Error);   // too long
    CHECK_THROWS_AS(graph6_decode("B\x01"), Graph6Error); // byte out of range
    // trailing padding bits must be zero: triangle needs 3 bits, '~' would
    // set all six
    CHECK_THROWS_AS(graph6_decode("B~"), Graph6Error);
}

TEST_CASE("graph6: wide-count header for n > 62") {
    EdgeList es;
    for (int i = 2; i < 100; ++i) {
        es.emplace_back(0, i);
        es.emplace_back(1, i);
    }
    WideGraph g = WideGraph::build(100, es);
    std::string enc = graph6_encode(g);
    CHECK(enc[0] == '~');
    auto dec = graph6_decode(enc);
    CHECK(dec.n == 100);
    CHECK(dec.edges.size() == 196);
}

TEST_CASE("graph6: round trip is the identity on random graphs") {
    for (int t = 0; t < 10000; ++t) {
        Graph g = oracle::random_graph(1 + t % 20, 0.15 + 0.04 * (t % 20), 777 + t);
        CHECK(graph6_decode(graph6_encode(g)).to_graph() == g);
    }
}

TEST_CASE("dot export") {
    Graph tri = Graph::build(3, {{0, 1}, {0, 2}, {1, 2}});
    std::string dot = dot_export(tri);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), ';') == 6);  // 3 nodes + 3 edges

    CHECK(dot_export(Graph::build(0, {})) == "graph G {\n}\n");

    Graph k23 = Graph::build(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    Bits64 side;
    side.set(0);
    side.set(1);
    std::string hdot = dot_export(k23, side);
    std::size_t marks = 0, pos = 0;
    while ((pos = hdot.find("fillcolor", pos)) != std::string::npos) {
        ++marks;
        ++pos;
    }
    CHECK(marks == 2);
}
