#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "planar/embed.hpp"
#include "planar/families.hpp"

using namespace planar;

namespace {

Graph cycle(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, e);
}

Graph complete(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::build(n, e);
}

Graph k33() {
    EdgeList e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
    return Graph::build(6, e);
}

}  // namespace

TEST_CASE("faces_of: natural rotations") {
    Graph c5 = cycle(5);
    Rotation rot(5);
    for (int i = 0; i < 5; ++i) rot[i] = {(i + 4) % 5, (i + 1) % 5};
    auto faces = faces_of(c5, rot);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].size() == 5);
    CHECK(faces[1].size() == 5);

    auto k23 = make_k2m(5);
    auto f23 = faces_of(k23.graph(), k23.rotation);
    REQUIRE(f23.size() == 3);
    for (const auto& f : f23) CHECK(f.size() == 4);
}

TEST_CASE("faces_of: invalid rotations rejected") {
    Graph c4 = cycle(4);
    Rotation bad(4);
    bad[0] = {1, 2};  // 2 is not a neighbour of 0
    bad[1] = {0, 2};
    bad[2] = {1, 3};
    bad[3] = {2, 0};
    CHECK_THROWS_AS(faces_of(c4, bad), RotationError);
    Rotation short_rot(4);
    CHECK_THROWS_AS(faces_of(c4, short_rot), RotationError);
}

TEST_CASE("non-planar rotation reported through Euler") {
    Graph k4 = complete(4);
    auto emb = embed(k4);
    CHECK(emb.faces.size() == 4);
    for (const auto& f : emb.faces) CHECK(f.size() == 3);

    // K_{3,3} has no spherical rotation at all, so any rotation must be
    // rejected by the Euler check
    Graph g33 = k33();
    Rotation rot(6);
    for (int v = 0; v < 6; ++v) rot[v] = g33.neighbors(v).to_vector();
    CHECK_THROWS_AS(Embedding::from_rotation(g33, rot), NotPlanarError);
}

TEST_CASE("embed: triangle, K4, trees, cut vertices") {
    auto tri = embed(cycle(3));
    CHECK(tri.faces.size() == 2);

    Graph path = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
    auto pe = embed(path);
    CHECK(pe.faces.size() == 1);  // a tree has one face

    // two triangles sharing a vertex
    Graph bowtie = Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto be = embed(bowtie);
    CHECK(be.faces.size() == bowtie.edge_count() - bowtie.n() + 2);

    CHECK_THROWS_AS(embed(Graph::build(4, {{0, 1}, {2, 3}})), DisconnectedError);
    CHECK_THROWS_AS(embed(complete(5)), NotPlanarError);
}

TEST_CASE("is_planar: small fixtures") {
    CHECK(is_planar(complete(4)));
    CHECK(!is_planar(complete(5)));
    CHECK(!is_planar(k33()));
    CHECK(is_planar(Graph::build(0, {})));
    CHECK(is_planar(oracle::random_graph(10, 0.0, 1)));
    CHECK(!is_planar(oracle::petersen()));
}

TEST_CASE("is_planar agrees with the subdivision oracle: every graph on <= 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
            EdgeList es;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if ((mask >> bit) & 1) es.emplace_back(i, j);
            Graph g = Graph::build(n, es);
            CHECK(is_planar(g) == oracle::planar_by_subdivision_search(g));
        }
    }
}

TEST_CASE("is_planar agrees with the subdivision oracle: random graphs n <= 9") {
    for (int t = 0; t < 4000; ++t) {
        int n = 7 + t % 3;
        Graph g = oracle::random_graph(n, 0.25 + 0.05 * (t % 8), 90210 + t);
        CHECK(is_planar(g) == oracle::planar_by_subdivision_search(g));
    }
}

TEST_CASE("embed invariants on random planar graphs") {
    int checked = 0;
    for (int t = 0; t < 3000 && checked < 400; ++t) {
        Graph g = oracle::random_graph(5 + t % 5, 0.35, 246 + t);
        if (!is_connected(g) || !is_planar(g)) continue;
        ++checked;
        auto emb = embed(g);
        // rotation is a permutation of each neighbourhood
        for (int v = 0; v < g.n(); ++v) {
            CHECK(int(emb.rotation[v].size()) == g.degree(v));
            std::set<int> s(emb.rotation[v].begin(), emb.rotation[v].end());
            CHECK(int(s.size()) == g.degree(v));
        }
        // every dart in exactly one face
        std::size_t dart_count = 0;
        for (const auto& f : emb.faces) dart_count += f.size();
        CHECK(dart_count == 2 * std::size_t(g.edge_count()));
        CHECK(int(emb.faces.size()) == g.edge_count() - g.n() + 2);
    }
    CHECK(checked >= 400);
}

TEST_CASE("region_split: quadrilateral alone has two empty sides") {
    Graph c4 = cycle(4);
    auto emb = embed(c4);
    auto [r1, r2] = region_split(emb, {0, 1, 2, 3});
    CHECK(r1.interior.none());
    CHECK(r2.interior.none());
}

TEST_CASE("region_split: K_{2,9} window") {
    auto built = make_k2m(11);  // hubs 0,1; leaves 2..10
    auto emb = Embedding::from_rotation(built.graph(), built.rotation);
    // boundary a1 b1 a2 b7 with b_i = leaf 1+i
    auto [r1, r2] = region_split(emb, {0, 2, 1, 8});
    Bits64 middle;
    for (int v = 3; v <= 7; ++v) middle.set(v);
    Bits64 rest;
    rest.set(9);
    rest.set(10);
    bool split_ok = (r1.interior == middle && r2.interior == rest) ||
                    (r2.interior == middle && r1.interior == rest);
    CHECK(split_ok);

    // interiors and boundary cover everything
    Bits64 all = r1.interior | r2.interior;
    for (int v : {0, 2, 1, 8}) all.set(v);
    CHECK(all == built.graph().vertices());

    CHECK_THROWS_AS(region_split(emb, {0, 2, 3, 1}), GraphError);  // leaves 2,3 not adjacent
}

TEST_CASE("region_split input validation") {
    Graph c4 = cycle(4);
    auto emb = embed(c4);
    CHECK_THROWS_AS(region_split(emb, {0, 1}), GraphError);
    CHECK_THROWS_AS(region_split(emb, {0, 1, 3}), GraphError);  // 1-3 not an edge
}

TEST_CASE("find_empty_k27 on K_{2,7}, K_{2,9}, triangle") {
    auto k27 = make_k2m(9);
    auto e27 = Embedding::from_rotation(k27.graph(), k27.rotation);
    auto w = find_empty_k27(e27);
    REQUIRE(w.has_value());
    CHECK(((w->p == 0 && w->q == 1) || (w->p == 1 && w->q == 0)));

    auto k29 = make_k2m(11);
    auto e29 = Embedding::from_rotation(k29.graph(), k29.rotation);
    CHECK(find_empty_k27(e29).has_value());

    auto tri = embed(cycle(3));
    CHECK(!find_empty_k27(tri).has_value());
}

TEST_CASE("rotation text round trip") {
    auto k23 = make_k2m(5);
    std::string text = rotation_to_text(k23.rotation);
    CHECK(rotation_from_text(text) == k23.rotation);
    CHECK(text.substr(0, 2) == "0:");
}
