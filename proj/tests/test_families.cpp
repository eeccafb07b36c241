#include "doctest.h"
#include "oracles.hpp"
#include "planar/census.hpp"
#include "planar/embed.hpp"
#include "planar/families.hpp"
#include "planar/formulas.hpp"
#include "planar/util.hpp"

using namespace planar;

TEST_CASE("make_k2m") {
    auto b = make_k2m(5);
    CHECK(count_induced_cycles(b.graph(), 4).total == 3);
    CHECK(count_induced_cycles(make_k2m(4).graph(), 4).total == 1);
    CHECK(count_induced_cycles(make_k2m(60).graph(), 4).total == 1653);
    CHECK(b.index_of("a2") == 1);
    CHECK(b.index_of("b3") == 4);
    CHECK_THROWS_AS(make_k2m(3), FamilyError);
}

TEST_CASE("required form: class sizes by residue") {
    CHECK(required_form_sizes(19, {}) == std::array<std::int64_t, 3>{4, 4, 1});
    CHECK(required_form_sizes(20, SizeOption::first) == std::array<std::int64_t, 3>{5, 4, 1});
    CHECK(required_form_sizes(20, SizeOption::second) == std::array<std::int64_t, 3>{4, 4, 2});
    CHECK(required_form_sizes(21, SizeOption::first) == std::array<std::int64_t, 3>{5, 4, 2});
    CHECK(required_form_sizes(21, SizeOption::second) == std::array<std::int64_t, 3>{5, 5, 1});
    CHECK_THROWS_AS(required_form_sizes(18, {}), FamilyError);
    CHECK_THROWS_AS(required_form_sizes(19, SizeOption::first), FamilyError);
}

TEST_CASE("required form: principal censuses") {
    auto rf19 = make_required_form({19, {}, {}});
    CHECK(rf19.built.n == 19);
    CHECK(count_induced_cycles(rf19.built.graph(), 5).total == 77);

    for (auto opt : {SizeOption::first, SizeOption::second}) {
        auto rf20 = make_required_form({20, opt, {}});
        CHECK(count_induced_cycles(rf20.built.graph(), 5).total == 87);
    }
}

TEST_CASE("required form: full mask is maximal planar") {
    std::size_t cnt = required_form_optional_count(19, {});
    CHECK(cnt == std::size_t(19 - 7));
    auto rf = make_required_form({19, {}, std::vector<bool>(cnt, true)});
    Graph g = rf.built.graph();
    CHECK(g.edge_count() == 3 * 19 - 6);
    CHECK(is_planar(g));
    // rotation still traces to a spherical embedding with the extra faces
    auto emb = Embedding::from_rotation(g, rf.built.rotation);
    CHECK(int(emb.faces.size()) == g.edge_count() - g.n() + 2);
    for (const auto& f : emb.faces) CHECK(f.size() == 3);  // maximal planar: all triangles
}

TEST_CASE("required form: every mask keeps a valid pinned embedding") {
    Rng rng(123);
    for (std::int64_t n : {19, 20, 23}) {
        for (int t = 0; t < 6; ++t) {
            std::size_t cnt = required_form_optional_count(n, {});
            std::vector<bool> mask(cnt);
            for (std::size_t i = 0; i < cnt; ++i) mask[i] = rng.below(2) == 1;
            auto rf = make_required_form({n, {}, mask});
            Graph g = rf.built.graph();
            CHECK(is_planar(g));
            auto emb = Embedding::from_rotation(g, rf.built.rotation);
            CHECK(int(emb.faces.size()) == g.edge_count() - g.n() + 2);
        }
    }
}

TEST_CASE("required form: Z-gadget and name map") {
    auto rf = make_required_form({19, {}, {}});
    const auto& b = rf.built;
    CHECK(b.index_of("u1") == 0);
    CHECK(b.index_of("w") == 3);
    CHECK(b.index_of("a1") == 10);
    Bits64 zset;
    for (auto nm : {"u1", "u2", "u3", "w", "z1", "z2", "z3", "z4", "z5", "z6"})
        zset.set(b.index_of(nm));
    auto gadget = induced_subgraph(b.graph(), zset);
    CHECK(count_induced_cycles(gadget.graph, 5).total == 11);
    CHECK(oracle::subset_cycle_count(gadget.graph, 5) == 11);
}

TEST_CASE("even blow-up") {
    auto g = make_even_blowup(3, 12).graph();
    CHECK(count_induced_cycles(g, 6).total == 27);
    CHECK(is_planar(g));

    CHECK(count_induced_cycles(make_even_blowup(3, 6).graph(), 6).total == 1);

    // k=4, n=12: classes 2,2,2,2; verified against the subset oracle
    auto g8 = make_even_blowup(4, 12).graph();
    CHECK(count_induced_cycles(g8, 8).total == oracle::subset_cycle_count(g8, 8));
    CHECK(count_induced_cycles(g8, 8).total == 16);

    CHECK_THROWS_AS(make_even_blowup(2, 8), FamilyError);
    CHECK_THROWS_AS(make_even_blowup(3, 5), FamilyError);
}

TEST_CASE("odd blow-up") {
    auto c5 = make_odd_blowup(2, 5, false).graph();
    CHECK(count_induced_cycles(c5, 5).total == 1);

    auto g9 = make_odd_blowup(2, 9, false).graph();
    CHECK(count_induced_cycles(g9, 5).total == oracle::subset_cycle_count(g9, 5));
    CHECK(count_induced_cycles(g9, 5).total == 9);

    CHECK(is_planar(make_odd_blowup(2, 9, true).graph()));
    CHECK(is_planar(make_odd_blowup(3, 14, true).graph()));
}

TEST_CASE("H - Z skeleton") {
    auto b = make_h_minus_z(1, 1, 1);
    CHECK(count_induced_cycles(b.graph(), 5).total == 3);

    auto b441 = make_h_minus_z(4, 4, 1);
    Graph g = b441.graph();
    CHECK(count_induced_cycles(g, 5).total == 24);
    auto census = count_induced_cycles(g, 5);
    for (int i = 1; i <= 4; ++i)
        CHECK(census.per_vertex[b441.index_of("a" + std::to_string(i))] == 4 + 1);  // |B|+|C|

    auto emb = Embedding::from_rotation(g, b441.rotation);
    CHECK(int(emb.faces.size()) == g.edge_count() - g.n() + 2);
}

TEST_CASE("face gadgets: spot counts") {
    using F = GadgetFace;
    auto census5 = [](const std::array<F, 3>& fa) {
        return count_induced_cycles(make_face_gadget(fa).graph(), 5).total;
    };
    CHECK(census5({F{2, 1, {}}, F{2, 1, {}}, F{1, 0, {}}}) == 1);
    CHECK(census5({F{2, 1, {}}, F{2, 1, {}}, F{2, 1, {}}}) == 3);
    // lone type-3 face, m=4: 1 without both chain edges, 2 with both
    CHECK(census5({F{3, 4, {false, false}}, F{1, 0, {}}, F{1, 0, {}}}) == 1);
    CHECK(census5({F{3, 4, {true, false}}, F{1, 0, {}}, F{1, 0, {}}}) == 1);
    CHECK(census5({F{3, 4, {true, true}}, F{1, 0, {}}, F{1, 0, {}}}) == 2);
    // lone m=3: the optional edge kills the single cycle
    CHECK(census5({F{3, 3, {false}}, F{1, 0, {}}, F{1, 0, {}}}) == 1);
    CHECK(census5({F{3, 3, {true}}, F{1, 0, {}}, F{1, 0, {}}}) == 0);
    // pair (3(m), 2): m cross cycles on top of the lone count
    for (int m = 3; m <= 6; ++m) {
        std::vector<bool> none(m - 2, false);
        CHECK(census5({F{3, m, none}, F{2, 1, {}}, F{1, 0, {}}}) == std::uint64_t(m) + 1);
    }
    // pair (3(m), 3(m')): m + m' - 1 cross cycles plus both lone counts
    CHECK(census5({F{3, 3, {false}}, F{3, 5, {false, false, false}}, F{1, 0, {}}}) ==
          (3 + 5 - 1) + 1 + 1);
}

TEST_CASE("face gadget matches the required-form Z-gadget") {
    using F = GadgetFace;
    auto g = make_face_gadget({F{3, 4, {true, true}}, F{2, 1, {}}, F{2, 1, {}}}).graph();
    CHECK(count_induced_cycles(g, 5).total == 11);
    CHECK(oracle::subset_cycle_count(g, 5) == 11);
}

TEST_CASE("constructed graphs are planar") {
    CHECK(is_planar(make_k2m(30).graph()));
    CHECK(is_planar(make_required_form({25, SizeOption::second, {}}).built.graph()));
    CHECK(is_planar(make_h_minus_z(3, 5, 2).graph()));
    using F = GadgetFace;
    CHECK(is_planar(make_face_gadget({F{3, 6, {}}, F{3, 4, {}}, F{2, 1, {}}}).graph()));
}
