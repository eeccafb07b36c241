#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "planar/canon.hpp"
#include "planar/census.hpp"
#include "planar/embed.hpp"
#include "planar/enumerate.hpp"
#include "planar/formulas.hpp"

using namespace planar;

TEST_CASE("canonical form: invariant under relabelling") {
    for (int t = 0; t < 2000; ++t) {
        int n = 2 + t % 8;
        Graph g = oracle::random_graph(n, 0.35, 1234 + t);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        // deterministic shuffle
        std::uint64_t s = 99 + t;
        for (int i = n - 1; i > 0; --i) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            std::swap(perm[i], perm[s % (i + 1)]);
        }
        CHECK(canonical_form(g) == canonical_form(apply_permutation(g, perm)));
        // decode of the canonical form is isomorphic (same canonical form)
        CHECK(canonical_form(graph_from_canon(canonical_form(g))) == canonical_form(g));
    }
}

TEST_CASE("canonical form partitions agree with brute-force canon: all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::map<std::uint64_t, std::set<std::uint64_t>> lib_to_brute, brute_to_lib;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
            EdgeList es;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if ((mask >> bit) & 1) es.emplace_back(i, j);
            Graph g = Graph::build(n, es);
            std::uint64_t lib = canonical_form(g).bits;
            std::uint64_t brute = oracle::brute_canonical_bits(g);
            lib_to_brute[lib].insert(brute);
            brute_to_lib[brute].insert(lib);
        }
        for (const auto& [k, v] : lib_to_brute) CHECK(v.size() == 1);
        for (const auto& [k, v] : brute_to_lib) CHECK(v.size() == 1);
    }
}

TEST_CASE("enumerate_planar counts per level") {
    const std::map<int, std::size_t> expected{{1, 1}, {2, 2}, {3, 4}, {4, 11},
                                              {5, 33}, {6, 142}, {7, 822}};
    for (const auto& [n, count] : expected) {
        std::size_t got = 0;
        enumerate_planar(n, [&](const Graph& g) {
            CHECK(g.n() == n);
            ++got;
        });
        CHECK(got == count);
    }
    CHECK_THROWS_AS(planar_canon_level(10), GraphError);
}

TEST_CASE("enumerator completeness against brute-force generation, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        // independent path: every labelled graph, filtered by the subdivision
        // oracle, deduplicated by brute-force canonical bits
        std::set<std::uint64_t> brute;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
            EdgeList es;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if ((mask >> bit) & 1) es.emplace_back(i, j);
            Graph g = Graph::build(n, es);
            if (oracle::planar_by_subdivision_search(g)) brute.insert(oracle::brute_canonical_bits(g));
        }
        std::set<std::uint64_t> enumerated;
        enumerate_planar(n, [&](const Graph& g) {
            CHECK(is_planar(g));
            enumerated.insert(oracle::brute_canonical_bits(g));
        });
        CHECK(enumerated == brute);
    }
}

TEST_CASE("enumerated planar graphs embed and satisfy Euler") {
    for (int n = 2; n <= 7; ++n) {
        enumerate_planar(n, [&](const Graph& g) {
            if (!is_connected(g)) return;
            auto emb = embed(g);
            CHECK(int(emb.faces.size()) == g.edge_count() - g.n() + 2);
        });
    }
}

TEST_CASE("exhaustive maxima at small n") {
    auto r54 = exhaustive_max(5, 4);
    CHECK(r54.best >= 3);  // K_{2,3} attains 3
    CHECK(r54.exhaustive);
    CHECK(r54.method == "exhaustive");
    Graph w = graph6_decode(r54.witness_g6).to_graph();
    CHECK(count_induced_cycles(w, 4).total == r54.best);

    auto r55 = exhaustive_max(5, 5);
    CHECK(r55.best >= 1);  // C5 attains 1

    // the closed form is a lower bound at small n since K_{2,n-2} is planar
    for (int n = 4; n <= 7; ++n) CHECK(exhaustive_max(n, 4).best >= std::uint64_t(fi_c4(n)));
}
