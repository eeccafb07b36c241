#pragma once

#include <cstdint>
#include <vector>

#include "planar/graph.hpp"

namespace planar {

// Canonical form for graphs with at most 11 vertices: the minimum, over all
// vertex orderings compatible with an invariant-based partition, of the
// upper-triangle adjacency bits packed column by column, first bit most
// significant. Equal forms <=> isomorphic graphs.
struct CanonForm {
    int n = 0;
    std::uint64_t bits = 0;
    friend bool operator==(const CanonForm& a, const CanonForm& b) {
        return a.n == b.n && a.bits == b.bits;
    }
    friend bool operator<(const CanonForm& a, const CanonForm& b) {
        return a.n != b.n ? a.n < b.n : a.bits < b.bits;
    }
};

CanonForm canonical_form(const Graph& g);
Graph graph_from_canon(const CanonForm& c);

// relabel: vertex v of g becomes perm[v]
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

}  // namespace planar
