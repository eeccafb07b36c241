#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "planar/canon.hpp"
#include "planar/graph.hpp"

namespace planar {

struct ExtremalRecord {
    int n = 0;
    int k = 0;
    std::uint64_t best = 0;
    std::string witness_g6;
    std::string method;  // "exhaustive" | "annealing"
    bool exhaustive = false;
};

inline constexpr int kEnumerateCap = 9;  // n = 9 is feasible but slow

// Every isomorphism class of simple planar graphs on exactly n vertices,
// once, in canonical order. Level-by-level vertex augmentation; planarity is
// hereditary, so children of planar parents suffice.
std::vector<CanonForm> planar_canon_level(int n);
void enumerate_planar(int n, const std::function<void(const Graph&)>& sink);

// exact maximum induced C_k count over planar graphs on n vertices; ties
// break toward fewer edges, then the lexicographically least graph6
ExtremalRecord exhaustive_max(int n, int k);

}  // namespace planar
