#pragma once

#include <cstdint>

#include "planar/enumerate.hpp"
#include "planar/graph.hpp"

namespace planar {

enum class StartMode { random, k2m, hminusz };

struct SearchConfig {
    int n = 10;
    int k = 5;
    double w_add = 0.45, w_del = 0.25, w_swap = 0.30;  // move weights
    double t0 = 2.5, t_end = 0.05;                     // geometric schedule
    int budget = 20000;                                // steps per restart
    int restarts = 32;
    std::uint64_t seed = 1;
    StartMode start = StartMode::random;
};

// Stochastic search for induced-C_k-rich planar graphs under moves
// {add edge if planarity preserved, delete edge, edge swap}. Fixed seed gives
// a byte-identical record; the returned witness is re-verified planar and
// recounted before returning. n <= 64.
ExtremalRecord anneal_max(const SearchConfig& cfg);

}  // namespace planar
