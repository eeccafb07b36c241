#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planar/graph.hpp"

namespace planar {

// Exact induced k-cycle counts. Listed cycles are canonical: lowest label
// first, then the smaller of the two neighbours as second vertex.
struct CycleCensus {
    int k = 0;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> per_vertex;
    std::optional<std::vector<std::vector<int>>> cycles;
};

CycleCensus count_induced_cycles(const Graph& g, int k, bool list_them = false);
CycleCensus count_induced_cycles(const WideGraph& g, int k, bool list_them = false);

// Induced k-cycles whose cycle contains u-v-w as a subpath. Requires uv and
// vw edges, u != w.
std::uint64_t count_induced_cycles_through_path(const Graph& g, int u, int v, int w, int k);

// The filtered exclusive-neighbourhood split around a path u-v-w:
//   X0 = N(u) \ (N(w) u {w}),  Y0 = N(w) \ (N(u) u {u}),
//   X  = members of X0 with a neighbour in Y0, Y symmetric,
//   cross_edges = all edges between X and Y.
// In a planar graph with an induced 5-cycle through u-v-w, (X, Y,
// cross_edges) is a non-empty forest bounding the number of such cycles.
struct PathNeighborhoodSplit {
    int u, v, w;
    Bits64 x, y;
    EdgeList cross_edges;
};
PathNeighborhoodSplit xy_split(const Graph& g, int u, int v, int w);

// true iff the cross-edge bipartite graph of the split is acyclic
bool split_is_forest(const PathNeighborhoodSplit& s);

// Neighbours of v that share some induced 5-cycle with v.
Bits64 principal_neighbors(const Graph& g, int v);

// argmin vertex of the per-vertex census (lowest label on ties) and its count
std::pair<int, std::uint64_t> per_vertex_min_profile(const Graph& g, int k);

// one CSV row: id,k,total,min_per_vertex,max_per_vertex
std::string census_csv_row(const std::string& id, const CycleCensus& c);

}  // namespace planar
