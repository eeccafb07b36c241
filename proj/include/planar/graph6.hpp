#pragma once

#include <string>

#include "planar/graph.hpp"

namespace planar {

struct Graph6Error : GraphError {
    using GraphError::GraphError;
};

// Standard graph6: N(n) then the upper triangle x(i,j), i<j, listed column by
// column (j ascending, i ascending within), packed big-endian into 6-bit
// chunks, each +63. No sparse6. Encode never emits the ">>graph6<<" header;
// decode tolerates it.
std::string graph6_encode(const Graph& g);
std::string graph6_encode(const WideGraph& g);

struct DecodedGraph {
    int n = 0;
    EdgeList edges;
    Graph to_graph() const { return Graph::build(n, edges); }      // n <= 64
    WideGraph to_wide() const { return WideGraph::build(n, edges); }
};
DecodedGraph graph6_decode(const std::string& line);

}  // namespace planar
