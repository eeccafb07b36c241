#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planar/bits.hpp"

namespace planar {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

// Immutable simple undirected graph on 0..n-1, n <= 64, bitset adjacency rows.
// Invariants: adjacency is symmetric and irreflexive.
class Graph {
  public:
    Graph() = default;

    static Graph build(int n, const EdgeList& edges);
    // adjacency rows given directly; validated
    static Graph from_rows(int n, std::vector<Bits64> rows);

    int n() const { return n_; }
    Bits64 neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    int edge_count() const;
    EdgeList edges() const;  // u < v, lexicographic
    Bits64 vertices() const { return Bits64::full(n_); }

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    int n_ = 0;
    std::vector<Bits64> adj_;
};

// Relabeled induced subgraph G[s] plus the map new label -> old label.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> label_map;
};
InducedSubgraph induced_subgraph(const Graph& g, Bits64 s);

// Multi-word adjacency for n > 64; the census kernel accepts both.
class WideGraph {
  public:
    WideGraph() = default;
    static WideGraph build(int n, const EdgeList& edges);

    int n() const { return n_; }
    const WideBits& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    int edge_count() const;

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<WideBits> adj_;
};

}  // namespace planar
