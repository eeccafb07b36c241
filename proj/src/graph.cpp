#include "planar/graph.hpp"

#include <cassert>

namespace planar {

Graph Graph::build(int n, const EdgeList& edges) {
    if (n < 0 || n > 64) throw GraphError("Graph::build: n must be in 0..64, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bits64{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("Graph::build: endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        if (u == v) throw GraphError("Graph::build: self-loop at " + std::to_string(u));
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

Graph Graph::from_rows(int n, std::vector<Bits64> rows) {
    if (n < 0 || n > 64 || int(rows.size()) != n) throw GraphError("Graph::from_rows: bad size");
    Bits64 range = Bits64::full(n);
    for (int v = 0; v < n; ++v) {
        if (!rows[v].subset_of(range)) throw GraphError("Graph::from_rows: out of range bit");
        if (rows[v].test(v)) throw GraphError("Graph::from_rows: self-loop");
    }
    for (int v = 0; v < n; ++v)
        rows[v].for_each([&](int u) {
            if (!rows[u].test(v)) throw GraphError("Graph::from_rows: asymmetric adjacency");
        });
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    return g;
}

int Graph::edge_count() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d += degree(v);
    return d / 2;
}

EdgeList Graph::edges() const {
    EdgeList out;
    for (int u = 0; u < n_; ++u)
        (adj_[u] & Bits64::above(u)).for_each([&](int v) { out.emplace_back(u, v); });
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    assert(u != v);
    Graph g = *this;
    g.adj_[u].set(v);
    g.adj_[v].set(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g = *this;
    g.adj_[u].reset(v);
    g.adj_[v].reset(u);
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, Bits64 s) {
    if (!s.subset_of(g.vertices())) throw GraphError("induced_subgraph: set not within vertex range");
    std::vector<int> map = s.to_vector();
    int m = int(map.size());
    std::vector<Bits64> rows(m);
    for (int i = 0; i < m; ++i) {
        Bits64 nb = g.neighbors(map[i]) & s;
        for (int j = 0; j < m; ++j)
            if (nb.test(map[j])) rows[i].set(j);
    }
    return {Graph::from_rows(m, std::move(rows)), std::move(map)};
}

WideGraph WideGraph::build(int n, const EdgeList& edges) {
    if (n < 0) throw GraphError("WideGraph::build: negative n");
    WideGraph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.adj_.assign(n, WideBits(g.words_));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw GraphError("WideGraph::build: endpoint out of range");
        if (u == v) throw GraphError("WideGraph::build: self-loop");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

int WideGraph::edge_count() const {
    long d = 0;
    for (int v = 0; v < n_; ++v) d += degree(v);
    return int(d / 2);
}

}  // namespace planar
