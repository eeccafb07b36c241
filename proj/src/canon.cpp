#include "planar/canon.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace planar {

namespace {

// Iterated neighbour-colour refinement; returns vertex classes ordered by a
// canonical (isomorphism-invariant) signature. Degree partition alone would
// do, refinement just shrinks the permutation search.
std::vector<std::vector<int>> refined_partition(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);

    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> nb;
            g.neighbors(v).for_each([&](int u) { nb.push_back(color[u]); });
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sigs[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sigs) rank.emplace(s, 0);
        int r = 0;
        for (auto& [s, rk] : rank) rk = r++;
        std::vector<int> next(n);
        for (const auto& [s, v] : sigs) next[v] = rank[s];
        if (next == color) break;
        color = next;
    }

    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [c, vs] : by_color) out.push_back(std::move(vs));
    return out;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::uint64_t total_bits;
    std::vector<int> class_of_pos;          // which class fills each position
    std::vector<std::vector<int>> classes;  // candidate vertices per class
    std::vector<int> perm;                  // position -> vertex
    Bits64 used;
    std::uint64_t best = 0;
    bool have_best = false;

    void run() {
        perm.assign(n, -1);
        descend(0, 0);
    }

    void descend(int p, std::uint64_t acc) {
        if (p == n) {
            if (!have_best || acc < best) {
                best = acc;
                have_best = true;
            }
            return;
        }
        std::uint64_t done_bits = std::uint64_t(p) * (p + 1) / 2;  // after placing position p
        for (int v : classes[class_of_pos[p]]) {
            if (used.test(v)) continue;
            std::uint64_t acc2 = acc;
            for (int i = 0; i < p; ++i) acc2 = (acc2 << 1) | (g.has_edge(perm[i], v) ? 1 : 0);
            if (have_best && acc2 > (best >> (total_bits - done_bits))) continue;
            perm[p] = v;
            used.set(v);
            descend(p + 1, acc2);
            used.reset(v);
        }
    }
};

}  // namespace

CanonForm canonical_form(const Graph& g) {
    const int n = g.n();
    if (n > 11) throw GraphError("canonical_form: supports n <= 11");
    if (n <= 1) return {n, 0};

    CanonSearch s{g, n, std::uint64_t(n) * (n - 1) / 2, {}, refined_partition(g), {}, {}, 0, false};
    for (std::size_t c = 0; c < s.classes.size(); ++c)
        for (std::size_t i = 0; i < s.classes[c].size(); ++i) s.class_of_pos.push_back(int(c));
    s.run();
    assert(s.have_best);
    return {n, s.best};
}

Graph graph_from_canon(const CanonForm& c) {
    EdgeList edges;
    std::uint64_t t = std::uint64_t(c.n) * (c.n - 1) / 2;
    std::uint64_t pos = 0;
    for (int j = 1; j < c.n; ++j)
        for (int i = 0; i < j; ++i, ++pos)
            if ((c.bits >> (t - 1 - pos)) & 1) edges.emplace_back(i, j);
    return Graph::build(c.n, edges);
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    EdgeList edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::build(g.n(), edges);
}

}  // namespace planar
