#include "planar/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "planar/census.hpp"
#include "planar/embed.hpp"
#include "planar/graph6.hpp"
#include "planar/util.hpp"

namespace planar {

std::vector<CanonForm> planar_canon_level(int n) {
    if (n < 0 || n > kEnumerateCap)
        throw GraphError("enumerate_planar: n must be in 0.." + std::to_string(kEnumerateCap));
    std::vector<std::uint64_t> level{0};  // the 0/1-vertex graph
    int level_n = n == 0 ? 0 : 1;

    for (; level_n < n; ++level_n) {
        const int child_n = level_n + 1;
        const std::uint64_t subsets = std::uint64_t(1) << level_n;
        std::unordered_set<std::uint64_t> next;
        std::mutex mu;

        parallel_chunks(level.size(), [&](std::size_t lo, std::size_t hi) {
            std::unordered_set<std::uint64_t> local;
            for (std::size_t pi = lo; pi < hi; ++pi) {
                Graph parent = graph_from_canon({level_n, level[pi]});
                for (std::uint64_t s = 0; s < subsets; ++s) {
                    EdgeList edges = parent.edges();
                    for (int v = 0; v < level_n; ++v)
                        if ((s >> v) & 1) edges.emplace_back(v, level_n);
                    Graph child = Graph::build(child_n, edges);
                    if (child_n >= 3 && child.edge_count() > 3 * child_n - 6) continue;
                    if (!is_planar(child)) continue;
                    local.insert(canonical_form(child).bits);
                }
            }
            std::lock_guard<std::mutex> lock(mu);
            next.insert(local.begin(), local.end());
        });
        level.assign(next.begin(), next.end());
    }
    std::sort(level.begin(), level.end());
    std::vector<CanonForm> out;
    out.reserve(level.size());
    for (auto bits : level) out.push_back({n, bits});
    return out;
}

void enumerate_planar(int n, const std::function<void(const Graph&)>& sink) {
    for (const auto& c : planar_canon_level(n)) sink(graph_from_canon(c));
}

ExtremalRecord exhaustive_max(int n, int k) {
    ExtremalRecord rec{n, k, 0, "", "exhaustive", true};
    bool have = false;
    int best_edges = 0;
    enumerate_planar(n, [&](const Graph& g) {
        if (k < 3 || k > g.n()) return;
        std::uint64_t c = count_induced_cycles(g, k).total;
        std::string g6 = graph6_encode(g);
        int e = g.edge_count();
        bool better = !have || c > rec.best || (c == rec.best && e < best_edges) ||
                      (c == rec.best && e == best_edges && g6 < rec.witness_g6);
        if (better) {
            rec.best = c;
            rec.witness_g6 = g6;
            best_edges = e;
            have = true;
        }
    });
    if (!have) throw GraphError("exhaustive_max: k out of range for every graph on n vertices");
    return rec;
}

}  // namespace planar
