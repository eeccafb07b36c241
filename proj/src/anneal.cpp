#include "planar/anneal.hpp"

#include <cmath>
#include <thread>

#include "planar/census.hpp"
#include "planar/embed.hpp"
#include "planar/families.hpp"
#include "planar/graph6.hpp"
#include "planar/util.hpp"

namespace planar {

namespace {

struct Candidate {
    std::uint64_t count = 0;
    int edges = 0;
    std::string g6;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.g6 < b.g6;
}

Graph start_graph(const SearchConfig& cfg, Rng& rng) {
    switch (cfg.start) {
        case StartMode::k2m:
            return make_k2m(cfg.n).graph();
        case StartMode::hminusz: {
            if (cfg.n < 7) throw GraphError("anneal_max: hminusz start needs n >= 7");
            int rest = cfg.n - 4;
            int a = (rest + 2) / 3, b = (rest + 1) / 3, c = rest / 3;
            return make_h_minus_z(a, b, c).graph();
        }
        case StartMode::random: {
            Graph g = Graph::build(cfg.n, {});
            for (int t = 0; t < 3 * cfg.n; ++t) {
                int u = int(rng.below(cfg.n)), v = int(rng.below(cfg.n));
                if (u == v || g.has_edge(u, v)) continue;
                Graph h = g.with_edge(u, v);
                if (is_planar(h)) g = h;
            }
            return g;
        }
    }
    throw GraphError("anneal_max: unknown start mode");
}

Candidate run_restart(const SearchConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    Graph g = start_graph(cfg, rng);
    auto score = [&](const Graph& x) { return count_induced_cycles(x, cfg.k).total; };
    std::uint64_t cur = score(g);
    Candidate best{cur, g.edge_count(), graph6_encode(g)};

    const double cool = std::pow(cfg.t_end / cfg.t0, 1.0 / std::max(1, cfg.budget));
    double temp = cfg.t0;
    const double wsum = cfg.w_add + cfg.w_del + cfg.w_swap;
    // tiny edge penalty so that equal-count moves drift toward sparser
    // witnesses
    const double tie_eps = 1.0 / 1024.0;

    for (int step = 0; step < cfg.budget; ++step, temp *= cool) {
        double r = rng.unit() * wsum;
        Graph cand;
        bool have = false;
        EdgeList es = g.edges();
        if (r < cfg.w_add || es.empty()) {
            int u = int(rng.below(cfg.n)), v = int(rng.below(cfg.n));
            if (u != v && !g.has_edge(u, v)) {
                Graph h = g.with_edge(u, v);
                if (is_planar(h)) {
                    cand = h;
                    have = true;
                }
            }
        } else if (r < cfg.w_add + cfg.w_del) {
            auto [u, v] = es[rng.below(es.size())];
            cand = g.without_edge(u, v);
            have = true;
        } else {
            auto [u, v] = es[rng.below(es.size())];
            int x = int(rng.below(cfg.n)), y = int(rng.below(cfg.n));
            if (x != y && !g.has_edge(x, y) && !(x == u && y == v) && !(x == v && y == u)) {
                Graph h = g.without_edge(u, v).with_edge(x, y);
                if (is_planar(h)) {
                    cand = h;
                    have = true;
                }
            }
        }
        if (!have) continue;

        std::uint64_t cnt = score(cand);
        double delta = (double(cnt) - double(cur)) - tie_eps * (cand.edge_count() - g.edge_count());
        if (delta >= 0 || rng.unit() < std::exp(delta / temp)) {
            g = std::move(cand);
            cur = cnt;
            Candidate snap{cur, g.edge_count(), graph6_encode(g)};
            if (better(snap, best)) best = snap;
        }
    }
    return best;
}

}  // namespace

ExtremalRecord anneal_max(const SearchConfig& cfg) {
    if (cfg.n < 3 || cfg.n > 64) throw GraphError("anneal_max: n must be in 3..64");
    if (cfg.k < 3 || cfg.k > cfg.n) throw GraphError("anneal_max: k out of range");

    std::vector<Candidate> results(std::max(1, cfg.restarts));
    std::vector<std::uint64_t> seeds(results.size());
    for (std::size_t r = 0; r < seeds.size(); ++r)
        seeds[r] = splitmix64(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (r + 1)));

    parallel_chunks(results.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t r = lo; r < hi; ++r) results[r] = run_restart(cfg, seeds[r]);
    });

    Candidate best = results[0];
    for (const auto& c : results)
        if (better(c, best)) best = c;

    // independent re-verification of the winner
    Graph witness = graph6_decode(best.g6).to_graph();
    if (!is_planar(witness)) throw GraphError("anneal_max: witness failed planarity recheck");
    std::uint64_t recount = count_induced_cycles(witness, cfg.k).total;
    if (recount != best.count) throw GraphError("anneal_max: witness failed census recheck");

    return ExtremalRecord{cfg.n, cfg.k, best.count, best.g6, "annealing", false};
}

}  // namespace planar
