#include "planar/census.hpp"

#include <algorithm>
#include <cassert>

namespace planar {

namespace {

// Minimal mutable mask shared by the narrow and wide kernels.
struct Mask64 {
    Bits64 b;
    void intersect(const Bits64& o) { b &= o; }
    void subtract(const Bits64& o) { b = b.minus(o); }
    void unite(const Bits64& o) { b |= o; }
    void remove_le(int v) { b &= Bits64::above(v); }
    void set(int v) { b.set(v); }
    void reset(int v) { b.reset(v); }
    int count() const { return b.count(); }
    template <class F>
    void for_each(F f) const { b.for_each(f); }
};

struct MaskWide {
    WideBits b;
    void intersect(const WideBits& o) {
        for (std::size_t i = 0; i < b.w.size(); ++i) b.w[i] &= o.w[i];
    }
    void subtract(const WideBits& o) {
        for (std::size_t i = 0; i < b.w.size(); ++i) b.w[i] &= ~o.w[i];
    }
    void unite(const WideBits& o) {
        for (std::size_t i = 0; i < b.w.size(); ++i) b.w[i] |= o.w[i];
    }
    void remove_le(int v) {
        std::size_t word = std::size_t(v) >> 6;
        for (std::size_t i = 0; i < std::min(word + 1, b.w.size()); ++i) {
            if (i < word)
                b.w[i] = 0;
            else {
                int r = v & 63;
                b.w[i] &= (r == 63) ? 0 : (~std::uint64_t{0} << (r + 1));
            }
        }
    }
    void set(int v) { b.set(v); }
    void reset(int v) { b.reset(v); }
    int count() const { return b.count(); }
    template <class F>
    void for_each(F f) const { b.for_each(f); }
};

template <class G>
struct KernelTraits;

template <>
struct KernelTraits<Graph> {
    using Mask = Mask64;
    static Bits64 row(const Graph& g, int v) { return g.neighbors(v); }
    static Mask empty(const Graph&) { return {}; }
};

template <>
struct KernelTraits<WideGraph> {
    using Mask = MaskWide;
    static const WideBits& row(const WideGraph& g, int v) { return g.neighbors(v); }
    static Mask empty(const WideGraph& g) { return {WideBits((g.n() + 63) / 64)}; }
};

// Canonical DFS path extension. Grow simple paths from the minimal-label
// vertex s; a new vertex may touch only the current path endpoint (induced
// pruning), and the closing vertex must additionally touch s and carry a
// label above the second path vertex, which kills the direction symmetry.
template <class G>
CycleCensus census_impl(const G& g, int k, bool list_them) {
    using T = KernelTraits<G>;
    using Mask = typename T::Mask;
    const int n = g.n();
    if (k < 3 || k > n)
        throw GraphError("count_induced_cycles: k out of range (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");

    CycleCensus out;
    out.k = k;
    out.per_vertex.assign(n, 0);
    if (list_them) out.cycles.emplace();

    std::vector<int> path(k);
    // blocked_mid[d]: union of rows of interior path vertices p1..p_{d-2};
    // blocked_all[d] additionally includes the row of s
    std::vector<Mask> blocked_mid(k + 1, T::empty(g)), blocked_all(k + 1, T::empty(g));
    Mask path_set = T::empty(g);

    auto grow = [&](auto&& self, int s, int depth) -> void {
        int last = path[depth - 1];
        if (depth == k - 1) {
            Mask cand{T::row(g, last)};
            cand.intersect(T::row(g, s));
            cand.subtract(blocked_mid[depth].b);
            cand.subtract(path_set.b);
            cand.remove_le(path[1]);
            cand.for_each([&](int c) {
                ++out.total;
                ++out.per_vertex[c];
                for (int i = 0; i < depth; ++i) ++out.per_vertex[path[i]];
                if (list_them) {
                    std::vector<int> cyc(path.begin(), path.begin() + depth);
                    cyc.push_back(c);
                    out.cycles->push_back(std::move(cyc));
                }
            });
            return;
        }
        Mask cand{T::row(g, last)};
        cand.subtract(blocked_all[depth].b);
        cand.subtract(path_set.b);
        cand.remove_le(s);
        cand.for_each([&](int v) {
            path[depth] = v;
            path_set.set(v);
            blocked_mid[depth + 1] = blocked_mid[depth];
            blocked_mid[depth + 1].unite(T::row(g, last));
            blocked_all[depth + 1] = blocked_all[depth];
            blocked_all[depth + 1].unite(T::row(g, last));
            self(self, s, depth + 1);
            path_set.reset(v);
        });
    };

    for (int s = 0; s + k <= n; ++s) {
        path[0] = s;
        path_set.set(s);
        Mask first{T::row(g, s)};
        first.remove_le(s);
        first.for_each([&](int v1) {
            path[1] = v1;
            path_set.set(v1);
            blocked_mid[2] = T::empty(g);
            blocked_all[2] = Mask{T::row(g, s)};
            grow(grow, s, 2);
            path_set.reset(v1);
        });
        path_set.reset(s);
    }
    return out;
}

}  // namespace

CycleCensus count_induced_cycles(const Graph& g, int k, bool list_them) {
    return census_impl(g, k, list_them);
}

CycleCensus count_induced_cycles(const WideGraph& g, int k, bool list_them) {
    return census_impl(g, k, list_them);
}

std::uint64_t count_induced_cycles_through_path(const Graph& g, int u, int v, int w, int k) {
    if (u == w) throw GraphError("count_through_path: u == w");
    if (!g.has_edge(u, v) || !g.has_edge(v, w)) throw GraphError("count_through_path: path edges missing");
    if (k < 3 || k > g.n()) throw GraphError("count_through_path: k out of range");
    if (k == 3) return g.has_edge(u, w) ? 1 : 0;
    if (g.has_edge(u, w)) return 0;

    // cycle = v,w,x1,...,x_{k-3},u; the x-path grows from w and closes at u.
    // Interior x's must avoid N(v) and N(u), and everything but the path
    // edges among themselves; the orientation is fixed by the given path, so
    // each cycle is produced exactly once.
    std::uint64_t total = 0;
    const int t = k - 3;
    Bits64 fixed;
    fixed.set(u);
    fixed.set(v);
    fixed.set(w);

    Bits64 used;
    auto dfs = [&](auto&& self, int last, Bits64 blocked_mid, int depth) -> void {
        if (depth == t) {
            Bits64 cand = g.neighbors(last) & g.neighbors(u);
            cand = cand.minus(blocked_mid).minus(used).minus(fixed);
            total += cand.count();
            return;
        }
        Bits64 cand =
            g.neighbors(last).minus(blocked_mid).minus(g.neighbors(u)).minus(used).minus(fixed);
        cand.for_each([&](int x) {
            used.set(x);
            self(self, x, blocked_mid | g.neighbors(last), depth + 1);
            used.reset(x);
        });
    };
    // the blocked set starts with N(v); N(w) joins it once w stops being the
    // path endpoint (inside the recursion via the running union)
    dfs(dfs, w, g.neighbors(v), 1);
    return total;
}

PathNeighborhoodSplit xy_split(const Graph& g, int u, int v, int w) {
    if (u == w || !g.has_edge(u, v) || !g.has_edge(v, w))
        throw GraphError("xy_split: u,w must be distinct neighbours of v");
    Bits64 x0 = g.neighbors(u).minus(g.neighbors(w));
    x0.reset(w);
    Bits64 y0 = g.neighbors(w).minus(g.neighbors(u));
    y0.reset(u);

    PathNeighborhoodSplit s{u, v, w, {}, {}, {}};
    x0.for_each([&](int a) {
        if ((g.neighbors(a) & y0).any()) s.x.set(a);
    });
    y0.for_each([&](int b) {
        if ((g.neighbors(b) & x0).any()) s.y.set(b);
    });
    s.x.for_each([&](int a) {
        (g.neighbors(a) & s.y).for_each([&](int b) { s.cross_edges.emplace_back(a, b); });
    });
    return s;
}

bool split_is_forest(const PathNeighborhoodSplit& s) {
    std::vector<int> parent(64);
    (s.x | s.y).for_each([&](int v) { parent[v] = v; });
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [a, b] : s.cross_edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

Bits64 principal_neighbors(const Graph& g, int v) {
    Bits64 out;
    if (g.n() < 5) return out;
    auto c = count_induced_cycles(g, 5, true);
    for (const auto& cyc : *c.cycles) {
        for (int i = 0; i < 5; ++i) {
            int a = cyc[i], b = cyc[(i + 1) % 5];
            if (a == v) out.set(b);
            if (b == v) out.set(a);
        }
    }
    return out;
}

std::pair<int, std::uint64_t> per_vertex_min_profile(const Graph& g, int k) {
    auto c = count_induced_cycles(g, k);
    int arg = 0;
    for (int v = 1; v < g.n(); ++v)
        if (c.per_vertex[v] < c.per_vertex[arg]) arg = v;
    return {arg, c.per_vertex[arg]};
}

std::string census_csv_row(const std::string& id, const CycleCensus& c) {
    std::uint64_t mn = 0, mx = 0;
    if (!c.per_vertex.empty()) {
        mn = *std::min_element(c.per_vertex.begin(), c.per_vertex.end());
        mx = *std::max_element(c.per_vertex.begin(), c.per_vertex.end());
    }
    return id + "," + std::to_string(c.k) + "," + std::to_string(c.total) + "," + std::to_string(mn) +
           "," + std::to_string(mx);
}

}  // namespace planar
