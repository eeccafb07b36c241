#include "planar/embed.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace planar {

namespace {

int isolated_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) ++c;
    return c;
}

// ---- biconnected decomposition (lowpoint DFS with an edge stack) ----

std::vector<EdgeList> biconnected_blocks(const Graph& g) {
    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> estack;
    std::vector<EdgeList> blocks;
    int timer = 0;

    auto dfs = [&](auto&& self, int u, int parent) -> void {
        disc[u] = low[u] = timer++;
        g.neighbors(u).for_each([&](int v) {
            if (v == parent) return;
            if (disc[v] == -1) {
                estack.push_back({u, v});
                self(self, v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    EdgeList block;
                    while (true) {
                        Edge e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e.first == u && e.second == v) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (disc[v] < disc[u]) {
                estack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        });
    };

    for (int u = 0; u < n; ++u)
        if (disc[u] == -1 && g.degree(u) > 0) dfs(dfs, u, -1);
    return blocks;
}

// ---- DMP on one 2-connected block ----

struct DmpFace {
    std::vector<int> walk;  // oriented simple cycle
    Bits64 vset;
};

struct Fragment {
    Bits64 attachments;
    Bits64 component;  // empty for a lone unembedded edge
    Edge edge{-1, -1};
};

std::vector<int> find_cycle(const std::vector<Bits64>& badj, Bits64 vset) {
    int start = vset.lowest();
    std::vector<int> parent(64, -2), order;
    std::vector<int> cyc;
    auto dfs = [&](auto&& self, int u) -> bool {
        bool found = false;
        badj[u].for_each([&](int v) {
            if (found) return;
            if (parent[v] == -2) {
                parent[v] = u;
                if (self(self, v)) found = true;
            } else if (v != parent[u] && cyc.empty()) {
                // back edge u->v closes a cycle through the parent chain
                cyc.push_back(u);
                for (int x = u; x != v; x = parent[x]) cyc.push_back(parent[x]);
                found = true;
            }
        });
        return found;
    };
    parent[start] = -1;
    dfs(dfs, start);
    assert(cyc.size() >= 3);
    return cyc;
}

// per-vertex rotations of an embedded block, or nullopt if not planar
std::optional<std::map<int, std::vector<int>>> embed_block(const EdgeList& block_edges) {
    std::map<int, std::vector<int>> rot;
    if (block_edges.size() == 1) {
        auto [u, v] = block_edges[0];
        rot[u] = {v};
        rot[v] = {u};
        return rot;
    }

    Bits64 vset;
    std::vector<Bits64> badj(64);
    for (auto [u, v] : block_edges) {
        vset.set(u);
        vset.set(v);
        badj[u].set(v);
        badj[v].set(u);
    }
    int nv = vset.count(), ne = int(block_edges.size());
    if (ne > 3 * nv - 6) return std::nullopt;

    std::vector<DmpFace> faces;
    auto push_face = [&](std::vector<int> walk) {
        DmpFace f{std::move(walk), {}};
        for (int v : f.walk) f.vset.set(v);
        faces.push_back(std::move(f));
    };
    std::vector<int> cyc = find_cycle(badj, vset);
    push_face(cyc);
    push_face({cyc.rbegin(), cyc.rend()});

    Bits64 embedded_v;
    std::vector<Bits64> emb_adj(64);
    auto add_embedded = [&](int u, int v) {
        emb_adj[u].set(v);
        emb_adj[v].set(u);
        embedded_v.set(u);
        embedded_v.set(v);
    };
    for (std::size_t i = 0; i < cyc.size(); ++i) add_embedded(cyc[i], cyc[(i + 1) % cyc.size()]);

    while (true) {
        // fragments: unembedded edges between embedded vertices, then
        // connected components of unembedded vertices with their attachments
        std::vector<Fragment> frags;
        embedded_v.for_each([&](int u) {
            (badj[u].minus(emb_adj[u]) & embedded_v & Bits64::above(u)).for_each([&](int v) {
                Fragment f;
                f.attachments.set(u);
                f.attachments.set(v);
                f.edge = {u, v};
                frags.push_back(f);
            });
        });
        Bits64 rest = vset.minus(embedded_v);
        Bits64 seen;
        rest.for_each([&](int s) {
            if (seen.test(s)) return;
            Fragment f;
            std::vector<int> queue{s};
            seen.set(s);
            f.component.set(s);
            while (!queue.empty()) {
                int x = queue.back();
                queue.pop_back();
                f.attachments |= badj[x] & embedded_v;
                (badj[x] & rest).for_each([&](int y) {
                    if (!seen.test(y)) {
                        seen.set(y);
                        f.component.set(y);
                        queue.push_back(y);
                    }
                });
            }
            assert(f.attachments.count() >= 2);  // block is 2-connected
            frags.push_back(f);
        });
        if (frags.empty()) break;

        // admissible faces must contain every attachment; a fragment with
        // none kills planarity, one with a single choice is forced
        int pick = -1, pick_count = -1;
        std::vector<std::vector<int>> admissible(frags.size());
        for (std::size_t i = 0; i < frags.size(); ++i) {
            for (std::size_t fi = 0; fi < faces.size(); ++fi)
                if (frags[i].attachments.subset_of(faces[fi].vset)) admissible[i].push_back(int(fi));
            if (admissible[i].empty()) return std::nullopt;
            if (pick == -1 || int(admissible[i].size()) < pick_count) {
                pick = int(i);
                pick_count = int(admissible[i].size());
            }
        }
        const Fragment& fr = frags[pick];

        // a path through the fragment between two distinct attachments
        std::vector<int> path;
        if (fr.edge.first >= 0) {
            path = {fr.edge.first, fr.edge.second};
        } else {
            int a = fr.attachments.lowest();
            std::vector<int> parent(64, -1);
            std::vector<int> queue;
            (badj[a] & fr.component).for_each([&](int x) {
                parent[x] = -2;  // roots
                queue.push_back(x);
            });
            int hit = -1, hit_b = -1;
            for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                int x = queue[qi];
                Bits64 exits = badj[x] & embedded_v;
                exits.reset(a);
                if (exits.any()) {
                    hit = x;
                    hit_b = exits.lowest();
                    break;
                }
                (badj[x] & fr.component).for_each([&](int y) {
                    if (parent[y] == -1) {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                });
            }
            assert(hit >= 0);
            std::vector<int> mid;
            for (int x = hit; x != -2; x = parent[x]) mid.push_back(x);
            path.push_back(a);
            path.insert(path.end(), mid.rbegin(), mid.rend());
            path.push_back(hit_b);
        }

        // split the chosen face along the path
        DmpFace face = faces[admissible[pick][0]];
        const auto& w = face.walk;
        int m = int(w.size());
        int ia = -1, ib = -1;
        for (int t = 0; t < m; ++t) {
            if (w[t] == path.front()) ia = t;
            if (w[t] == path.back()) ib = t;
        }
        assert(ia >= 0 && ib >= 0 && ia != ib);
        std::vector<int> fa(path.begin(), path.end());
        for (int t = (ib + 1) % m; t != ia; t = (t + 1) % m) fa.push_back(w[t]);
        std::vector<int> fb(path.rbegin(), path.rend());
        for (int t = (ia + 1) % m; t != ib; t = (t + 1) % m) fb.push_back(w[t]);

        faces[admissible[pick][0]] = DmpFace{};
        {
            DmpFace f{std::move(fa), {}};
            for (int v : f.walk) f.vset.set(v);
            faces[admissible[pick][0]] = std::move(f);
        }
        push_face(std::move(fb));

        for (std::size_t i = 0; i + 1 < path.size(); ++i) add_embedded(path[i], path[i + 1]);
    }

    // recover rotations from the face walks: consecutive darts (u,v),(v,x)
    // pin x as the rotation successor of u at v
    std::vector<std::map<int, int>> succ(64);
    for (const auto& f : faces) {
        int m = int(f.walk.size());
        for (int t = 0; t < m; ++t) {
            int u = f.walk[t], v = f.walk[(t + 1) % m], x = f.walk[(t + 2) % m];
            succ[v][u] = x;
        }
    }
    bool ok = true;
    vset.for_each([&](int v) {
        std::vector<int> order;
        int u0 = succ[v].begin()->first;
        int u = u0;
        do {
            order.push_back(u);
            u = succ[v][u];
        } while (u != u0 && int(order.size()) <= int(succ[v].size()));
        if (int(order.size()) != badj[v].count()) ok = false;
        rot[v] = std::move(order);
    });
    assert(ok);
    return rot;
}

}  // namespace

bool is_connected(const Graph& g) {
    return component_count(g) <= 1;
}

int component_count(const Graph& g) {
    const int n = g.n();
    Bits64 seen;
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        ++comps;
        std::vector<int> queue{s};
        seen.set(s);
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            g.neighbors(x).for_each([&](int y) {
                if (!seen.test(y)) {
                    seen.set(y);
                    queue.push_back(y);
                }
            });
        }
    }
    return comps;
}

std::vector<Face> faces_of(const Graph& g, const Rotation& rot) {
    const int n = g.n();
    if (int(rot.size()) != n) throw RotationError("faces_of: rotation size != n");
    // index of u within rotation[v]
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v) {
        if (int(rot[v].size()) != g.degree(v))
            throw RotationError("faces_of: rotation[" + std::to_string(v) + "] size != degree");
        for (std::size_t i = 0; i < rot[v].size(); ++i) {
            int u = rot[v][i];
            if (u < 0 || u >= n || !g.has_edge(u, v))
                throw RotationError("faces_of: rotation[" + std::to_string(v) + "] lists a non-neighbour");
            if (!pos[v].emplace(u, int(i)).second)
                throw RotationError("faces_of: duplicate neighbour in rotation");
        }
    }

    std::vector<Face> out;
    std::vector<std::map<int, bool>> used(n);  // dart (u -> v) used
    for (int u = 0; u < n; ++u)
        for (int v : rot[u]) {
            if (used[u][v]) continue;
            Face walk;
            int a = u, b = v;
            while (!used[a][b]) {
                used[a][b] = true;
                walk.push_back(a);
                int i = pos[b][a];
                int next = rot[b][(i + 1) % rot[b].size()];
                a = b;
                b = next;
            }
            out.push_back(std::move(walk));
        }
    return out;
}

Embedding Embedding::from_rotation(const Graph& g, Rotation rot) {
    Embedding e{g, std::move(rot), {}};
    e.faces = faces_of(g, e.rotation);
    long expected = long(g.edge_count()) - g.n() + 2 * component_count(g);
    if (long(e.faces.size()) + isolated_count(g) != expected)
        throw NotPlanarError("Embedding::from_rotation: face count violates Euler's relation (got " +
                             std::to_string(e.faces.size()) + ", expected " + std::to_string(expected) +
                             ")");
    return e;
}

bool is_planar(const Graph& g) {
    if (g.n() >= 3 && g.edge_count() > 3 * g.n() - 6) return false;
    for (const auto& block : biconnected_blocks(g))
        if (!embed_block(block)) return false;
    return true;
}

Embedding embed(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("embed: graph is disconnected");
    Rotation rot(g.n());
    for (const auto& block : biconnected_blocks(g)) {
        auto br = embed_block(block);
        if (!br) throw NotPlanarError("embed: graph is not planar");
        // blocks meet only at cut vertices; each block's rotation stays
        // contiguous there, which keeps the merged system planar
        for (auto& [v, order] : *br) rot[v].insert(rot[v].end(), order.begin(), order.end());
    }
    return Embedding::from_rotation(g, std::move(rot));
}

std::pair<Region, Region> region_split(const Embedding& e, const std::vector<int>& cycle) {
    const int L = int(cycle.size());
    if (L < 3) throw GraphError("region_split: boundary must be a cycle of length >= 3");
    Bits64 cycset;
    for (int i = 0; i < L; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % L];
        if (cycset.test(u)) throw GraphError("region_split: boundary repeats a vertex");
        cycset.set(u);
        if (!e.g.has_edge(u, v)) throw GraphError("region_split: boundary cycle not present in graph");
    }

    // one face per dart
    std::map<std::pair<int, int>, int> face_of_dart;
    for (std::size_t fi = 0; fi < e.faces.size(); ++fi) {
        const auto& w = e.faces[fi];
        for (std::size_t t = 0; t < w.size(); ++t)
            face_of_dart[{w[t], w[(t + 1) % w.size()]}] = int(fi);
    }

    auto on_cycle = [&](int u, int v) {
        if (!cycset.test(u) || !cycset.test(v)) return false;
        for (int i = 0; i < L; ++i) {
            int a = cycle[i], b = cycle[(i + 1) % L];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    };

    // flood fill on the dual, not crossing the boundary cycle
    std::vector<int> side(e.faces.size(), -1);
    int nsides = 0;
    for (std::size_t f0 = 0; f0 < e.faces.size(); ++f0) {
        if (side[f0] != -1) continue;
        int id = nsides++;
        std::vector<int> queue{int(f0)};
        side[f0] = id;
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            const auto& w = e.faces[f];
            for (std::size_t t = 0; t < w.size(); ++t) {
                int u = w[t], v = w[(t + 1) % w.size()];
                if (on_cycle(u, v)) continue;
                int nf = face_of_dart.at({v, u});
                if (side[nf] == -1) {
                    side[nf] = id;
                    queue.push_back(nf);
                }
            }
        }
    }
    if (nsides != 2)
        throw NonSeparatingError("region_split: cycle does not separate the embedding into two sides");

    int first_side = side[face_of_dart.at({cycle[0], cycle[1]})];
    Region regions[2];
    for (std::size_t fi = 0; fi < e.faces.size(); ++fi) {
        int which = (side[fi] == first_side) ? 0 : 1;
        regions[which].face_indices.push_back(int(fi));
        for (int v : e.faces[fi])
            if (!cycset.test(v)) regions[which].interior.set(v);
    }
    return {regions[0], regions[1]};
}

std::optional<EmptyK27> find_empty_k27(const Embedding& e) {
    const int n = e.g.n();
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            Bits64 cn = e.g.neighbors(p) & e.g.neighbors(q);
            int t = cn.count();
            if (t < 7) continue;
            std::vector<int> ring;  // rotation at p restricted to the common neighbourhood
            for (int x : e.rotation[p])
                if (cn.test(x)) ring.push_back(x);
            for (int start = 0; start < t; ++start) {
                std::array<int, 7> win;
                for (int i = 0; i < 7; ++i) win[i] = ring[(start + i) % t];
                Bits64 middle;
                for (int i = 1; i <= 5; ++i) middle.set(win[i]);
                auto [r1, r2] = region_split(e, {p, win[0], q, win[6]});
                if (r1.interior == middle || r2.interior == middle)
                    return EmptyK27{p, q, win};
            }
        }
    }
    return std::nullopt;
}

std::string rotation_to_text(const Rotation& rot) {
    std::string out;
    for (std::size_t v = 0; v < rot.size(); ++v) {
        out += std::to_string(v) + ":";
        for (int u : rot[v]) out += " " + std::to_string(u);
        out += "\n";
    }
    return out;
}

Rotation rotation_from_text(const std::string& text) {
    Rotation rot;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw RotationError("rotation_from_text: missing ':'");
        std::size_t v = std::stoul(line.substr(0, colon));
        if (rot.size() <= v) rot.resize(v + 1);
        std::istringstream rest(line.substr(colon + 1));
        int u;
        while (rest >> u) rot[v].push_back(u);
    }
    return rot;
}

}  // namespace planar
