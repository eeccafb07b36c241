#include "planar/families.hpp"

#include <algorithm>
#include <cassert>

namespace planar {

int BuiltGraph::index_of(const std::string& name) const {
    for (int i = 0; i < int(names.size()); ++i)
        if (names[i] == name) return i;
    throw FamilyError("BuiltGraph: unknown vertex name: " + name);
}

BuiltGraph make_k2m(std::int64_t n) {
    if (n < 4) throw FamilyError("make_k2m: n must be >= 4");
    BuiltGraph b;
    b.n = int(n);
    b.names = {"a1", "a2"};
    std::int64_t m = n - 2;
    for (std::int64_t i = 0; i < m; ++i) b.names.push_back("b" + std::to_string(i + 1));
    for (std::int64_t i = 0; i < m; ++i) {
        b.edges.emplace_back(0, int(2 + i));
        b.edges.emplace_back(1, int(2 + i));
    }
    if (n <= 64) {
        b.rotation.assign(b.n, {});
        for (int i = 0; i < int(m); ++i) b.rotation[0].push_back(2 + i);
        for (int i = int(m) - 1; i >= 0; --i) b.rotation[1].push_back(2 + i);
        for (int i = 0; i < int(m); ++i) b.rotation[2 + i] = {0, 1};
    }
    return b;
}

std::array<std::int64_t, 3> required_form_sizes(std::int64_t n, std::optional<SizeOption> option) {
    if (n < 19) throw FamilyError("required form: n must be >= 19");
    int r = int(n % 3);
    if (r == 1) {
        if (option) throw FamilyError("required form: size option not allowed for n = 1 (mod 3)");
        return {(n - 7) / 3, (n - 7) / 3, (n - 16) / 3};
    }
    SizeOption opt = option.value_or(SizeOption::first);
    if (r == 2) {
        if (opt == SizeOption::first) return {(n - 5) / 3, (n - 8) / 3, (n - 17) / 3};
        return {(n - 8) / 3, (n - 8) / 3, (n - 14) / 3};
    }
    if (opt == SizeOption::first) return {n / 3 - 2, n / 3 - 3, n / 3 - 5};
    return {n / 3 - 2, n / 3 - 2, n / 3 - 6};
}

std::size_t required_form_optional_count(std::int64_t n, std::optional<SizeOption> option) {
    auto [a, b, c] = required_form_sizes(n, option);
    return std::size_t(6 + (a - 1) + (b - 1) + (c - 1));
}

RequiredFormGraph make_required_form(const RequiredFormSpec& spec) {
    auto [na, nb, nc] = required_form_sizes(spec.n, spec.option);
    RequiredFormGraph out;
    out.size_a = na;
    out.size_b = nb;
    out.size_c = nc;

    BuiltGraph& b = out.built;
    b.n = int(spec.n);
    b.names = {"u1", "u2", "u3", "w"};
    for (int i = 1; i <= 6; ++i) b.names.push_back("z" + std::to_string(i));
    const int u1 = 0, u2 = 1, u3 = 2, w = 3;
    const int z1 = 4, z2 = 5, z3 = 6, z4 = 7, z5 = 8, z6 = 9;
    auto a = [&](std::int64_t i) { return int(10 + i - 1); };            // a_i, 1-based
    auto bb = [&](std::int64_t i) { return int(10 + na + i - 1); };      // b_i
    auto c = [&](std::int64_t i) { return int(10 + na + nb + i - 1); };  // c_i
    for (std::int64_t i = 1; i <= na; ++i) b.names.push_back("a" + std::to_string(i));
    for (std::int64_t i = 1; i <= nb; ++i) b.names.push_back("b" + std::to_string(i));
    for (std::int64_t i = 1; i <= nc; ++i) b.names.push_back("c" + std::to_string(i));
    assert(int(b.names.size()) == b.n);

    // point-2 edges
    b.edges = {{u1, u2}, {u1, u3}, {u2, u3}, {u1, z1}, {u2, z1}, {u1, z2}, {u2, z4},
               {z1, z2}, {z1, z3}, {z1, z4}, {z2, z3}, {z3, z4}, {z2, w},  {z3, w},
               {z4, w},  {u2, z5}, {u3, z5}, {z5, w},  {u1, z6}, {u3, z6}, {z6, w}};
    for (std::int64_t i = 1; i <= na; ++i) {
        b.edges.emplace_back(u1, a(i));
        b.edges.emplace_back(w, a(i));
    }
    for (std::int64_t i = 1; i <= nb; ++i) {
        b.edges.emplace_back(u2, bb(i));
        b.edges.emplace_back(w, bb(i));
    }
    for (std::int64_t i = 1; i <= nc; ++i) {
        b.edges.emplace_back(u3, c(i));
        b.edges.emplace_back(w, c(i));
    }

    // point-3 list in canonical order
    out.optional_edge_list = {{a(na), z2}, {z4, bb(1)}, {bb(nb), z5},
                              {z5, c(1)},  {c(nc), z6}, {z6, a(1)}};
    for (std::int64_t i = 1; i < na; ++i) out.optional_edge_list.emplace_back(a(i), a(i + 1));
    for (std::int64_t i = 1; i < nb; ++i) out.optional_edge_list.emplace_back(bb(i), bb(i + 1));
    for (std::int64_t i = 1; i < nc; ++i) out.optional_edge_list.emplace_back(c(i), c(i + 1));

    out.mask = spec.optional_edges;
    if (out.mask.empty()) out.mask.assign(out.optional_edge_list.size(), false);
    if (out.mask.size() != out.optional_edge_list.size())
        throw FamilyError("required form: mask length must be " +
                          std::to_string(out.optional_edge_list.size()));

    // base rotation, realizing the fixed principal face list
    Rotation& rot = b.rotation;
    rot.assign(b.n, {});
    for (std::int64_t i = 1; i <= na; ++i) rot[w].push_back(a(i));
    rot[w].insert(rot[w].end(), {z2, z3, z4});
    for (std::int64_t i = 1; i <= nb; ++i) rot[w].push_back(bb(i));
    rot[w].push_back(z5);
    for (std::int64_t i = 1; i <= nc; ++i) rot[w].push_back(c(i));
    rot[w].push_back(z6);

    rot[u1] = {u2, z1, z2};
    for (std::int64_t i = na; i >= 1; --i) rot[u1].push_back(a(i));
    rot[u1].insert(rot[u1].end(), {z6, u3});
    rot[u2] = {u3, z5};
    for (std::int64_t i = nb; i >= 1; --i) rot[u2].push_back(bb(i));
    rot[u2].insert(rot[u2].end(), {z4, z1, u1});
    rot[u3] = {u1, z6};
    for (std::int64_t i = nc; i >= 1; --i) rot[u3].push_back(c(i));
    rot[u3].insert(rot[u3].end(), {z5, u2});
    rot[z1] = {u1, u2, z4, z3, z2};
    rot[z2] = {u1, z1, z3, w};
    rot[z3] = {z1, z4, w, z2};
    rot[z4] = {z1, u2, w, z3};
    rot[z5] = {w, u2, u3};
    rot[z6] = {u1, w, u3};
    for (std::int64_t i = 1; i <= na; ++i) rot[a(i)] = {u1, w};
    for (std::int64_t i = 1; i <= nb; ++i) rot[bb(i)] = {u2, w};
    for (std::int64_t i = 1; i <= nc; ++i) rot[c(i)] = {u3, w};

    // Each optional edge (p,q), with q the fan successor of p around w, lands
    // in its quadrilateral face: q goes right before w at p, p right after w
    // at q.
    auto insert_before_w = [&](int at, int v) {
        auto it = std::find(rot[at].begin(), rot[at].end(), w);
        rot[at].insert(it, v);
    };
    auto insert_after_w = [&](int at, int v) {
        auto it = std::find(rot[at].begin(), rot[at].end(), w);
        rot[at].insert(it + 1, v);
    };
    for (std::size_t i = 0; i < out.mask.size(); ++i) {
        if (!out.mask[i]) continue;
        // every list entry is stored as (fan predecessor, fan successor)
        auto [p, q] = out.optional_edge_list[i];
        b.edges.emplace_back(p, q);
        insert_before_w(p, q);
        insert_after_w(q, p);
    }
    return out;
}

namespace {

std::vector<std::int64_t> split_even(std::int64_t total, int parts) {
    std::vector<std::int64_t> out(parts, total / parts);
    for (int i = 0; i < int(total % parts); ++i) ++out[i];
    return out;
}

}  // namespace

BuiltGraph make_even_blowup(int k, std::int64_t n) {
    if (k < 3) throw FamilyError("make_even_blowup: k must be >= 3");
    if (n < 2 * k) throw FamilyError("make_even_blowup: n must be >= 2k");
    BuiltGraph b;
    b.n = int(n);
    auto sizes = split_even(n - k, k);
    for (int i = 0; i < k; ++i) b.names.push_back("s" + std::to_string(i + 1));
    std::vector<std::vector<int>> cls(k);
    int next = k;
    for (int i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < sizes[i]; ++j) {
            cls[i].push_back(next++);
            b.names.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    // singleton s_i sits between classes i-1 and i on the 2k-cycle
    for (int i = 0; i < k; ++i) {
        for (int v : cls[i]) b.edges.emplace_back(i, v);
        for (int v : cls[(i + k - 1) % k]) b.edges.emplace_back(i, v);
    }
    return b;
}

BuiltGraph make_odd_blowup(int k, std::int64_t n, bool with_paths) {
    if (k < 1) throw FamilyError("make_odd_blowup: k must be >= 1");
    if (n < 2 * k + 1) throw FamilyError("make_odd_blowup: n must be >= 2k+1");
    BuiltGraph b;
    b.n = int(n);
    auto sizes = split_even(n - (k + 1), k);
    for (int i = 0; i <= k; ++i) b.names.push_back("s" + std::to_string(i + 1));
    std::vector<std::vector<int>> cls(k);
    int next = k + 1;
    for (int i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < sizes[i]; ++j) {
            cls[i].push_back(next++);
            b.names.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    // cycle positions: s_0, C_0, s_1, C_1, ..., C_{k-1}, s_k, and the closing
    // edge s_k s_0
    for (int i = 0; i < k; ++i)
        for (int v : cls[i]) {
            b.edges.emplace_back(i, v);      // s_i
            b.edges.emplace_back(i + 1, v);  // s_{i+1}
        }
    b.edges.emplace_back(k, 0);
    if (with_paths)
        for (int i = 0; i < k; ++i)
            for (std::size_t j = 0; j + 1 < cls[i].size(); ++j)
                b.edges.emplace_back(cls[i][j], cls[i][j + 1]);
    return b;
}

BuiltGraph make_h_minus_z(int size_a, int size_b, int size_c) {
    if (size_a < 1 || size_b < 1 || size_c < 1)
        throw FamilyError("make_h_minus_z: class sizes must be >= 1");
    BuiltGraph b;
    b.n = 4 + size_a + size_b + size_c;
    b.names = {"u1", "u2", "u3", "w"};
    const int u1 = 0, u2 = 1, u3 = 2, w = 3;
    std::array<std::vector<int>, 3> cls;
    std::array<int, 3> sizes{size_a, size_b, size_c};
    std::array<char, 3> tag{'a', 'b', 'c'};
    int next = 4;
    for (int t = 0; t < 3; ++t)
        for (int i = 0; i < sizes[t]; ++i) {
            cls[t].push_back(next++);
            b.names.push_back(std::string(1, tag[t]) + std::to_string(i + 1));
        }
    b.edges = {{u1, u2}, {u1, u3}, {u2, u3}};
    for (int t = 0; t < 3; ++t)
        for (int v : cls[t]) {
            b.edges.emplace_back(t, v);  // u_{t+1}
            b.edges.emplace_back(w, v);
        }
    // skeleton rotation: three pentagons u_i x_last w y_first u_{i+1} plus
    // the quadrilateral fans
    Rotation& rot = b.rotation;
    rot.assign(b.n, {});
    for (int t = 0; t < 3; ++t)
        for (int v : cls[t]) rot[w].push_back(v);
    auto fan_down = [&](int u, const std::vector<int>& c) {
        for (auto it = c.rbegin(); it != c.rend(); ++it) rot[u].push_back(*it);
    };
    rot[u1] = {u2};
    fan_down(u1, cls[0]);
    rot[u1].push_back(u3);
    rot[u2] = {u3};
    fan_down(u2, cls[1]);
    rot[u2].push_back(u1);
    rot[u3] = {u1};
    fan_down(u3, cls[2]);
    rot[u3].push_back(u2);
    for (int t = 0; t < 3; ++t)
        for (int v : cls[t]) rot[v] = {t, w};
    return b;
}

BuiltGraph make_face_gadget(const std::array<GadgetFace, 3>& faces) {
    BuiltGraph b;
    b.names = {"u1", "u2", "u3", "w"};
    const int w = 3;
    b.edges = {{0, 1}, {0, 2}, {1, 2}};
    int next = 4;
    for (int f = 0; f < 3; ++f) {
        const GadgetFace& gf = faces[f];
        int ca = f, cb = (f + 1) % 3;  // face corners u_{f+1}, u_{f+2}
        if (gf.type == 1) continue;
        if (gf.type == 2) {
            int z = next++;
            b.names.push_back("f" + std::to_string(f + 1) + "z1");
            b.edges.emplace_back(ca, z);
            b.edges.emplace_back(cb, z);
            b.edges.emplace_back(w, z);
            continue;
        }
        if (gf.type != 3 || gf.m < 3) throw FamilyError("make_face_gadget: type-3 face needs m >= 3");
        if (!gf.optional_mask.empty() && gf.optional_mask.size() != std::size_t(gf.m - 2))
            throw FamilyError("make_face_gadget: optional mask must have m-2 entries");
        std::vector<int> z(gf.m);
        for (int i = 0; i < gf.m; ++i) {
            z[i] = next++;
            b.names.push_back("f" + std::to_string(f + 1) + "z" + std::to_string(i + 1));
        }
        b.edges.emplace_back(ca, z[0]);
        b.edges.emplace_back(cb, z[0]);
        b.edges.emplace_back(ca, z[1]);
        b.edges.emplace_back(cb, z[gf.m - 1]);
        for (int i = 1; i < gf.m; ++i) {
            b.edges.emplace_back(z[0], z[i]);
            b.edges.emplace_back(w, z[i]);
        }
        for (int i = 0; i + 2 < gf.m; ++i)
            if (i < int(gf.optional_mask.size()) && gf.optional_mask[i])
                b.edges.emplace_back(z[i + 1], z[i + 2]);
    }
    b.n = next;
    return b;
}

}  // namespace planar
