#include "planar/cases.hpp"

namespace planar {

namespace {

void validate(const FaceAssignment& fa) {
    for (const auto& f : fa) {
        if (f.type < 1 || f.type > 3) throw CaseError("solve_case: face type must be 1, 2, or 3");
        if (f.type == 3 && f.m < 3) throw CaseError("solve_case: type-3 face needs m >= 3");
    }
}

// cycles with one endpoint-class representative and a vertex inside face fi.
// Face i sits between corners i and i+1; its fan feeds the two adjacent
// representatives, and the opposite representative always gets 2 (type 2/3).
std::array<std::int64_t, 3> z_contributions(const FaceAssignment& fa) {
    std::array<std::int64_t, 3> k{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        const auto& f = fa[i];
        int adj1 = i, adj2 = (i + 1) % 3, opp = (i + 2) % 3;
        if (f.type == 2) {
            k[opp] += 2;
        } else if (f.type == 3) {
            k[adj1] += f.m - 1;
            k[adj2] += f.m - 1;
            k[opp] += 2;
        }
    }
    return k;
}

// induced 5-cycles avoiding all three classes: per-face fan cycles plus the
// cross-face cycles per pair
std::int64_t standalone_count(const FaceAssignment& fa, int& bonus) {
    std::int64_t s = 0;
    bonus = 0;
    for (const auto& f : fa)
        if (f.type == 3) {
            s += 1;  // m=3 taken without its optional edge, m=4 with both
            if (f.m == 4) ++bonus;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const auto &a = fa[i], &b = fa[j];
            if (a.type == 1 || b.type == 1) continue;
            if (a.type == 2 && b.type == 2)
                s += 1;
            else if (a.type == 3 && b.type == 3)
                s += a.m + b.m - 1;
            else
                s += (a.type == 3 ? a.m : b.m);
        }
    return s + bonus;
}

}  // namespace

CaseEvaluation solve_case(const FaceAssignment& fa) {
    validate(fa);
    CaseEvaluation ev;
    ev.assignment = fa;
    ev.z_cycles = z_contributions(fa);
    for (const auto& f : fa) ev.z_size += (f.type == 2) ? 1 : (f.type == 3 ? f.m : 0);

    auto [ka, kb, kc] = ev.z_cycles;
    // from 2n/3 - K_j - K_l + k_i = (2n-8)/3:  K_j + K_l = k_i + 8/3
    ev.k1 = Rational(kb + kc - ka, 2) + Rational(4, 3);
    ev.k2 = Rational(ka + kc - kb, 2) + Rational(4, 3);
    ev.k3 = Rational(ka + kb - kc, 2) + Rational(4, 3);

    ev.standalone = standalone_count(fa, ev.m4_bonus);

    Poly2 a = Poly2::linear(-ev.k1, Rational(1, 3));
    Poly2 b = Poly2::linear(-ev.k2, Rational(1, 3));
    Poly2 c = Poly2::linear(-ev.k3, Rational(1, 3));
    ev.total = mul_linear(a, b) + mul_linear(a, c) + mul_linear(b, c) + Rational(ka) * a +
               Rational(kb) * b + Rational(kc) * c + Poly2::constant(Rational(ev.standalone));

    // the equality case of the T <= 2n-8 bound: k1+k2+k3 = 2|Z|
    if (ka + kb + kc != 2 * ev.z_size)
        throw CaseError("solve_case: assignment violates the cycle/Z-size equality");
    return ev;
}

FaceAssignment case_arrangement(int id, int m, int mp, int mpp) {
    using F = FaceType;
    switch (id) {
        case 1: return {F::t1(), F::t1(), F::t1()};
        case 2: return {F::t2(), F::t1(), F::t1()};
        case 3: return {F::t2(), F::t2(), F::t1()};
        case 4: return {F::t2(), F::t2(), F::t2()};
        case 5: return {F::t3(m), F::t1(), F::t1()};
        case 6: return {F::t3(m), F::t2(), F::t1()};
        case 7: return {F::t3(m), F::t2(), F::t2()};
        case 8: return {F::t3(m), F::t3(mp), F::t1()};
        case 9: return {F::t3(m), F::t3(mp), F::t3(mpp)};
    }
    throw CaseError("case_arrangement: id must be 1..9");
}

Poly2 printed_case_total(int id, int m, int mp, int mpp) {
    auto base = [](std::int64_t c) {
        return Poly2{Rational(c, 3), Rational(-8, 3), Rational(1, 3)};
    };
    std::int64_t bonus = 0;
    auto b4 = [&](int x) { if (x == 4) ++bonus; };
    Poly2 p;
    switch (id) {
        case 1: p = base(16); break;
        case 2: p = base(19); break;
        case 3: p = base(19); break;
        case 4: p = base(16); break;
        case 5: p = base(28 - 6 * m); b4(m); break;
        case 6: p = base(25 - 3 * m); b4(m); break;
        case 7: p = base(19); b4(m); break;
        case 8: p = base(28 - 3 * std::int64_t(m) * mp); b4(m); b4(mp); break;
        case 9:
            p = base(16 + 3 * (2 * std::int64_t(m) + 2 * mp + 2 * mpp - std::int64_t(m) * mp -
                               std::int64_t(mp) * mpp - std::int64_t(m) * mpp));
            b4(m); b4(mp); b4(mpp);
            break;
        default: throw CaseError("printed_case_total: id must be 1..9");
    }
    return p + Poly2::constant(Rational(bonus));
}

std::array<Rational, 3> printed_case_ks(int id, int m, int mp, int mpp) {
    auto r = [](std::int64_t n, std::int64_t d) { return Rational(n, d); };
    switch (id) {
        case 1: return {r(4, 3), r(4, 3), r(4, 3)};
        case 2: return {r(7, 3), r(7, 3), r(1, 3)};
        case 3: return {r(4, 3), r(10, 3), r(4, 3)};
        case 4: return {r(7, 3), r(7, 3), r(7, 3)};
        case 5: return {r(7, 3), r(7, 3), Rational(m) - r(2, 3)};
        case 6: return {r(4, 3), r(10, 3), Rational(m) + r(1, 3)};
        case 7: return {r(7, 3), r(7, 3), Rational(m) + r(4, 3)};
        case 8: return {Rational(mp) + r(1, 3), r(10, 3), Rational(m) + r(1, 3)};
        case 9: return {Rational(mp) + r(4, 3), Rational(mpp) + r(4, 3), Rational(m) + r(4, 3)};
    }
    throw CaseError("printed_case_ks: id must be 1..9");
}

ArgmaxResult argmax_case(std::int64_t n, int max_m) {
    if (n < 19) throw CaseError("argmax_case: n must be >= 19");
    std::vector<CaseEvaluation> all;
    auto add = [&](int id, int m = 3, int mp = 3, int mpp = 3) {
        CaseEvaluation ev = solve_case(case_arrangement(id, m, mp, mpp));
        ev.case_id = id;
        all.push_back(std::move(ev));
    };
    for (int id = 1; id <= 4; ++id) add(id);
    for (int m = 3; m <= max_m; ++m) {
        add(5, m);
        add(6, m);
        add(7, m);
        for (int mp = 3; mp <= max_m; ++mp) {
            add(8, m, mp);
            for (int mpp = 3; mpp <= max_m; ++mpp) add(9, m, mp, mpp);
        }
    }
    ArgmaxResult out{all[0], {}};
    Rational best = all[0].total.at(n);
    for (const auto& ev : all) {
        Rational t = ev.total.at(n);
        if (best < t) {
            best = t;
            out.best = ev;
        }
    }
    for (const auto& ev : all)
        if (ev.total.at(n) == best) out.ties.push_back(ev);
    return out;
}

}  // namespace planar
