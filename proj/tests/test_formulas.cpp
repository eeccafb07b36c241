#include "doctest.h"
#include "planar/cases.hpp"
#include "planar/formulas.hpp"

using namespace planar;

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(7, 1).as_integer() == 7);
    CHECK_THROWS(Rational(1, 3).as_integer());
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("poly2") {
    Poly2 a = Poly2::linear(Rational(-4, 3), Rational(1, 3));
    Poly2 sq = mul_linear(a, a);
    CHECK(sq.at(19) == Rational(25));  // ((19-4)/3)^2
    CHECK_THROWS(mul_linear(sq, a));
}

TEST_CASE("closed forms") {
    CHECK(fi_c4(10) == 28);
    CHECK(fi_c4(4) == 1);
    CHECK(fi_c4(60) == 1653);
    CHECK(fi_c5(19) == 77);
    CHECK(fi_c5(20) == 87);
    CHECK(fi_c5(21) == 98);
    CHECK(fi_c5(10) == 14);
    CHECK(lemma5_count(4, 4, 1) == 77);
    CHECK(fi_c5(22) - fi_c5(21) == 12);
    CHECK(recursion_step(22) == 12);
    CHECK_THROWS_AS(fi_c4(3), FormulaError);
    CHECK_THROWS_AS(eval_named("nope", {1}), FormulaError);
    CHECK(eval_named("fi_c4", {10}) == 28);
    CHECK(eval_named("lemma5", {4, 4, 1}) == 77);
    CHECK(eval_named("recursion_step", {22}) == 12);
    CHECK_THROWS_AS(eval_named("fi_c4", {1, 2}), FormulaError);
}

TEST_CASE("recursion holds across residues") {
    for (std::int64_t n = 20; n <= 200; ++n) CHECK(fi_c5(n) - fi_c5(n - 1) == recursion_step(n));
}

TEST_CASE("case 1: all faces empty") {
    auto ev = solve_case(case_arrangement(1));
    CHECK(ev.k1 == Rational(4, 3));
    CHECK(ev.k2 == Rational(4, 3));
    CHECK(ev.k3 == Rational(4, 3));
    CHECK(ev.standalone == 0);
    CHECK(ev.total.at(19) == Rational((19 * 19 - 8 * 19 + 16), 3));
}

TEST_CASE("case 7 with m=4 reproduces the extremal count") {
    auto ev = solve_case(case_arrangement(7, 4));
    CHECK(ev.k3 == Rational(16, 3));
    CHECK(ev.m4_bonus == 1);
    CHECK(ev.standalone == 11);
    for (std::int64_t n : {19, 22, 25, 31}) CHECK(ev.total.at(n) == Rational(fi_c5(n)));
}

TEST_CASE("case 5 evaluates below case 1") {
    auto c5m3 = solve_case(case_arrangement(5, 3));
    auto c1 = solve_case(case_arrangement(1));
    CHECK(c5m3.total == printed_case_total(5, 3));
    for (std::int64_t n = 19; n <= 40; ++n) CHECK(c5m3.total.at(n) < c1.total.at(n));
}

TEST_CASE("all nine cases match the printed forms at sample parameters") {
    for (int id = 1; id <= 9; ++id)
        for (int m : {3, 4, 7})
            for (int mp : {3, 4, 5})
                for (int mpp : {3, 4}) {
                    auto ev = solve_case(case_arrangement(id, m, mp, mpp));
                    CHECK(ev.total == printed_case_total(id, m, mp, mpp));
                    auto ks = printed_case_ks(id, m, mp, mpp);
                    CHECK(ev.k1 == ks[0]);
                    CHECK(ev.k2 == ks[1]);
                    CHECK(ev.k3 == ks[2]);
                }
}

TEST_CASE("argmax is case 7 with m=4") {
    for (std::int64_t n : {19, 20, 33, 60, 100}) {
        auto am = argmax_case(n);
        CHECK(am.best.case_id == 7);
        CHECK(am.best.assignment[0].type == 3);
        CHECK(am.best.assignment[0].m == 4);
        CHECK(am.ties.size() == 1);
    }
    CHECK(argmax_case(19).best.total.at(19) == Rational(77));
    CHECK_THROWS_AS(argmax_case(18), CaseError);
}

TEST_CASE("invalid assignments rejected") {
    CHECK_THROWS_AS(solve_case({FaceType::t3(2), FaceType::t1(), FaceType::t1()}), CaseError);
    CHECK_THROWS_AS(case_arrangement(10), CaseError);
}
