#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "planar/rational.hpp"

namespace planar {

// One of the three quadrilateral faces of the H-Z skeleton and the
// configuration of extra vertices drawn inside it: empty (1), a single vertex
// joined to both section corners and the hub (2), or the m-vertex fan (3).
struct FaceType {
    int type = 1;  // 1, 2, or 3
    int m = 0;     // number of vertices inside, >= 3, only for type 3

    static FaceType t1() { return {1, 0}; }
    static FaceType t2() { return {2, 1}; }
    static FaceType t3(int m) { return {3, m}; }
};

using FaceAssignment = std::array<FaceType, 3>;

// Solved case: each of the three class representatives sits in
// 2n/3 - K_i - K_j + (cycles through it meeting Z) = (2n-8)/3, three linear
// equations over exact rationals.
struct CaseEvaluation {
    int case_id = 0;  // 1..9 for the catalogued arrangements, 0 otherwise
    FaceAssignment assignment;
    Rational k1, k2, k3;                       // K_i = n/3 - |class_i|
    std::array<std::int64_t, 3> z_cycles{};    // per-representative cycles meeting Z
    std::int64_t z_size = 0;                   // |Z| of the assignment
    std::int64_t standalone = 0;               // cycles inside the Z-gadget, incl. bonus
    int m4_bonus = 0;                          // +1 per type-3 face with exactly 4 vertices
    Poly2 total;                               // induced 5-cycle total in n
};

struct CaseError : std::domain_error {
    using std::domain_error::domain_error;
};

CaseEvaluation solve_case(const FaceAssignment& fa);

// the catalogued arrangement for case id 1..9 (params used as applicable)
FaceAssignment case_arrangement(int case_id, int m = 3, int mp = 3, int mpp = 3);

// closed forms as printed in the case analysis, bonuses included
Poly2 printed_case_total(int case_id, int m = 3, int mp = 3, int mpp = 3);
std::array<Rational, 3> printed_case_ks(int case_id, int m = 3, int mp = 3, int mpp = 3);

struct ArgmaxResult {
    CaseEvaluation best;
    std::vector<CaseEvaluation> ties;  // all evaluations attaining the maximum
};

// maximize the case total at a fixed n over all assignments with fan sizes in
// {3..max_m}; exact rational comparison
ArgmaxResult argmax_case(std::int64_t n, int max_m = 12);

}  // namespace planar
