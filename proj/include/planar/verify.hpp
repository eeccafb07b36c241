#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planar/embed.hpp"
#include "planar/families.hpp"

namespace planar {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};
using Suite = std::vector<Check>;

bool all_pass(const Suite& s);

// Verification suites. Each re-derives its expected values from the closed
// forms and compares against fresh censuses; exact comparisons throughout.
Suite verify_theorem1();                                 // K_{2,n-2} C4 counts, n in 4..60
Suite verify_theorem2();                                 // required-form C5 counts, n in 19..31
Suite verify_optional_edges(std::uint64_t seed = 0xC0FFEE);  // mask invariance, n in 19..25
Suite verify_lemma5();                                   // stage decomposition at n = 19
Suite verify_faces();                                    // pinned face lists, n in 19..22
Suite verify_gadgets();                                  // face-gadget census grid
Suite verify_appendix_cases();                           // symbolic concordance + argmax
Suite verify_recursion();                                // first differences, n in 20..200
Suite verify_lemma4();                                   // X/Y forest property, n <= 7
Suite verify_figure2();                                  // annealing beats the closed form at n = 10
Suite verify_blowup();                                   // even blow-up count at k=3, n=12

std::vector<std::pair<std::string, Suite>> all_suites();
Suite run_suite(const std::string& name);  // throws GraphError on unknown name

std::string render_markdown(const std::string& title, const Suite& s);
std::string render_csv(const Suite& s);

// the face list of the principal required-form drawing, instantiated at
// concrete class sizes, as canonical cycles
std::vector<std::vector<int>> lemma3_face_list(const RequiredFormGraph& rf);
std::vector<int> canonical_cycle(std::vector<int> walk);

// expected face-gadget census by the summary bullets: per-pair cross counts
// plus the per-face counts, which depend on each fan's optional edges
std::int64_t gadget_expected_total(const std::array<GadgetFace, 3>& faces);

}  // namespace planar
