#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planar/rational.hpp"

namespace planar {

struct FormulaError : std::domain_error {
    using std::domain_error::domain_error;
};

// Closed forms for the extremal counts.
//   fi_c4(n)   = (n^2 - 5n + 6) / 2,                     n >= 4
//   fi_c5(n)   = (n^2 - 8n + 22) / 3  if n = 1 (mod 3)
//              = (n^2 - 8n + 21) / 3  otherwise,         n >= 5
//   lemma5(A,B,C) = AB + AC + BC + 5(A+B) + 2C + 11
//   step(n)    = floor(2(n-1)/3) - 2, the one-vertex-deletion increment;
//                fi_c5(n) - fi_c5(n-1) = step(n) for n >= 20
std::int64_t fi_c4(std::int64_t n);
std::int64_t fi_c5(std::int64_t n);
std::int64_t lemma5_count(std::int64_t a, std::int64_t b, std::int64_t c);
std::int64_t recursion_step(std::int64_t n);

// formula ids: "fi_c4" (1 arg), "fi_c5" (1 arg), "lemma5" (3 args),
// "recursion_step" (1 arg); exact evaluation, throws FormulaError on a
// domain violation or a non-integral result
std::int64_t eval_named(const std::string& id, const std::vector<std::int64_t>& args);

}  // namespace planar
