#include "planar/formulas.hpp"

#include <vector>

namespace planar {

std::int64_t fi_c4(std::int64_t n) {
    if (n < 4) throw FormulaError("fi_c4: n must be >= 4");
    return Rational(n * n - 5 * n + 6, 2).as_integer();
}

std::int64_t fi_c5(std::int64_t n) {
    if (n < 5) throw FormulaError("fi_c5: n must be >= 5");
    std::int64_t c = (n % 3 == 1) ? 22 : 21;
    return Rational(n * n - 8 * n + c, 3).as_integer();
}

std::int64_t lemma5_count(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1 || c < 1) throw FormulaError("lemma5: class sizes must be >= 1");
    return a * b + a * c + b * c + 5 * (a + b) + 2 * c + 11;
}

std::int64_t recursion_step(std::int64_t n) {
    if (n < 2) throw FormulaError("recursion_step: n must be >= 2");
    std::int64_t t = 2 * (n - 1);
    return t / 3 - 2;  // floor, t >= 0
}

std::int64_t eval_named(const std::string& id, const std::vector<std::int64_t>& args) {
    auto want = [&](std::size_t k) {
        if (args.size() != k) throw FormulaError("eval_named: " + id + " takes " + std::to_string(k) + " args");
    };
    if (id == "fi_c4") {
        want(1);
        return fi_c4(args[0]);
    }
    if (id == "fi_c5") {
        want(1);
        return fi_c5(args[0]);
    }
    if (id == "lemma5") {
        want(3);
        return lemma5_count(args[0], args[1], args[2]);
    }
    if (id == "recursion_step") {
        want(1);
        return recursion_step(args[0]);
    }
    throw FormulaError("eval_named: unknown formula id: " + id);
}

}  // namespace planar
