#include "planar/dot.hpp"

namespace planar {

std::string dot_export(const Graph& g, std::optional<Bits64> highlight) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.n(); ++v) {
        out += "  " + std::to_string(v);
        if (highlight && highlight->test(v)) out += " [style=filled, fillcolor=gold]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace planar
