#pragma once

#include <optional>
#include <string>

#include "planar/graph.hpp"

namespace planar {

// Deterministic DOT text: node lines ascending, then edge lines (u<v)
// lexicographic. Highlighted nodes carry a fill attribute.
std::string dot_export(const Graph& g, std::optional<Bits64> highlight = std::nullopt);

}  // namespace planar
