#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "casesweep/prunegraph.hpp"

namespace casesweep {

/// Graphviz rendering: nodes ascending and labeled by value, edges by
/// (src, dst, color) with `color=blue|red` and the weight as `label`.
void write_dot(std::ostream& os, const WeightedDag& g, std::string_view name = "G");

[[nodiscard]] std::string to_dot(const WeightedDag& g, std::string_view name = "G");

} // namespace casesweep
