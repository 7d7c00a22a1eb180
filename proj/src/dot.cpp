#include "casesweep/dot.hpp"

#include <sstream>

namespace casesweep {

void write_dot(std::ostream& os, const WeightedDag& g, std::string_view name) {
    os << "digraph " << name << " {\n";
    os << "  rankdir=LR;\n";
    for (auto v : g.nodes()) {
        os << "  " << v << " [label=\"" << v << "\"];\n";
    }
    for (const auto& e : g.edges()) {
        os << "  " << e.src << " -> " << e.dst << " [color=" << color_name(e.color) << ", label=\"" << e.weight
           << "\"];\n";
    }
    os << "}\n";
}

std::string to_dot(const WeightedDag& g, std::string_view name) {
    std::ostringstream os;
    write_dot(os, g, name);
    return os.str();
}

} // namespace casesweep
