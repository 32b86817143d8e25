#pragma once

#include <string>

#include "seaweed/meander.hpp"

namespace seaweed::cli {

/// Graphviz rendering: vertices 1..n share one rank in label order, top arcs
/// carry side=top, bottom arcs side=bottom (dashed), tail vertices tail=true.
std::string render_dot(const Meander& m, const std::string& title);

/// Terminal rendering. Arcs become brackets stacked by nesting depth above
/// and below the vertex line; tail vertices print as [v].
std::string render_ascii(const Meander& m);

}  // namespace seaweed::cli
