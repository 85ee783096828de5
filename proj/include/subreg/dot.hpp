#pragma once

#include <string>

#include "subreg/extract.hpp"
#include "subreg/multigraph.hpp"

namespace subreg {

// Graphviz rendering of a graph with an extracted 2-regular subgraph: each
// cycle gets its own color, unused edges are dashed, omitted vertices dimmed.
std::string to_dot(const Multigraph& g, const TwoRegularSubgraph& sub);

}  // namespace subreg
