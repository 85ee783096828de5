#include "subreg/dot.hpp"

#include <array>

namespace subreg {

std::string to_dot(const Multigraph& g, const TwoRegularSubgraph& sub) {
  static constexpr std::array<const char*, 8> palette = {
      "red",    "blue",       "forestgreen", "darkorange",
      "purple", "saddlebrown", "deeppink",    "teal"};
  std::vector<int> cycle_of(g.edges.size(), -1);
  for (size_t i = 0; i < sub.cycles.size(); ++i)
    for (int e : sub.cycles[i]) cycle_of[e] = static_cast<int>(i);
  std::vector<char> covered(g.vertex_count, 0);
  for (const auto& cycle : sub.cycles)
    for (int e : cycle) {
      covered[g.edges[e].first] = 1;
      covered[g.edges[e].second] = 1;
    }

  std::string out = "graph {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    out += "  " + std::to_string(v);
    if (!covered[v])
      out += " [color=gray70, fontcolor=gray70]";
    out += ";\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    out += "  " + std::to_string(u) + " -- " + std::to_string(v);
    if (cycle_of[e] >= 0) {
      out += std::string(" [color=") +
             palette[static_cast<size_t>(cycle_of[e]) % palette.size()] +
             ", penwidth=2]";
    } else {
      out += " [color=gray60, style=dashed]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace subreg
