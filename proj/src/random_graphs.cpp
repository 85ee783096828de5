#include "subreg/random_graphs.hpp"

#include "subreg/structure.hpp"

namespace subreg {

Multigraph random_bridgeless_cubic(int n, Rng& rng, int max_attempts) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "random_bridgeless_cubic: order must be even and at least 2");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> stubs(static_cast<size_t>(3 * n));
    for (int i = 0; i < 3 * n; ++i) stubs[static_cast<size_t>(i)] = i / 3;
    // Fisher-Yates, then pair consecutive stubs
    for (int i = 3 * n - 1; i > 0; --i) {
      int j = static_cast<int>(rng.below(static_cast<uint64_t>(i + 1)));
      std::swap(stubs[static_cast<size_t>(i)], stubs[static_cast<size_t>(j)]);
    }
    Multigraph g;
    g.vertex_count = n;
    for (int i = 0; i < 3 * n; i += 2) {
      int u = stubs[static_cast<size_t>(i)];
      int v = stubs[static_cast<size_t>(i + 1)];
      g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (connected_components(g).size() != 1) continue;
    if (!find_cut_edges(g).empty()) continue;
    return g;
  }
  throw std::runtime_error(
      "random_bridgeless_cubic: rejection sampling exhausted its attempts");
}

}  // namespace subreg
