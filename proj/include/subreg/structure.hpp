#pragma once

#include <optional>

#include "subreg/multigraph.hpp"

namespace subreg {

// Edges whose deletion increases the component count. Loops and edges with a
// parallel twin are never bridges.
EdgeSet find_cut_edges(const Multigraph& g);

// 3n - 2m, the gap to a cubic degree sum. Requires a subcubic graph.
int one_deficit(const Multigraph& g);

// Connected, bridgeless, exactly one vertex of degree 2, all others degree 3.
bool is_balloon(const Multigraph& g);

// Length of a shortest cycle: loop -> 1, parallel pair -> 2. nullopt on an
// acyclic graph.
std::optional<int> girth(const Multigraph& g);

struct StructureReport {
  int cut_edge_count = 0;
  int deficit = 0;
  EdgeSet cut_edges;
  std::vector<VertexSet> two_edge_connected_components;
  std::vector<bool> is_balloon_flags;  // per post-cut component
};
StructureReport analyze_structure(const Multigraph& g);

// One maximal path through degree-2 vertices, oriented from the `first` to
// the `second` endpoint of its weighted edge.
struct Thread {
  std::vector<int> edge_ids;
  std::vector<int> inner_vertices;  // size = edge_ids.size() - 1
};

struct SuppressedGraph {
  Multigraph graph;                 // cubic, loop-free
  std::vector<long long> weights;   // thread length per edge
  std::vector<Thread> threads;      // per edge of `graph`
  std::vector<int> orig_vertex;     // suppressed vertex -> original vertex
};

// Replaces every thread by one weighted edge. Requires a connected bridgeless
// graph with degrees in {2,3} that is not 2-regular. Total weight equals the
// original edge count; no loops can arise because the input has no bridge.
SuppressedGraph suppress_threads(const Multigraph& g);

// Reconstructs the original edge multiset covered by the threads; used by
// consumers that expand a 2-factor of the suppressed graph.
EdgeSet expand_thread_edges(const SuppressedGraph& s, const EdgeSet& edges);

}  // namespace subreg
