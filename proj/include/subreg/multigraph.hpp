#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subreg {

// Vertex indices are dense 0..n-1. Sets are kept sorted ascending.
using VertexSet = std::vector<int>;
// Edge identifiers are positions in the edge list. Sorted ascending.
using EdgeSet = std::vector<int>;

// Undirected multigraph. Loops (u == v) and parallel edges are permitted.
// A loop contributes 2 to the degree of its vertex.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_loop(int e) const { return edges[e].first == edges[e].second; }
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

// Raised when an internal consistency check fails (certificate arithmetic,
// a matching that a lemma guarantees but the solver did not find, ...).
// These indicate a bug, never a property of the input.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

// .mg text format. '#' lines are comments, first non-comment line is "n m",
// then m lines "u v" (u == v encodes a loop).
Multigraph parse_multigraph(std::string_view text);
std::string serialize_multigraph(const Multigraph& g);

Multigraph read_multigraph_file(const std::string& path);

// Non-loop incidences plus twice the loops at v.
int degree(const Multigraph& g, int v);
std::vector<int> degrees(const Multigraph& g);

bool is_subcubic(const Multigraph& g);
bool is_cubic(const Multigraph& g);
// Throws std::invalid_argument naming the offending vertex.
void require_subcubic(const Multigraph& g, const char* where);

struct EdgeDeletion {
  Multigraph graph;
  // old edge id -> new edge id, or -1 for deleted edges.
  std::vector<int> edge_map;
};
EdgeDeletion delete_edges(const Multigraph& g, const EdgeSet& to_delete);

// Partition of vertices into maximal connected sets, ordered by smallest
// member. Loops do not affect connectivity.
std::vector<VertexSet> connected_components(const Multigraph& g);

struct InducedSubgraph {
  Multigraph graph;
  std::vector<int> orig_vertex;  // new vertex -> old vertex
  std::vector<int> orig_edge;    // new edge -> old edge
};
// Subgraph induced by `verts` (need not be sorted; duplicates rejected).
// New indices follow the sorted order of `verts`; edges keep relative order.
InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& verts);

struct Incidence {
  int edge;
  int to;
};
// Incidence lists in edge-id order. A loop appears once in its vertex's list.
std::vector<std::vector<Incidence>> incidence_lists(const Multigraph& g);

// Two-coloring if the graph is bipartite (loops and odd cycles disqualify).
// Returns the two color classes with vertex 0's class first per component.
struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};
bool bipartition(const Multigraph& g, Bipartition* out);

}  // namespace subreg
