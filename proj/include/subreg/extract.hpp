#pragma once

#include "subreg/multigraph.hpp"

namespace subreg {

enum class ComponentClass {
  single_vertex,
  balloon,
  g_family,
  two_regular,
  non_extremal,
};
const char* component_class_name(ComponentClass c);

// Vertex-disjoint cycles given as ordered edge-id lists. A loop is a cycle of
// length 1, a parallel pair one of length 2.
struct TwoRegularSubgraph {
  std::vector<std::vector<int>> cycles;
};
VertexSet covered_vertices(const Multigraph& g, const TwoRegularSubgraph& s);
// Throws InternalCheckError describing the first violated invariant.
void validate_two_regular(const Multigraph& g, const TwoRegularSubgraph& s);

struct BoundCertificate {
  int n = 0, m = 0, c = 0, d = 0;
  int bound_omitted = 0;
  int achieved_omitted = 0;
  // achieved equals n - (d+c-1)/2 exactly (needs d+c-1 even and >= 0)
  bool equality = false;
  // achieved equals max{0, floor((d+c-1)/2)}
  bool bound_attained = false;
  // per component of G minus its cut-edges, ordered by smallest vertex
  std::vector<ComponentClass> component_classes;
};
std::string certificate_to_text(const BoundCertificate& cert);

// max{0, floor((3n-2m+c-1)/2)}. Throws when 3n-2m < 0.
int bound_omitted(int n, int m, int c);

// The 3-vertex balloon gadget grafted onto every degree-2 vertex through a
// fresh cut-edge; turns a bridgeless {2,3}-degree graph into a cubic one.
struct BalloonAugmentation {
  Multigraph graph;
  int original_edge_count = 0;
  VertexSet attach_vertices;  // the former 2-vertices
};
BalloonAugmentation augment_two_vertices_with_balloons(const Multigraph& g);

struct ExtractResult {
  TwoRegularSubgraph subgraph;
  BoundCertificate certificate;
};
// Constructs a 2-regular subgraph omitting at most
// max{0, floor((d+c-1)/2)} vertices, by cut-edge recursion with perfect
// matchings on the suppressed cubic components. Deterministic.
ExtractResult extract(const Multigraph& g);

// Recomputes the equality flag and the per-component classification from the
// structure of a connected graph. `achieved_omitted` is taken from `cert`.
BoundCertificate classify_equality(const Multigraph& g, BoundCertificate cert);

// Decomposes an edge set in which every incident vertex has degree exactly 2
// into cycles; starts cycles at their smallest vertex, smallest edge first.
std::vector<std::vector<int>> trace_cycles(const Multigraph& g,
                                           const EdgeSet& edges);

}  // namespace subreg
