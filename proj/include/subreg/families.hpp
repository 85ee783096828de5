#pragma once

#include <map>

#include "subreg/multigraph.hpp"

namespace subreg {

// Smallest cubic multigraph of the given girth, g in 2..8: triple edge, K4,
// K33, Petersen, Heawood, McGee, Tutte-Coxeter. Fixture data in .mg form.
Multigraph cage_graph(int girth);

// Order of a smallest balloon of girth g, g in 2..12. For g > 8 only the
// order is known here; no base graph is stored.
int smallest_balloon_order(int girth);

// Handy fixtures.
Multigraph triple_edge();
Multigraph complete_k4();
Multigraph complete_bipartite_k33();
Multigraph petersen();
Multigraph cube_q3();
// 4-cycle with two opposite edges doubled: cubic, bridgeless, girth 2.
Multigraph doubled_four_cycle();
// K_{2,3} with one edge replaced by a length-3 thread whose middle edge is
// doubled; bipartite, bridgeless, deficit 3. Vertices 0..6; the thread is
// 1-5-6-4 and 5-6 is the doubled edge.
Multigraph k23_doubled_thread();

// Subdivide edge e of a cubic bridgeless graph once. The new vertex gets
// index n; edge slot e becomes (u, new), and (new, v) is appended.
Multigraph make_balloon(const Multigraph& base, int e);

// Balloon of order h+1 and girth exactly g from the stored cage, g in 2..8.
// The subdivided edge is the smallest one that lies on no mandatory shortest
// cycle, so the girth is preserved.
Multigraph smallest_balloon(int girth);

// Caterpillar tree with t >= 1 internal 3-vertices whose t+2 leaves are each
// replaced by a smallest balloon of girth g. Cubic with 2t+1 cut-edges.
Multigraph build_tree_with_balloons(int internal_vertices, int girth);

// Replace y in g and z in f by three edges joining their neighborhoods.
// `pairing` maps each edge id at y to an edge id at z; empty means id order.
// f must be cubic, bridgeless and not the two-vertex triple edge.
Multigraph explode(const Multigraph& g, int y, const Multigraph& f, int z,
                   std::vector<std::pair<int, int>> pairing = {});

struct Explosion {
  Multigraph f;
  int z = 0;
  std::vector<std::pair<int, int>> pairing;  // empty = id order
};

struct GFamilySpec {
  Multigraph h;  // 2-connected cubic bipartite
  int y_hat = 0;
  std::map<int, Explosion> explosions;  // keyed by vertex of h
};

struct GFamilyMember {
  Multigraph graph;
  VertexSet two_vertices;  // the former neighbors of y_hat
  int base_order = 0;
  int explosion_count = 0;
};

// Delete y_hat from h, then apply the explosions in vertex order. The result
// is bridgeless with deficit 3 and no 2-factor. Throws std::invalid_argument
// naming the first violated clause.
GFamilyMember build_g_family(const GFamilySpec& spec);

}  // namespace subreg
