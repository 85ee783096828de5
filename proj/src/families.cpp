#include "subreg/families.hpp"

#include <algorithm>
#include <array>

#include "subreg/structure.hpp"

namespace subreg {

namespace {

constexpr const char* kTripleEdge = "2 3\n0 1\n0 1\n0 1\n";

constexpr const char* kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

constexpr const char* kK33 =
    "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";

constexpr const char* kPetersen =
    "10 15\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n6 8\n"
    "7 9\n8 5\n9 6\n";

constexpr const char* kHeawood =
    "14 21\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n"
    "11 12\n12 13\n13 0\n0 5\n1 10\n2 7\n3 12\n4 9\n6 11\n8 13\n";

constexpr const char* kMcGee =
    "24 36\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n"
    "11 12\n12 13\n13 14\n14 15\n15 16\n16 17\n17 18\n18 19\n19 20\n20 21\n"
    "21 22\n22 23\n23 0\n0 12\n1 8\n2 19\n3 15\n4 11\n5 22\n6 18\n7 14\n"
    "9 21\n10 17\n13 20\n16 23\n";

constexpr const char* kTutteCoxeter =
    "30 45\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n"
    "11 12\n12 13\n13 14\n14 15\n15 16\n16 17\n17 18\n18 19\n19 20\n20 21\n"
    "21 22\n22 23\n23 24\n24 25\n25 26\n26 27\n27 28\n28 29\n29 0\n0 17\n"
    "1 22\n2 9\n3 26\n4 13\n5 18\n6 23\n7 28\n8 15\n10 19\n11 24\n12 29\n"
    "14 21\n16 25\n20 27\n";

bool is_triple_edge(const Multigraph& g) {
  if (g.vertex_count != 2 || g.edge_count() != 3) return false;
  for (int e = 0; e < 3; ++e)
    if (g.is_loop(e)) return false;
  return true;
}

void require_cubic_bridgeless(const Multigraph& g, const char* where) {
  if (!is_cubic(g))
    throw std::invalid_argument(std::string(where) + ": graph is not cubic");
  if (!find_cut_edges(g).empty())
    throw std::invalid_argument(std::string(where) + ": graph has a cut-edge");
}

}  // namespace

Multigraph triple_edge() { return parse_multigraph(kTripleEdge); }
Multigraph complete_k4() { return parse_multigraph(kK4); }
Multigraph complete_bipartite_k33() { return parse_multigraph(kK33); }
Multigraph petersen() { return parse_multigraph(kPetersen); }

Multigraph cube_q3() {
  Multigraph g;
  g.vertex_count = 8;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) g.edges.emplace_back(v, w);
    }
  return g;
}

Multigraph doubled_four_cycle() {
  return parse_multigraph("4 6\n0 1\n0 1\n1 2\n2 3\n2 3\n3 0\n");
}

Multigraph k23_doubled_thread() {
  // K_{2,3} on {0,1} x {2,3,4} with edge 1-4 replaced by the thread
  // 1-5-6-4, middle edge 5-6 doubled.
  return parse_multigraph(
      "7 9\n0 2\n0 3\n0 4\n1 2\n1 3\n1 5\n5 6\n5 6\n6 4\n");
}

Multigraph cage_graph(int girth) {
  switch (girth) {
    case 2: return triple_edge();
    case 3: return complete_k4();
    case 4: return complete_bipartite_k33();
    case 5: return petersen();
    case 6: return parse_multigraph(kHeawood);
    case 7: return parse_multigraph(kMcGee);
    case 8: return parse_multigraph(kTutteCoxeter);
    default:
      throw std::invalid_argument("cage_graph: no stored cage for girth " +
                                  std::to_string(girth));
  }
}

int smallest_balloon_order(int girth) {
  static constexpr std::array<int, 11> orders = {3,  5,  7,  11,  15, 25,
                                                 31, 59, 71, 113, 127};
  if (girth < 2 || girth > 12)
    throw std::invalid_argument("smallest_balloon_order: girth out of 2..12");
  return orders[static_cast<size_t>(girth - 2)];
}

Multigraph make_balloon(const Multigraph& base, int e) {
  require_cubic_bridgeless(base, "make_balloon");
  if (e < 0 || e >= base.edge_count())
    throw std::invalid_argument("make_balloon: unknown edge id");
  Multigraph out = base;
  int w = out.vertex_count++;
  auto [u, v] = out.edges[e];
  out.edges[e] = {u, w};
  out.edges.emplace_back(w, v);
  return out;
}

Multigraph smallest_balloon(int girth) {
  Multigraph base = cage_graph(girth);
  auto g0 = subreg::girth(base);
  if (!g0 || *g0 != girth)
    throw InternalCheckError("smallest_balloon: stored cage has wrong girth");
  // An edge off some shortest cycle keeps the girth when subdivided; it
  // exists because the cage is cubic, not 2-regular.
  for (int e = 0; e < base.edge_count(); ++e) {
    auto g1 = subreg::girth(delete_edges(base, {e}).graph);
    if (g1 && *g1 == girth) return make_balloon(base, e);
  }
  throw InternalCheckError(
      "smallest_balloon: every edge lies on every shortest cycle");
}

Multigraph build_tree_with_balloons(int internal_vertices, int girth) {
  if (internal_vertices < 1)
    throw std::invalid_argument(
        "build_tree_with_balloons: need at least one internal vertex");
  Multigraph balloon = smallest_balloon(girth);
  int attach = -1;  // the unique 2-vertex of the balloon
  auto bdeg = degrees(balloon);
  for (int v = 0; v < balloon.vertex_count; ++v)
    if (bdeg[v] == 2) attach = v;
  if (attach < 0)
    throw InternalCheckError("build_tree_with_balloons: balloon lost its "
                             "2-vertex");

  const int t = internal_vertices;
  Multigraph out;
  out.vertex_count = t;
  for (int i = 0; i + 1 < t; ++i) out.edges.emplace_back(i, i + 1);
  // leaf slots in caterpillar order: two at the ends, one per middle vertex
  std::vector<int> slots;
  slots.push_back(0);
  if (t == 1) {
    slots.push_back(0);
    slots.push_back(0);
  } else {
    slots.push_back(0);
    for (int i = 1; i + 1 < t; ++i) slots.push_back(i);
    slots.push_back(t - 1);
    slots.push_back(t - 1);
  }
  for (int host : slots) {
    int offset = out.vertex_count;
    out.vertex_count += balloon.vertex_count;
    for (auto [u, v] : balloon.edges)
      out.edges.emplace_back(u + offset, v + offset);
    out.edges.emplace_back(host, attach + offset);
  }
  return out;
}

Multigraph explode(const Multigraph& g, int y, const Multigraph& f, int z,
                   std::vector<std::pair<int, int>> pairing) {
  if (y < 0 || y >= g.vertex_count || degree(g, y) != 3)
    throw std::invalid_argument("explode: y must be a 3-vertex of the host");
  require_cubic_bridgeless(f, "explode");
  if (is_triple_edge(f))
    throw std::invalid_argument(
        "explode: the two-vertex triple edge is not 2-connected");
  if (z < 0 || z >= f.vertex_count)
    throw std::invalid_argument("explode: z out of range");

  EdgeSet at_y, at_z;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == y || v == y) {
      if (u == v)
        throw std::invalid_argument("explode: y carries a loop");
      at_y.push_back(e);
    }
  }
  for (int e = 0; e < f.edge_count(); ++e) {
    auto [u, v] = f.edges[e];
    if (u == z || v == z) at_z.push_back(e);
  }
  if (at_y.size() != 3 || at_z.size() != 3)
    throw std::invalid_argument("explode: need three incident edges each");
  if (pairing.empty())
    for (int i = 0; i < 3; ++i) pairing.emplace_back(at_y[i], at_z[i]);
  if (pairing.size() != 3)
    throw std::invalid_argument("explode: pairing must have three entries");
  EdgeSet seen_y, seen_z;
  for (auto [ey, ez] : pairing) {
    seen_y.push_back(ey);
    seen_z.push_back(ez);
  }
  std::sort(seen_y.begin(), seen_y.end());
  std::sort(seen_z.begin(), seen_z.end());
  if (seen_y != at_y || seen_z != at_z)
    throw std::invalid_argument(
        "explode: pairing is not a bijection of the incident edges");

  // host vertices keep their order with y removed; f vertices follow
  std::vector<int> gmap(g.vertex_count, -1), fmap(f.vertex_count, -1);
  Multigraph out;
  for (int v = 0; v < g.vertex_count; ++v)
    if (v != y) gmap[v] = out.vertex_count++;
  for (int v = 0; v < f.vertex_count; ++v)
    if (v != z) fmap[v] = out.vertex_count++;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == y || v == y) continue;
    out.edges.emplace_back(gmap[u], gmap[v]);
  }
  for (int e = 0; e < f.edge_count(); ++e) {
    auto [u, v] = f.edges[e];
    if (u == z || v == z) continue;
    out.edges.emplace_back(fmap[u], fmap[v]);
  }
  std::sort(pairing.begin(), pairing.end());
  for (auto [ey, ez] : pairing) {
    auto [a, b] = g.edges[ey];
    auto [p, q] = f.edges[ez];
    int gu = gmap[a == y ? b : a];
    int fv = fmap[p == z ? q : p];
    if (p == q)
      throw std::invalid_argument("explode: z carries a loop");
    out.edges.emplace_back(gu, fv);
  }
  return out;
}

GFamilyMember build_g_family(const GFamilySpec& spec) {
  const Multigraph& h = spec.h;
  if (!is_cubic(h))
    throw std::invalid_argument("build_g_family: H is not cubic");
  Bipartition parts;
  if (!bipartition(h, &parts))
    throw std::invalid_argument("build_g_family: H is not bipartite");
  if (!find_cut_edges(h).empty() || is_triple_edge(h) ||
      connected_components(h).size() != 1)
    throw std::invalid_argument("build_g_family: H is not 2-connected");
  if (spec.y_hat < 0 || spec.y_hat >= h.vertex_count)
    throw std::invalid_argument("build_g_family: y_hat out of range");
  const VertexSet& side_y =
      std::binary_search(parts.side_a.begin(), parts.side_a.end(), spec.y_hat)
          ? parts.side_a
          : parts.side_b;
  for (const auto& [y, ex] : spec.explosions) {
    if (y == spec.y_hat ||
        !std::binary_search(side_y.begin(), side_y.end(), y))
      throw std::invalid_argument(
          "build_g_family: explosions must hit Y - y_hat");
    (void)ex;
  }

  VertexSet keep;
  for (int v = 0; v < h.vertex_count; ++v)
    if (v != spec.y_hat) keep.push_back(v);
  auto sub = induced_subgraph(h, keep);
  Multigraph cur = sub.graph;
  if (!find_cut_edges(cur).empty() || connected_components(cur).size() != 1)
    throw std::invalid_argument("build_g_family: H - y_hat is not 2-connected");

  // current index of each original vertex of h, -1 once gone
  std::vector<int> where(h.vertex_count, -1);
  for (int v = 0; v < cur.vertex_count; ++v) where[sub.orig_vertex[v]] = v;

  GFamilyMember out;
  out.base_order = h.vertex_count;
  for (const auto& [y, ex] : spec.explosions) {
    int local_y = where[y];
    int before = cur.vertex_count;
    cur = explode(cur, local_y, ex.f, ex.z, ex.pairing);
    ++out.explosion_count;
    // explode removes local_y and shifts the tail down by one
    for (int v = 0; v < h.vertex_count; ++v) {
      if (where[v] < 0) continue;
      if (where[v] == local_y)
        where[v] = -1;
      else if (where[v] > local_y)
        --where[v];
    }
    (void)before;
  }

  auto deg = degrees(cur);
  for (int v = 0; v < cur.vertex_count; ++v)
    if (deg[v] == 2) out.two_vertices.push_back(v);
  if (out.two_vertices.size() != 3 || one_deficit(cur) != 3)
    throw InternalCheckError("build_g_family: member lost its three "
                             "2-vertices");
  if (!find_cut_edges(cur).empty())
    throw InternalCheckError("build_g_family: member has a cut-edge");
  out.graph = std::move(cur);
  return out;
}

}  // namespace subreg
