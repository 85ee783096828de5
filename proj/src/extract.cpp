#include "subreg/extract.hpp"

#include <algorithm>
#include <numeric>

#include "subreg/matching.hpp"
#include "subreg/structure.hpp"

namespace subreg {

const char* component_class_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::single_vertex: return "single-vertex";
    case ComponentClass::balloon: return "balloon";
    case ComponentClass::g_family: return "G-family";
    case ComponentClass::two_regular: return "two-regular";
    case ComponentClass::non_extremal: return "non-extremal";
  }
  return "?";
}

VertexSet covered_vertices(const Multigraph& g, const TwoRegularSubgraph& s) {
  std::vector<char> in(g.vertex_count, 0);
  for (const auto& cycle : s.cycles)
    for (int e : cycle) {
      in[g.edges[e].first] = 1;
      in[g.edges[e].second] = 1;
    }
  VertexSet out;
  for (int v = 0; v < g.vertex_count; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

void validate_two_regular(const Multigraph& g, const TwoRegularSubgraph& s) {
  std::vector<int> deg(g.vertex_count, 0);
  std::vector<char> used(g.edges.size(), 0);
  for (const auto& cycle : s.cycles) {
    if (cycle.empty())
      throw InternalCheckError("two-regular subgraph: empty cycle");
    std::vector<int> local(g.vertex_count, 0);
    for (int e : cycle) {
      if (e < 0 || e >= g.edge_count())
        throw InternalCheckError("two-regular subgraph: bad edge id");
      if (used[e])
        throw InternalCheckError("two-regular subgraph: edge used twice");
      used[e] = 1;
      deg[g.edges[e].first] += 1;
      deg[g.edges[e].second] += 1;
      local[g.edges[e].first] += 1;
      local[g.edges[e].second] += 1;
    }
    // a closed cycle puts exactly 2 on each of its vertices, and it must
    // visit as many vertices as it has edges
    int on_cycle = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (local[v] == 0) continue;
      if (local[v] != 2)
        throw InternalCheckError("two-regular subgraph: open cycle");
      ++on_cycle;
    }
    if (on_cycle != static_cast<int>(cycle.size()))
      throw InternalCheckError("two-regular subgraph: cycle is not simple");
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (deg[v] != 0 && deg[v] != 2)
      throw InternalCheckError("two-regular subgraph: cycles intersect");
}

std::string certificate_to_text(const BoundCertificate& cert) {
  std::string out;
  out += "n: " + std::to_string(cert.n) + '\n';
  out += "m: " + std::to_string(cert.m) + '\n';
  out += "c: " + std::to_string(cert.c) + '\n';
  out += "d: " + std::to_string(cert.d) + '\n';
  out += "bound: " + std::to_string(cert.bound_omitted) + '\n';
  out += "achieved: " + std::to_string(cert.achieved_omitted) + '\n';
  out += std::string("equality: ") + (cert.equality ? "true" : "false") + '\n';
  out += "classes: ";
  for (size_t i = 0; i < cert.component_classes.size(); ++i) {
    if (i) out += ',';
    out += component_class_name(cert.component_classes[i]);
  }
  out += '\n';
  return out;
}

int bound_omitted(int n, int m, int c) {
  int d = 3 * n - 2 * m;
  if (d < 0)
    throw std::invalid_argument("bound_omitted: negative 1-deficit");
  int s = d + c - 1;
  return s <= 0 ? 0 : s / 2;
}

std::vector<std::vector<int>> trace_cycles(const Multigraph& g,
                                           const EdgeSet& edges) {
  std::vector<std::vector<Incidence>> inc(g.vertex_count);
  for (int e : edges) {
    auto [u, v] = g.edges[e];
    inc[u].push_back({e, v});
    if (u != v) inc[v].push_back({e, u});
  }
  std::vector<char> used(g.edges.size(), 0);
  std::vector<std::vector<int>> cycles;
  for (int v = 0; v < g.vertex_count; ++v) {
    for (const auto& start : inc[v]) {
      if (used[start.edge]) continue;
      if (start.to == v) {  // loop: a 1-cycle
        used[start.edge] = 1;
        cycles.push_back({start.edge});
        continue;
      }
      std::vector<int> cycle;
      int cur = v;
      int via = start.edge;
      int nxt = start.to;
      for (;;) {
        used[via] = 1;
        cycle.push_back(via);
        cur = nxt;
        if (cur == v) break;
        bool moved = false;
        for (const auto& in : inc[cur]) {
          if (used[in.edge]) continue;
          via = in.edge;
          nxt = in.to;
          moved = true;
          break;
        }
        if (!moved)
          throw InternalCheckError("trace_cycles: walk stuck, set was not "
                                   "2-regular");
      }
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

BalloonAugmentation augment_two_vertices_with_balloons(const Multigraph& g) {
  BalloonAugmentation out;
  out.graph = g;
  out.original_edge_count = g.edge_count();
  auto deg = degrees(g);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (deg[v] == 3) continue;
    if (deg[v] != 2)
      throw std::invalid_argument(
          "augment_two_vertices_with_balloons: degrees must be 2 or 3");
    out.attach_vertices.push_back(v);
    int a = out.graph.vertex_count;
    int b = a + 1;
    int c = a + 2;
    out.graph.vertex_count += 3;
    out.graph.edges.emplace_back(a, b);
    out.graph.edges.emplace_back(a, b);
    out.graph.edges.emplace_back(a, c);
    out.graph.edges.emplace_back(b, c);
    out.graph.edges.emplace_back(v, c);
  }
  return out;
}

namespace {

struct ConnResult {
  std::vector<std::vector<int>> cycles;  // local edge ids
  int omitted = 0;
  // (smallest local vertex of the post-cut component, class)
  std::vector<std::pair<int, ComponentClass>> leaves;
};

EdgeSet complement_edges(int edge_count, const EdgeSet& removed) {
  std::vector<char> drop(edge_count, 0);
  for (int e : removed) drop[e] = 1;
  EdgeSet keep;
  for (int e = 0; e < edge_count; ++e)
    if (!drop[e]) keep.push_back(e);
  return keep;
}

// Cycles of the suppressed graph walked back into the original graph, each
// thread oriented along the walk.
std::vector<std::vector<int>> expand_cycles(const SuppressedGraph& sup,
                                            const EdgeSet& keep) {
  std::vector<std::vector<int>> out;
  for (const auto& sup_cycle : trace_cycles(sup.graph, keep)) {
    std::vector<int> expanded;
    auto [u0, v0] = sup.graph.edges[sup_cycle[0]];
    int cur = u0;
    if (sup_cycle.size() > 1) {
      auto [u1, v1] = sup.graph.edges[sup_cycle[1]];
      cur = (v0 == u1 || v0 == v1) ? u0 : v0;
    }
    for (int e : sup_cycle) {
      auto [u, v] = sup.graph.edges[e];
      const Thread& t = sup.threads[e];
      if (u == cur) {
        expanded.insert(expanded.end(), t.edge_ids.begin(), t.edge_ids.end());
        cur = v;
      } else {
        expanded.insert(expanded.end(), t.edge_ids.rbegin(),
                        t.edge_ids.rend());
        cur = u;
      }
    }
    out.push_back(std::move(expanded));
  }
  return out;
}

// Weighted route: delete a minimum-weight perfect matching from the
// suppressed graph and expand the surviving threads. Covers all 3-vertices
// and omits one inner vertex per unit of matched weight above the matching
// cardinality.
ConnResult weighted_route(const Multigraph& h, ComponentClass cls) {
  SuppressedGraph sup = suppress_threads(h);
  auto pm = min_weight_perfect_matching(sup.graph, sup.weights);
  if (!pm)
    throw LemmaViolation(
        "extract: bridgeless cubic graph without a perfect matching");
  long long total = std::accumulate(sup.weights.begin(), sup.weights.end(),
                                    0LL);
  long long matched = 0;
  for (int e : pm->edges) matched += sup.weights[e];
  if (3 * matched > total)
    throw LemmaViolation(
        "extract: minimum-weight perfect matching above one third of the "
        "total weight");
  ConnResult out;
  out.cycles = expand_cycles(
      sup, complement_edges(sup.graph.edge_count(), pm->edges));
  out.omitted = static_cast<int>(matched - pm->size());
  out.leaves.push_back({0, cls});
  return out;
}

ConnResult extract_connected(const Multigraph& h) {
  auto deg = degrees(h);
  ConnResult out;

  bool two_regular = !deg.empty() &&
                     std::all_of(deg.begin(), deg.end(),
                                 [](int d) { return d == 2; });
  if (two_regular) {
    EdgeSet all(h.edges.size());
    std::iota(all.begin(), all.end(), 0);
    out.cycles = trace_cycles(h, all);
    out.leaves.push_back({0, h.vertex_count == 1
                                 ? ComponentClass::single_vertex
                                 : ComponentClass::two_regular});
    return out;
  }
  if (h.vertex_count == 1) {  // bare vertex, no loop
    out.omitted = 1;
    out.leaves.push_back({0, ComponentClass::single_vertex});
    return out;
  }

  EdgeSet bridges = find_cut_edges(h);
  if (!bridges.empty()) {
    int e = bridges[0];
    auto comps = connected_components(delete_edges(h, {e}).graph);
    if (comps.size() != 2)
      throw InternalCheckError("extract: cut-edge did not split in two");
    int d_here = one_deficit(h);
    int d_sum = 0;
    int c_sum = 0;
    for (const auto& comp : comps) {
      auto sub = induced_subgraph(h, comp);
      d_sum += one_deficit(sub.graph);
      c_sum += static_cast<int>(find_cut_edges(sub.graph).size());
      ConnResult part = extract_connected(sub.graph);
      for (auto& cycle : part.cycles) {
        for (int& id : cycle) id = sub.orig_edge[id];
        out.cycles.push_back(std::move(cycle));
      }
      for (auto& [mv, cls] : part.leaves)
        out.leaves.push_back({sub.orig_vertex[mv], cls});
      out.omitted += part.omitted;
    }
    if (d_here != d_sum - 2 ||
        static_cast<int>(bridges.size()) != c_sum + 1)
      throw InternalCheckError("extract: cut-edge certificate arithmetic");
    return out;
  }

  // bridgeless, connected, not 2-regular: degrees are 2 and 3
  int d = one_deficit(h);
  if (d == 0) {
    auto pm = perfect_matching(h);
    if (!pm)
      throw LemmaViolation(
          "extract: bridgeless cubic graph without a perfect matching");
    out.cycles =
        trace_cycles(h, complement_edges(h.edge_count(), pm->edges));
    out.leaves.push_back({0, ComponentClass::non_extremal});
    return out;
  }

  if (d <= 2) {
    // Suppressing the one or two 2-vertices leaves a bridgeless cubic graph;
    // a 1-factor avoiding the suppression edges yields a full 2-factor.
    SuppressedGraph sup = suppress_threads(h);
    EdgeSet forbidden;
    for (int e = 0; e < sup.graph.edge_count(); ++e)
      if (sup.weights[e] >= 2) forbidden.push_back(e);
    auto res = perfect_matching_avoiding(sup.graph, forbidden);
    if (!res.matching)
      throw LemmaViolation(
          "extract: no 1-factor avoiding the suppression edges");
    out.cycles = expand_cycles(
        sup, complement_edges(sup.graph.edge_count(), res.matching->edges));
    out.leaves.push_back({0, d == 1 ? ComponentClass::balloon
                                    : ComponentClass::non_extremal});
    return out;
  }

  if (d == 3) {
    BalloonAugmentation aug = augment_two_vertices_with_balloons(h);
    if (auto mate = perfect_matching(aug.graph)) {
      EdgeSet keep;
      std::vector<char> drop(h.edges.size(), 0);
      for (int e : mate->edges)
        if (e < aug.original_edge_count) drop[e] = 1;
      for (int e = 0; e < h.edge_count(); ++e)
        if (!drop[e]) keep.push_back(e);
      out.cycles = trace_cycles(h, keep);
      out.leaves.push_back({0, ComponentClass::non_extremal});
      return out;
    }
    // no 1-factor in the augmentation: extremal component, one vertex must
    // be omitted and the weighted route delivers exactly that
    ConnResult res = weighted_route(h, ComponentClass::g_family);
    if (res.omitted != 1)
      throw InternalCheckError(
          "extract: extremal d=3 component did not omit exactly one vertex");
    return res;
  }

  return weighted_route(h, ComponentClass::non_extremal);
}

bool exact_equality(int d, int c, int achieved) {
  int s = d + c - 1;
  return s >= 0 && s % 2 == 0 && 2 * achieved == s;
}

}  // namespace

ExtractResult extract(const Multigraph& g) {
  require_subcubic(g, "extract");
  ExtractResult out;
  std::vector<std::pair<int, ComponentClass>> leaves;
  int omitted = 0;
  auto comps = connected_components(g);
  for (const auto& comp : comps) {
    auto sub = induced_subgraph(g, comp);
    ConnResult r = extract_connected(sub.graph);
    for (auto& cycle : r.cycles) {
      for (int& id : cycle) id = sub.orig_edge[id];
      out.subgraph.cycles.push_back(std::move(cycle));
    }
    for (auto& [mv, cls] : r.leaves)
      leaves.push_back({sub.orig_vertex[mv], cls});
    omitted += r.omitted;
  }
  std::sort(leaves.begin(), leaves.end());

  BoundCertificate& cert = out.certificate;
  cert.n = g.vertex_count;
  cert.m = g.edge_count();
  cert.c = static_cast<int>(find_cut_edges(g).size());
  cert.d = one_deficit(g);
  cert.bound_omitted = bound_omitted(cert.n, cert.m, cert.c);
  cert.achieved_omitted = omitted;
  cert.bound_attained = omitted == cert.bound_omitted;
  cert.equality = comps.size() == 1 && exact_equality(cert.d, cert.c, omitted);
  for (const auto& [mv, cls] : leaves) cert.component_classes.push_back(cls);

  validate_two_regular(g, out.subgraph);
  int covered = static_cast<int>(covered_vertices(g, out.subgraph).size());
  if (covered + omitted != g.vertex_count)
    throw InternalCheckError("extract: omitted count mismatch");
  if (omitted > cert.bound_omitted)
    throw InternalCheckError("extract: certificate bound exceeded");
  return out;
}

BoundCertificate classify_equality(const Multigraph& g, BoundCertificate cert) {
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("classify_equality: input must be connected");
  cert.component_classes.clear();
  StructureReport rep = analyze_structure(g);
  Multigraph rest = delete_edges(g, rep.cut_edges).graph;
  for (const auto& comp : rep.two_edge_connected_components) {
    auto sub = induced_subgraph(rest, comp);
    const Multigraph& leaf = sub.graph;
    auto deg = degrees(leaf);
    ComponentClass cls;
    if (leaf.vertex_count == 1) {
      cls = ComponentClass::single_vertex;
    } else if (is_balloon(leaf)) {
      cls = ComponentClass::balloon;
    } else if (std::all_of(deg.begin(), deg.end(),
                           [](int d) { return d == 2; })) {
      cls = ComponentClass::two_regular;
    } else if (one_deficit(leaf) == 3 &&
               !perfect_matching(
                   augment_two_vertices_with_balloons(leaf).graph)) {
      cls = ComponentClass::g_family;
    } else {
      cls = ComponentClass::non_extremal;
    }
    cert.component_classes.push_back(cls);
  }
  cert.equality = exact_equality(cert.d, cert.c, cert.achieved_omitted);
  cert.bound_attained =
      cert.achieved_omitted ==
      bound_omitted(cert.n, cert.m, cert.c);
  return cert;
}

}  // namespace subreg
