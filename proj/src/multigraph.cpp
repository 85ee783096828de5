#include "subreg/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace subreg {

namespace {

// Parses "<uint> <uint>" with exactly one separating space and no slack.
bool parse_int_pair(std::string_view line, int& a, int& b) {
  const char* begin = line.data();
  const char* end = begin + line.size();
  auto r1 = std::from_chars(begin, end, a);
  if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != ' ') return false;
  auto r2 = std::from_chars(r1.ptr + 1, end, b);
  if (r2.ec != std::errc() || r2.ptr != end) return false;
  return a >= 0 && b >= 0;
}

}  // namespace

Multigraph parse_multigraph(std::string_view text) {
  Multigraph g;
  int line_no = 0;
  bool have_header = false;
  int expected_edges = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? text.size() - pos
                                                 : nl - pos);
    ++line_no;
    bool last = nl == std::string_view::npos;
    pos = last ? text.size() + 1 : nl + 1;
    if (last && line.empty()) break;  // trailing newline or empty tail
    if (!line.empty() && line[0] == '#') continue;
    int a = 0, b = 0;
    if (!parse_int_pair(line, a, b))
      throw ParseError(line_no, "malformed line \"" + std::string(line) + "\"");
    if (!have_header) {
      have_header = true;
      g.vertex_count = a;
      expected_edges = b;
      continue;
    }
    if (g.edge_count() == expected_edges)
      throw ParseError(line_no, "more edge lines than the header announced");
    if (a >= g.vertex_count || b >= g.vertex_count)
      throw ParseError(line_no, "endpoint out of range [0, " +
                                    std::to_string(g.vertex_count) + ")");
    g.edges.emplace_back(a, b);
  }
  if (!have_header) throw ParseError(line_no, "missing \"n m\" header");
  if (g.edge_count() != expected_edges)
    throw ParseError(line_no, "expected " + std::to_string(expected_edges) +
                                  " edges, found " +
                                  std::to_string(g.edge_count()));
  return g;
}

std::string serialize_multigraph(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count) + ' ' +
                    std::to_string(g.edge_count()) + '\n';
  for (const auto& [u, v] : g.edges)
    out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

Multigraph read_multigraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_multigraph(buf.str());
}

int degree(const Multigraph& g, int v) {
  if (v < 0 || v >= g.vertex_count)
    throw std::invalid_argument("degree: vertex " + std::to_string(v) +
                                " out of range");
  int d = 0;
  for (const auto& [a, b] : g.edges) {
    if (a == v) ++d;
    if (b == v) ++d;  // loop counts twice
  }
  return d;
}

std::vector<int> degrees(const Multigraph& g) {
  std::vector<int> d(g.vertex_count, 0);
  for (const auto& [a, b] : g.edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

bool is_subcubic(const Multigraph& g) {
  auto d = degrees(g);
  return std::all_of(d.begin(), d.end(), [](int x) { return x <= 3; });
}

bool is_cubic(const Multigraph& g) {
  auto d = degrees(g);
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 3; });
}

void require_subcubic(const Multigraph& g, const char* where) {
  auto d = degrees(g);
  for (int v = 0; v < g.vertex_count; ++v)
    if (d[v] > 3)
      throw std::invalid_argument(std::string(where) + ": vertex " +
                                  std::to_string(v) + " has degree " +
                                  std::to_string(d[v]) + " > 3");
}

EdgeDeletion delete_edges(const Multigraph& g, const EdgeSet& to_delete) {
  std::vector<char> drop(g.edges.size(), 0);
  for (int e : to_delete) {
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument("delete_edges: unknown edge id " +
                                  std::to_string(e));
    drop[e] = 1;
  }
  EdgeDeletion out;
  out.graph.vertex_count = g.vertex_count;
  out.edge_map.assign(g.edges.size(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (drop[e]) continue;
    out.edge_map[e] = out.graph.edge_count();
    out.graph.edges.push_back(g.edges[e]);
  }
  return out;
}

std::vector<VertexSet> connected_components(const Multigraph& g) {
  std::vector<int> rep(g.vertex_count);
  std::iota(rep.begin(), rep.end(), 0);
  // union-find with path halving
  auto find = [&](int x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  };
  for (const auto& [u, v] : g.edges) {
    int a = find(u), b = find(v);
    if (a != b) rep[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexSet> comps;
  std::vector<int> comp_index(g.vertex_count, -1);
  for (int v = 0; v < g.vertex_count; ++v) {
    int r = find(v);
    if (comp_index[r] < 0) {
      comp_index[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_index[r]].push_back(v);
  }
  return comps;  // ordered by smallest member since roots are minima
}

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& verts) {
  InducedSubgraph out;
  out.orig_vertex = verts;
  std::sort(out.orig_vertex.begin(), out.orig_vertex.end());
  if (std::adjacent_find(out.orig_vertex.begin(), out.orig_vertex.end()) !=
      out.orig_vertex.end())
    throw std::invalid_argument("induced_subgraph: duplicate vertex");
  std::vector<int> new_index(g.vertex_count, -1);
  for (size_t i = 0; i < out.orig_vertex.size(); ++i) {
    int v = out.orig_vertex[i];
    if (v < 0 || v >= g.vertex_count)
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    new_index[v] = static_cast<int>(i);
  }
  out.graph.vertex_count = static_cast<int>(out.orig_vertex.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (new_index[u] < 0 || new_index[v] < 0) continue;
    out.orig_edge.push_back(e);
    out.graph.edges.emplace_back(new_index[u], new_index[v]);
  }
  return out;
}

std::vector<std::vector<Incidence>> incidence_lists(const Multigraph& g) {
  std::vector<std::vector<Incidence>> inc(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    inc[u].push_back({e, v});
    if (u != v) inc[v].push_back({e, u});
  }
  return inc;
}

bool bipartition(const Multigraph& g, Bipartition* out) {
  std::vector<int> color(g.vertex_count, -1);
  auto inc = incidence_lists(g);
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [e, w] : inc[v]) {
        if (w == v) return false;  // loop
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  if (out) {
    out->side_a.clear();
    out->side_b.clear();
    for (int v = 0; v < g.vertex_count; ++v)
      (color[v] == 0 ? out->side_a : out->side_b).push_back(v);
  }
  return true;
}

}  // namespace subreg
