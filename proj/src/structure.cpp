#include "subreg/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace subreg {

namespace {

// Iterative lowpoint DFS keyed by edge id, so a parallel twin acts as a back
// edge and its class contributes no bridge. Loops are skipped outright.
struct BridgeDfs {
  const std::vector<std::vector<Incidence>>& inc;
  std::vector<int> disc, low;
  std::vector<char> is_bridge;
  int timer = 0;

  BridgeDfs(const Multigraph& g, const std::vector<std::vector<Incidence>>& i)
      : inc(i), disc(g.vertex_count, -1), low(g.vertex_count, 0),
        is_bridge(g.edges.size(), 0) {}

  void run(int root) {
    struct Frame {
      int v;
      int entry_edge;
      size_t next = 0;
    };
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < inc[f.v].size()) {
        const Incidence in = inc[f.v][f.next++];
        if (in.to == f.v) continue;              // loop
        if (in.edge == f.entry_edge) continue;   // the edge we came by
        if (disc[in.to] < 0) {
          disc[in.to] = low[in.to] = timer++;
          stack.push_back({in.to, in.edge});
        } else {
          low[f.v] = std::min(low[f.v], disc[in.to]);
        }
      } else {
        int v = f.v;
        int entry = f.entry_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) is_bridge[entry] = 1;
        }
      }
    }
  }
};

}  // namespace

EdgeSet find_cut_edges(const Multigraph& g) {
  auto inc = incidence_lists(g);
  BridgeDfs dfs(g, inc);
  for (int v = 0; v < g.vertex_count; ++v)
    if (dfs.disc[v] < 0) dfs.run(v);
  EdgeSet out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (dfs.is_bridge[e]) out.push_back(e);
  return out;
}

int one_deficit(const Multigraph& g) {
  require_subcubic(g, "one_deficit");
  return 3 * g.vertex_count - 2 * g.edge_count();
}

bool is_balloon(const Multigraph& g) {
  if (g.vertex_count < 2) return false;
  auto d = degrees(g);
  int twos = 0;
  for (int x : d) {
    if (x == 2)
      ++twos;
    else if (x != 3)
      return false;
  }
  if (twos != 1) return false;
  if (connected_components(g).size() != 1) return false;
  return find_cut_edges(g).empty();
}

std::optional<int> girth(const Multigraph& g) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) return 1;

  auto inc = incidence_lists(g);
  int best = -1;
  std::vector<int> dist(g.vertex_count);
  std::deque<int> queue;
  // Shortest cycle through edge e = e + shortest u-v path avoiding e itself.
  // A parallel twin of e yields distance 1, so parallel pairs come out as 2.
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    std::fill(dist.begin(), dist.end(), -1);
    dist[u] = 0;
    queue.assign(1, u);
    while (!queue.empty() && dist[v] < 0) {
      int x = queue.front();
      queue.pop_front();
      if (best > 0 && dist[x] + 1 >= best) break;
      for (const auto& in : inc[x]) {
        if (in.edge == e || in.to == x) continue;
        if (dist[in.to] < 0) {
          dist[in.to] = dist[x] + 1;
          queue.push_back(in.to);
        }
      }
    }
    if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    if (best == 2) break;  // cannot improve, loops already handled
  }
  if (best < 0) return std::nullopt;
  return best;
}

StructureReport analyze_structure(const Multigraph& g) {
  StructureReport r;
  r.cut_edges = find_cut_edges(g);
  r.cut_edge_count = static_cast<int>(r.cut_edges.size());
  r.deficit = one_deficit(g);
  Multigraph rest = delete_edges(g, r.cut_edges).graph;
  r.two_edge_connected_components = connected_components(rest);
  for (const auto& comp : r.two_edge_connected_components) {
    auto sub = induced_subgraph(rest, comp);
    r.is_balloon_flags.push_back(is_balloon(sub.graph));
  }
  return r;
}

SuppressedGraph suppress_threads(const Multigraph& g) {
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("suppress_threads: graph must be connected");
  auto d = degrees(g);
  bool has_three = false;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (d[v] < 2 || d[v] > 3)
      throw std::invalid_argument("suppress_threads: vertex " +
                                  std::to_string(v) + " has degree " +
                                  std::to_string(d[v]));
    if (d[v] == 3) has_three = true;
  }
  if (!has_three)
    throw std::invalid_argument("suppress_threads: graph is 2-regular");
  if (!find_cut_edges(g).empty())
    throw std::invalid_argument("suppress_threads: graph has a cut-edge");

  SuppressedGraph out;
  std::vector<int> new_index(g.vertex_count, -1);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (d[v] == 3) {
      new_index[v] = static_cast<int>(out.orig_vertex.size());
      out.orig_vertex.push_back(v);
    }
  }
  out.graph.vertex_count = static_cast<int>(out.orig_vertex.size());

  auto inc = incidence_lists(g);
  std::vector<char> consumed(g.edges.size(), 0);
  for (int sv = 0; sv < out.graph.vertex_count; ++sv) {
    int v = out.orig_vertex[sv];
    for (const auto& start : inc[v]) {
      if (consumed[start.edge]) continue;
      Thread t;
      int prev = v;
      int cur = start.to;
      int via = start.edge;
      consumed[via] = 1;
      t.edge_ids.push_back(via);
      while (d[cur] == 2) {
        t.inner_vertices.push_back(cur);
        const auto& list = inc[cur];
        // degree 2 and no loop (a loop would force a bridge): two incidences
        const Incidence& next =
            (list[0].edge == via) ? list[1] : list[0];
        prev = cur;
        cur = next.to;
        via = next.edge;
        consumed[via] = 1;
        t.edge_ids.push_back(via);
      }
      (void)prev;
      if (cur == v)
        throw InternalCheckError(
            "suppress_threads: thread closed into a loop despite "
            "bridgelessness");
      out.graph.edges.emplace_back(sv, new_index[cur]);
      out.weights.push_back(static_cast<long long>(t.edge_ids.size()));
      out.threads.push_back(std::move(t));
    }
  }
  long long total =
      std::accumulate(out.weights.begin(), out.weights.end(), 0LL);
  if (total != g.edge_count())
    throw InternalCheckError("suppress_threads: weight sum mismatch");
  if (!find_cut_edges(out.graph).empty())
    throw InternalCheckError(
        "suppress_threads: suppression produced a cut-edge");
  return out;
}

EdgeSet expand_thread_edges(const SuppressedGraph& s, const EdgeSet& edges) {
  EdgeSet out;
  for (int e : edges)
    for (int id : s.threads[e].edge_ids) out.push_back(id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace subreg
