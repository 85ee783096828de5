// Independent reference implementations used only by tests. They avoid the
// library's algorithm choices: matchings by exhaustive backtracking, f2 by
// vertex-subset search, girth by per-root BFS, bridges by delete-and-count.
#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "subreg/multigraph.hpp"

namespace testsupport {

using subreg::Multigraph;

inline Multigraph mk(int n, std::vector<std::pair<int, int>> edges) {
  Multigraph g;
  g.vertex_count = n;
  g.edges = std::move(edges);
  return g;
}

inline Multigraph path3() { return mk(3, {{0, 1}, {1, 2}}); }

// --- exhaustive matchings ---------------------------------------------

struct MatchingScan {
  int max_size = 0;
  // vertices missed by at least one maximum matching
  std::vector<char> missable;
  long long maximum_count = 0;
};

namespace detail {
inline void scan_rec(const Multigraph& g, int idx, int size,
                     std::vector<char>& used, MatchingScan& out) {
  if (idx == g.edge_count()) {
    if (size > out.max_size) {
      out.max_size = size;
      out.maximum_count = 0;
      std::fill(out.missable.begin(), out.missable.end(), 0);
    }
    if (size == out.max_size) {
      ++out.maximum_count;
      for (int v = 0; v < g.vertex_count; ++v)
        if (!used[v]) out.missable[v] = 1;
    }
    return;
  }
  auto [u, v] = g.edges[idx];
  if (u != v && !used[u] && !used[v]) {
    used[u] = used[v] = 1;
    scan_rec(g, idx + 1, size + 1, used, out);
    used[u] = used[v] = 0;
  }
  scan_rec(g, idx + 1, size, used, out);
}
}  // namespace detail

inline MatchingScan scan_matchings(const Multigraph& g) {
  MatchingScan out;
  out.missable.assign(g.vertex_count, 0);
  std::vector<char> used(g.vertex_count, 0);
  if (g.vertex_count == 0) {
    out.maximum_count = 1;
    return out;
  }
  detail::scan_rec(g, 0, 0, used, out);
  return out;
}

inline int exhaustive_max_matching(const Multigraph& g) {
  return scan_matchings(g).max_size;
}

// All perfect matchings as sorted edge-id sets.
inline void all_perfect_matchings_rec(const Multigraph& g, int idx,
                                      std::vector<char>& used,
                                      std::vector<int>& cur,
                                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) * 2 == g.vertex_count) {
    auto sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
    return;
  }
  if (idx == g.edge_count()) return;
  auto [u, v] = g.edges[idx];
  if (u != v && !used[u] && !used[v]) {
    used[u] = used[v] = 1;
    cur.push_back(idx);
    all_perfect_matchings_rec(g, idx + 1, used, cur, out);
    cur.pop_back();
    used[u] = used[v] = 0;
  }
  all_perfect_matchings_rec(g, idx + 1, used, cur, out);
}

inline std::vector<std::vector<int>> all_perfect_matchings(
    const Multigraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> used(g.vertex_count, 0);
  std::vector<int> cur;
  if (g.vertex_count % 2 == 0)
    all_perfect_matchings_rec(g, 0, used, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

// --- f2 by vertex subsets ----------------------------------------------

namespace detail {
// Does the subgraph induced by `mask` have a spanning 2-regular subgraph?
inline bool two_factor_on(const Multigraph& g, unsigned mask) {
  std::vector<int> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if ((mask >> u & 1) && (mask >> v & 1)) edges.push_back(e);
  }
  std::vector<int> deg(g.vertex_count, 0);
  std::vector<int> want;
  for (int v = 0; v < g.vertex_count; ++v)
    if (mask >> v & 1) want.push_back(v);
  // backtrack over the induced edges, demanding degree 2 everywhere
  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (idx == edges.size()) {
      for (int v : want)
        if (deg[v] != 2) return false;
      return true;
    }
    auto [u, v] = g.edges[edges[idx]];
    int add_u = u == v ? 2 : 1;
    if (deg[u] + add_u <= 2 && (u == v || deg[v] + 1 <= 2)) {
      deg[u] += add_u;
      if (u != v) deg[v] += 1;
      if (rec(idx + 1)) {
        deg[u] -= add_u;
        if (u != v) deg[v] -= 1;
        return true;
      }
      deg[u] -= add_u;
      if (u != v) deg[v] -= 1;
    }
    return rec(idx + 1);
  };
  return rec(0);
}
}  // namespace detail

inline int subset_f2(const Multigraph& g) {
  int n = g.vertex_count;
  for (int size = n; size >= 1; --size) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      if (detail::two_factor_on(g, mask)) return size;
    }
  }
  return 0;
}

// --- girth by per-root BFS ----------------------------------------------

inline std::optional<int> bfs_girth(const Multigraph& g) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) return 1;
  // parallel pair?
  {
    auto sorted = g.edges;
    for (auto& [u, v] : sorted)
      if (u > v) std::swap(u, v);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return 2;
  }
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int best = -1;
  for (int root = 0; root < g.vertex_count; ++root) {
    std::vector<int> dist(g.vertex_count, -1), par(g.vertex_count, -1);
    std::deque<int> q{root};
    dist[root] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          par[y] = x;
          q.push_back(y);
        } else if (y != par[x]) {
          int len = dist[x] + dist[y] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

// --- bridges by deletion ------------------------------------------------

inline int component_count(const Multigraph& g) {
  return static_cast<int>(subreg::connected_components(g).size());
}

inline std::vector<int> bridges_by_deletion(const Multigraph& g) {
  std::vector<int> out;
  int base = component_count(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto del = subreg::delete_edges(g, {e});
    if (component_count(del.graph) > base) out.push_back(e);
  }
  return out;
}

// Subdivide edge e once without the cubic/bridgeless demands of
// make_balloon; for building threads in arbitrary test fixtures.
inline Multigraph subdivide_edge(const Multigraph& g, int e) {
  Multigraph out = g;
  int w = out.vertex_count++;
  auto [u, v] = out.edges[e];
  out.edges[e] = {u, w};
  out.edges.emplace_back(w, v);
  return out;
}

// --- random subcubic multigraphs ----------------------------------------

template <typename Rng>
Multigraph random_subcubic(int n, Rng& rng, bool loops = true) {
  Multigraph g;
  g.vertex_count = n;
  std::vector<int> avail(n, 3);
  int tries = static_cast<int>(rng.below(static_cast<uint64_t>(3 * n + 1)));
  for (int i = 0; i < tries; ++i) {
    int u = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    if (u == v) {
      if (!loops || avail[u] < 2) continue;
      avail[u] -= 2;
      g.edges.emplace_back(u, u);
    } else {
      if (avail[u] < 1 || avail[v] < 1) continue;
      avail[u] -= 1;
      avail[v] -= 1;
      g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return g;
}

}  // namespace testsupport
