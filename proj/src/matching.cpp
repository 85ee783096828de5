#include "subreg/matching.hpp"

#include <algorithm>
#include <numeric>

#include "subreg/structure.hpp"

namespace subreg {

namespace {

// Classic blossom-shrinking maximum matching (contracted bases kept in an
// array, augmenting paths found by BFS). Quadratic per augmentation, which
// is plenty at the instance sizes this project sees. Buffers are reused
// across solves so per-vertex queries stay cheap in exhaustive sweeps.
class Blossom {
 public:
  explicit Blossom(const Multigraph& g) : n_(g.vertex_count), adj_(n_) {
    for (const auto& [u, v] : g.edges) {
      if (u == v) continue;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& l : adj_) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    queue_.reserve(static_cast<size_t>(n_));
  }

  // Maximum matching avoiding `excluded` (-1 for none). Returns mate array.
  const std::vector<int>& solve(int excluded) {
    match_.assign(n_, -1);
    p_.assign(n_, -1);
    base_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      if (v == excluded || match_[v] != -1) continue;
      int leaf = find_path(v, excluded);
      while (leaf != -1) {  // flip the augmenting path
        int prev = p_[leaf];
        int next = match_[prev];
        match_[leaf] = prev;
        match_[prev] = leaf;
        leaf = next;
      }
    }
    return match_;
  }

 private:
  int find_path(int root, int excluded) {
    used_.assign(n_, 0);
    p_.assign(n_, -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    queue_.clear();
    queue_.push_back(root);
    for (size_t head = 0; head < queue_.size(); ++head) {
      int v = queue_[head];
      for (int to : adj_[v]) {
        if (to == excluded) continue;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          // odd cycle: contract the blossom
          int cur_base = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = 1;
                queue_.push_back(i);
              }
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue_.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int lca(int a, int b) {
    up_.assign(n_, 0);
    for (;;) {
      a = base_[a];
      up_[a] = 1;
      if (match_[a] == -1) break;
      a = p_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (up_[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, p_, base_, queue_;
  std::vector<char> used_, blossom_, up_;
};

int matching_size_of(const std::vector<int>& mate) {
  int covered = 0;
  for (int m : mate)
    if (m >= 0) ++covered;
  return covered / 2;
}

// Smallest edge id realizing each matched pair, for reproducible output.
Matching mate_to_matching(const Multigraph& g, std::vector<int> mate) {
  Matching out;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    if (mate[u] == v && mate[v] == u) {
      out.edges.push_back(e);
      mate[u] = mate[v] = -2;  // a parallel twin must not be added too
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

int nu(const Multigraph& g) { return matching_size_of(Blossom(g).solve(-1)); }

VertexSet missed_by_some_maximum_matching(const Multigraph& g) {
  Blossom b(g);
  int full = matching_size_of(b.solve(-1));
  VertexSet d;
  for (int v = 0; v < g.vertex_count; ++v)
    if (matching_size_of(b.solve(v)) == full) d.push_back(v);
  return d;
}

}  // namespace

int max_matching_size(const Multigraph& g) { return nu(g); }

Matching max_matching(const Multigraph& g) {
  auto mate = Blossom(g).solve(-1);
  int size = matching_size_of(mate);
  // Tutte-Berge certification: the Gallai-Edmonds witness set must explain
  // every uncovered vertex.
  VertexSet d = missed_by_some_maximum_matching(g);
  std::vector<char> in_d(g.vertex_count, 0);
  for (int v : d) in_d[v] = 1;
  VertexSet a;
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    if (in_d[u] && !in_d[v]) a.push_back(v);
    if (in_d[v] && !in_d[u]) a.push_back(u);
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (count_odd_components(g, a) - static_cast<int>(a.size()) !=
      g.vertex_count - 2 * size)
    throw InternalCheckError("max_matching: Tutte-Berge certificate mismatch");
  return mate_to_matching(g, mate);
}

std::optional<Matching> perfect_matching(const Multigraph& g) {
  auto mate = Blossom(g).solve(-1);
  if (2 * matching_size_of(mate) != g.vertex_count) return std::nullopt;
  return mate_to_matching(g, std::move(mate));
}

namespace {

// Branch and bound over "cover the lowest uncovered vertex"; candidate
// solutions are compared by (weight, sorted edge-id set).
struct PmSearch {
  const Multigraph& g;
  std::span<const long long> w;
  std::vector<std::vector<Incidence>> inc;
  std::vector<char> covered;
  std::vector<int> chosen;
  long long chosen_weight = 0;
  bool found = false;
  std::vector<int> best;
  long long best_weight = 0;

  explicit PmSearch(const Multigraph& graph, std::span<const long long> ww)
      : g(graph), w(ww), inc(incidence_lists(graph)),
        covered(graph.vertex_count, 0) {
    for (auto& l : inc) {
      l.erase(std::remove_if(l.begin(), l.end(),
                             [&](const Incidence& i) {
                               return g.is_loop(i.edge);
                             }),
              l.end());
    }
  }

  // Half the sum of each uncovered vertex's cheapest usable edge; exact
  // infeasibility when some uncovered vertex has no usable edge.
  bool lower_bound(long long& lb) const {
    long long twice = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (covered[v]) continue;
      long long cheapest = -1;
      for (const auto& in : inc[v]) {
        if (covered[in.to]) continue;
        if (cheapest < 0 || w[in.edge] < cheapest) cheapest = w[in.edge];
      }
      if (cheapest < 0) return false;
      twice += cheapest;
    }
    lb = twice / 2;
    return true;
  }

  void offer() {
    std::vector<int> ids = chosen;
    std::sort(ids.begin(), ids.end());
    if (!found || chosen_weight < best_weight ||
        (chosen_weight == best_weight && ids < best)) {
      found = true;
      best = std::move(ids);
      best_weight = chosen_weight;
    }
  }

  void run() {
    int v = 0;
    while (v < g.vertex_count && covered[v]) ++v;
    if (v == g.vertex_count) {
      offer();
      return;
    }
    long long lb = 0;
    if (!lower_bound(lb)) return;
    if (found && chosen_weight + lb > best_weight) return;
    for (const auto& in : inc[v]) {
      if (covered[in.to] || in.to == v) continue;
      covered[v] = covered[in.to] = 1;
      chosen.push_back(in.edge);
      chosen_weight += w[in.edge];
      run();
      chosen_weight -= w[in.edge];
      chosen.pop_back();
      covered[v] = covered[in.to] = 0;
    }
  }
};

}  // namespace

std::optional<Matching> min_weight_perfect_matching(
    const Multigraph& g, std::span<const long long> weights) {
  if (weights.size() != g.edges.size())
    throw std::invalid_argument(
        "min_weight_perfect_matching: one weight per edge required");
  for (long long x : weights)
    if (x < 0)
      throw std::invalid_argument(
          "min_weight_perfect_matching: negative weight");
  if (g.vertex_count % 2 != 0) return std::nullopt;
  // Quick feasibility probe so hopeless instances skip the exact search.
  if (nu(g) * 2 != g.vertex_count) return std::nullopt;
  PmSearch search(g, weights);
  search.run();
  if (!search.found) return std::nullopt;
  return Matching{search.best};
}

AvoidingMatchingResult perfect_matching_avoiding(const Multigraph& g,
                                                 const EdgeSet& forbidden) {
  std::vector<long long> w(g.edges.size(), 0);
  for (int e : forbidden) {
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument(
          "perfect_matching_avoiding: unknown edge id");
    w[e] = 1;
  }
  AvoidingMatchingResult res;
  res.guarantee_applies = g.vertex_count % 2 == 0 && is_cubic(g) &&
                          forbidden.size() <= 2 &&
                          find_cut_edges(g).empty() &&
                          connected_components(g).size() == 1;
  auto m = min_weight_perfect_matching(g, w);
  if (m) {
    long long hit = 0;
    for (int e : m->edges) hit += w[e];
    if (hit == 0) res.matching = std::move(m);
  }
  if (res.guarantee_applies && !res.matching)
    throw LemmaViolation(
        "perfect_matching_avoiding: forbidden-edge 1-factor guarantee "
        "violated");
  return res;
}

GallaiEdmondsDecomposition gallai_edmonds(const Multigraph& g) {
  GallaiEdmondsDecomposition out;
  int full = nu(g);
  out.deficiency = g.vertex_count - 2 * full;
  out.d = missed_by_some_maximum_matching(g);
  std::vector<char> in_d(g.vertex_count, 0);
  for (int v : out.d) in_d[v] = 1;
  std::vector<char> in_a(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    if (in_d[u] && !in_d[v]) in_a[v] = 1;
    if (in_d[v] && !in_d[u]) in_a[u] = 1;
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (in_d[v]) continue;
    (in_a[v] ? out.a : out.c).push_back(v);
  }
  auto sub = induced_subgraph(g, out.d);
  for (const auto& comp : connected_components(sub.graph)) {
    VertexSet orig;
    for (int v : comp) orig.push_back(sub.orig_vertex[v]);
    out.components_of_d.push_back(std::move(orig));
  }
  // Tutte-Berge certification of nu through this very decomposition.
  if (count_odd_components(g, out.a) - static_cast<int>(out.a.size()) !=
      out.deficiency)
    throw InternalCheckError("gallai_edmonds: deficiency certificate failed");
  return out;
}

int count_odd_components(const Multigraph& g, const VertexSet& s) {
  std::vector<int> rep(g.vertex_count);
  std::iota(rep.begin(), rep.end(), 0);
  for (int v : s) rep[v] = -1;  // removed
  auto find = [&](int x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  };
  for (const auto& [u, v] : g.edges) {
    if (u == v || rep[u] < 0 || rep[v] < 0) continue;
    int a = find(u), b = find(v);
    if (a != b) rep[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> size(g.vertex_count, 0);
  for (int v = 0; v < g.vertex_count; ++v)
    if (rep[v] >= 0) ++size[find(v)];
  int odd = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (rep[v] == v && size[v] % 2 == 1) ++odd;
  return odd;
}

std::optional<TutteCertificate> tutte_set(const Multigraph& g, bool minimal) {
  if (g.vertex_count % 2 != 0)
    throw std::invalid_argument("tutte_set: odd order input");
  auto ge = gallai_edmonds(g);
  if (ge.deficiency == 0) return std::nullopt;
  VertexSet s = ge.a;
  int odd = count_odd_components(g, s);
  if (minimal) {
    int surplus = odd - static_cast<int>(s.size());
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < s.size(); ++i) {
        VertexSet trial = s;
        trial.erase(trial.begin() + static_cast<long>(i));
        int o = count_odd_components(g, trial);
        if (o - static_cast<int>(trial.size()) >= surplus) {
          s = std::move(trial);
          odd = o;
          surplus = odd - static_cast<int>(s.size());
          changed = true;
          break;
        }
      }
    }
  }
  if (odd < static_cast<int>(s.size()) + 2)
    throw InternalCheckError("tutte_set: witness lost the Tutte property");
  return TutteCertificate{std::move(s), odd};
}

bool is_factor_critical(const Multigraph& g) {
  if (g.vertex_count % 2 == 0) return false;
  Blossom b(g);
  int want = (g.vertex_count - 1) / 2;
  for (int v = 0; v < g.vertex_count; ++v)
    if (matching_size_of(b.solve(v)) != want) return false;
  return true;
}

}  // namespace subreg
