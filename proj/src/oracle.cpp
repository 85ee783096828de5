#include "subreg/oracle.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "subreg/matching.hpp"
#include "subreg/structure.hpp"

namespace subreg {

namespace {

// Include-first DFS in edge-id order visits subsets in lexicographic order
// of their sorted id sequences, so the first maximum found is the smallest
// and ties can be pruned.
struct F2Search {
  const Multigraph& g;
  std::vector<int> last_touch;           // edge index closing each vertex
  std::vector<std::vector<int>> closes;  // vertices closed after edge i
  std::vector<int> deg;
  std::vector<int> chosen;
  int slack;  // sum over vertices of remaining capacity toward degree 2
  int best_size = -1;
  std::vector<int> best;

  explicit F2Search(const Multigraph& graph)
      : g(graph), last_touch(graph.vertex_count, -1),
        closes(graph.edges.size()), deg(graph.vertex_count, 0),
        slack(2 * graph.vertex_count) {
    for (int e = 0; e < g.edge_count(); ++e) {
      last_touch[g.edges[e].first] = e;
      last_touch[g.edges[e].second] = e;
    }
    for (int v = 0; v < g.vertex_count; ++v)
      if (last_touch[v] >= 0) closes[last_touch[v]].push_back(v);
  }

  void run(int idx) {
    int remaining = g.edge_count() - idx;
    if (static_cast<int>(chosen.size()) +
            std::min(remaining, slack / 2) <=
        best_size)
      return;
    if (idx == g.edge_count()) {
      best_size = static_cast<int>(chosen.size());
      best = chosen;
      return;
    }
    auto [u, v] = g.edges[idx];
    int du = (u == v) ? 2 : 1;  // loops add 2 at their vertex
    if (deg[u] + du <= 2 && (u == v || deg[v] + 1 <= 2)) {
      deg[u] += du;
      if (u != v) deg[v] += 1;
      slack -= 2;
      chosen.push_back(idx);
      if (closed_ok(idx)) run(idx + 1);
      chosen.pop_back();
      slack += 2;
      deg[u] -= du;
      if (u != v) deg[v] -= 1;
    }
    if (closed_ok(idx)) run(idx + 1);
  }

  bool closed_ok(int idx) const {
    for (int v : closes[idx])
      if (deg[v] == 1) return false;
    return true;
  }
};

}  // namespace

OracleReport brute_force_f2(const Multigraph& g, int soft_limit,
                            bool override_limit) {
  if (g.vertex_count > soft_limit && !override_limit)
    throw std::invalid_argument(
        "brute_force_f2: " + std::to_string(g.vertex_count) +
        " vertices exceed the soft limit " + std::to_string(soft_limit) +
        " (pass override to force)");
  F2Search search(g);
  search.run(0);
  OracleReport rep;
  rep.f2_exact = search.best_size;
  rep.witness.cycles = trace_cycles(g, search.best);
  rep.bound =
      bound_omitted(g.vertex_count, g.edge_count(),
                    static_cast<int>(find_cut_edges(g).size()));
  int omitted = g.vertex_count - rep.f2_exact;
  rep.bound_holds = omitted <= rep.bound;
  int s = one_deficit(g) + static_cast<int>(find_cut_edges(g).size()) - 1;
  rep.equality_exact = s >= 0 && s % 2 == 0 && 2 * omitted == s;
  return rep;
}

namespace {

struct Slots {
  std::vector<std::pair<int, int>> at;  // (u,v), u <= v, lex order
  std::vector<int> caps;
};

Slots build_slots(int n, const EnumerationOptions& opt) {
  Slots s;
  int pair_cap = std::min(3, opt.max_multiplicity);
  for (int u = 0; u < n; ++u) {
    if (opt.allow_loops) {
      s.at.emplace_back(u, u);
      s.caps.push_back(1);
    }
    for (int v = u + 1; v < n; ++v) {
      s.at.emplace_back(u, v);
      s.caps.push_back(pair_cap);
    }
  }
  return s;
}

bool connected_enough(const Multigraph& g) {
  if (g.vertex_count <= 1) return true;
  std::vector<int> rep(g.vertex_count);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  };
  int parts = g.vertex_count;
  for (const auto& [u, v] : g.edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      rep[std::max(a, b)] = std::min(a, b);
      --parts;
    }
  }
  return parts == 1;
}

struct Enumerator {
  const Slots& slots;
  const EnumerationOptions& opt;
  Multigraph cur;
  std::vector<int> avail;
  const std::function<void(const Multigraph&)>& emit;

  Enumerator(int n, const Slots& s, const EnumerationOptions& o,
             const std::function<void(const Multigraph&)>& e)
      : slots(s), opt(o), emit(e) {
    cur.vertex_count = n;
    avail.assign(n, 3);
  }

  void apply(size_t idx, int mult) {
    auto [u, v] = slots.at[idx];
    int cost = (u == v) ? 2 * mult : mult;
    avail[u] -= cost;
    if (u != v) avail[v] -= mult;
    for (int k = 0; k < mult; ++k) cur.edges.emplace_back(u, v);
  }

  void undo(size_t idx, int mult) {
    auto [u, v] = slots.at[idx];
    int cost = (u == v) ? 2 * mult : mult;
    avail[u] += cost;
    if (u != v) avail[v] += mult;
    cur.edges.resize(cur.edges.size() - static_cast<size_t>(mult));
  }

  int cap_at(size_t idx) const {
    auto [u, v] = slots.at[idx];
    if (u == v) return std::min(slots.caps[idx], avail[u] / 2);
    return std::min({slots.caps[idx], avail[u], avail[v]});
  }

  void run(size_t idx) {
    if (idx == slots.at.size()) {
      if (!opt.connected_only || connected_enough(cur)) emit(cur);
      return;
    }
    int cap = cap_at(idx);
    for (int mult = 0; mult <= cap; ++mult) {
      apply(idx, mult);
      run(idx + 1);
      undo(idx, mult);
    }
  }
};

}  // namespace

void enumerate_subcubic(int n, const EnumerationOptions& options,
                        const std::function<void(const Multigraph&)>& emit) {
  if (n < 0 || n > 8)
    throw std::invalid_argument("enumerate_subcubic: n must be in 0..8");
  Slots slots = build_slots(n, options);
  Enumerator en(n, slots, options, emit);
  en.run(0);
}

TheoremReport check_theorem(const Multigraph& g, bool run_oracle,
                            int oracle_limit) {
  TheoremReport rep;
  auto fail = [&](const std::string& why) {
    rep.pass = false;
    if (rep.failure.empty())
      rep.failure = why + "\n" + serialize_multigraph(g);
  };
  try {
    ExtractResult ext = extract(g);  // validates its own subgraph and bound
    rep.certificate = ext.certificate;
    bool connected = connected_components(g).size() == 1;
    if (connected && g.vertex_count >= 1) {
      BoundCertificate reclass = classify_equality(g, ext.certificate);
      if (reclass.component_classes != ext.certificate.component_classes)
        fail("pipeline and structural component classes disagree");
      if (reclass.equality != ext.certificate.equality)
        fail("pipeline and structural equality flags disagree");
      bool all_extremal = std::all_of(
          reclass.component_classes.begin(), reclass.component_classes.end(),
          [](ComponentClass c) {
            return c == ComponentClass::single_vertex ||
                   c == ComponentClass::balloon ||
                   c == ComponentClass::g_family;
          });
      if (reclass.equality != all_extremal)
        fail("equality flag does not match the extremal classification");
    }
    if (run_oracle && g.vertex_count <= oracle_limit) {
      OracleReport oracle = brute_force_f2(g, oracle_limit);
      rep.oracle_f2 = oracle.f2_exact;
      if (!oracle.bound_holds) fail("exact f2 violates the bound");
      int oracle_omitted = g.vertex_count - oracle.f2_exact;
      if (oracle_omitted > ext.certificate.achieved_omitted)
        fail("construction covered more vertices than the exact maximum");
      if (connected &&
          oracle.equality_exact != ext.certificate.equality)
        fail("exact-equality flags of oracle and construction disagree");
    }
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  return rep;
}

namespace {

constexpr size_t kMaxReports = 32;

void fold(VerifySummary& sum, const std::string& failure) {
  ++sum.graphs_checked;
  if (!failure.empty()) {
    ++sum.failures;
    if (sum.failure_reports.size() < kMaxReports)
      sum.failure_reports.push_back(failure);
  }
}

void merge(VerifySummary& into, const VerifySummary& part) {
  into.graphs_checked += part.graphs_checked;
  into.failures += part.failures;
  for (const auto& r : part.failure_reports)
    if (into.failure_reports.size() < kMaxReports)
      into.failure_reports.push_back(r);
}

std::string default_check(const Multigraph& g, bool with_oracle) {
  TheoremReport rep = check_theorem(g, with_oracle);
  return rep.pass ? std::string() : rep.failure;
}

// Multiplicity assignments of the leading slots; each prefix is an
// independent continuation of the enumeration tree.
struct Prefix {
  std::vector<int> mults;
};

std::vector<Prefix> split_prefixes(const Slots& slots, int n,
                                   const EnumerationOptions& opt,
                                   size_t target) {
  std::vector<Prefix> frontier{{std::vector<int>{}}};
  std::function<void(const Multigraph&)> noop = [](const Multigraph&) {};
  Enumerator probe(n, slots, opt, noop);
  size_t depth = 0;
  while (depth < slots.at.size() && frontier.size() < target) {
    std::vector<Prefix> next;
    for (const auto& p : frontier) {
      for (size_t i = 0; i < p.mults.size(); ++i)
        probe.apply(i, p.mults[i]);
      int cap = probe.cap_at(depth);
      for (int mult = 0; mult <= cap; ++mult) {
        Prefix q = p;
        q.mults.push_back(mult);
        next.push_back(std::move(q));
      }
      for (size_t i = p.mults.size(); i-- > 0;) probe.undo(i, p.mults[i]);
    }
    frontier = std::move(next);
    ++depth;
  }
  return frontier;
}

}  // namespace

VerifySummary sweep_enumeration_serial(int max_n,
                                       const EnumerationOptions& options,
                                       const GraphCheck& check) {
  VerifySummary sum;
  for (int n = 1; n <= max_n; ++n)
    enumerate_subcubic(n, options, [&](const Multigraph& g) {
      fold(sum, check(g));
    });
  return sum;
}

VerifySummary sweep_enumeration(int max_n, const EnumerationOptions& options,
                                const GraphCheck& check, int threads) {
  VerifySummary sum;
  for (int n = 1; n <= max_n; ++n) {
    Slots slots = build_slots(n, options);
    std::vector<Prefix> prefixes = split_prefixes(slots, n, options, 512);
    std::vector<VerifySummary> parts(prefixes.size());
    const long count = static_cast<long>(prefixes.size());
#ifdef _OPENMP
    int want = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(want)
#endif
    for (long i = 0; i < count; ++i) {
      VerifySummary& local = parts[i];
      std::function<void(const Multigraph&)> on_graph =
          [&](const Multigraph& g) { fold(local, check(g)); };
      Enumerator en(n, slots, options, on_graph);
      const auto& mults = prefixes[i].mults;
      for (size_t s = 0; s < mults.size(); ++s) en.apply(s, mults[s]);
      en.run(mults.size());
    }
    for (const auto& part : parts) merge(sum, part);
  }
  return sum;
}

VerifySummary verify_enumeration_serial(int max_n,
                                        const EnumerationOptions& options,
                                        bool with_oracle) {
  return sweep_enumeration_serial(max_n, options, [&](const Multigraph& g) {
    return default_check(g, with_oracle);
  });
}

VerifySummary verify_enumeration(int max_n, const EnumerationOptions& options,
                                 bool with_oracle, int threads) {
  return sweep_enumeration(max_n, options,
                           [&](const Multigraph& g) {
                             return default_check(g, with_oracle);
                           },
                           threads);
}

}  // namespace subreg
