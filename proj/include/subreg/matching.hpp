#pragma once

#include <optional>
#include <span>

#include "subreg/multigraph.hpp"

namespace subreg {

// Loop-free set of pairwise vertex-disjoint edges, ids sorted ascending.
struct Matching {
  EdgeSet edges;
  int size() const { return static_cast<int>(edges.size()); }
};

// A guaranteed matching (Petersen / weight / forbidden-edge clause held) was
// not found. Must never fire; tested as a property.
struct LemmaViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Maximum matching size. Loops and parallel multiplicity are irrelevant.
int max_matching_size(const Multigraph& g);

// Maximum-cardinality matching, optimality certified against the
// Tutte-Berge deficiency of the Gallai-Edmonds witness set.
Matching max_matching(const Multigraph& g);

// Some perfect matching (deterministic), or nullopt. No certification.
std::optional<Matching> perfect_matching(const Multigraph& g);

// Exact minimum-weight perfect matching by branch and bound; ties broken by
// the lexicographically smallest edge-id set. nullopt when no perfect
// matching exists. Weights must be non-negative, indexed by edge id.
std::optional<Matching> min_weight_perfect_matching(
    const Multigraph& g, std::span<const long long> weights);

struct AvoidingMatchingResult {
  std::optional<Matching> matching;
  // 2-edge-connected cubic, even order, at most 2 forbidden edges: the
  // forbidden-edge 1-factor guarantee applies.
  bool guarantee_applies = false;
};
// Perfect matching disjoint from `forbidden`. Throws LemmaViolation when the
// guarantee clause held but no avoiding matching exists.
AvoidingMatchingResult perfect_matching_avoiding(const Multigraph& g,
                                                 const EdgeSet& forbidden);

struct GallaiEdmondsDecomposition {
  VertexSet a;  // vertices outside d with a neighbor in d
  VertexSet c;  // covered by every maximum matching, no neighbor in d
  VertexSet d;  // missed by at least one maximum matching
  std::vector<VertexSet> components_of_d;
  int deficiency = 0;  // n - 2 nu
};
// D by the definitional per-vertex test nu(G - v) = nu(G).
GallaiEdmondsDecomposition gallai_edmonds(const Multigraph& g);

struct TutteCertificate {
  VertexSet set;
  int odd_component_count = 0;
};
// nullopt when G has a perfect matching. Requires even order. With
// minimal=true, vertices whose removal keeps o(G-S)-|S| from dropping are
// greedily discarded; on cubic inputs every member of the result then has
// its neighbors in three distinct components of G-S.
std::optional<TutteCertificate> tutte_set(const Multigraph& g, bool minimal);

// G - v has a perfect matching for every v. Single vertex: true.
bool is_factor_critical(const Multigraph& g);

// Odd-order components of G - S.
int count_odd_components(const Multigraph& g, const VertexSet& s);

}  // namespace subreg
