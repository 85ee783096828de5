#pragma once

#include <functional>
#include <optional>

#include "subreg/extract.hpp"
#include "subreg/multigraph.hpp"

namespace subreg {

struct OracleReport {
  int f2_exact = 0;
  TwoRegularSubgraph witness;  // lexicographically smallest maximum
  int bound = 0;               // max{0, floor((d+c-1)/2)}
  bool bound_holds = false;    // n - f2 <= bound
  bool equality_exact = false; // n - f2 == (d+c-1)/2 exactly
};

// Exact f2 by backtracking over edge subsets with every vertex of degree 0
// or 2. Deterministic; the witness is the lexicographically smallest among
// the maximum subsets. Guarded by a soft size limit.
OracleReport brute_force_f2(const Multigraph& g, int soft_limit = 16,
                            bool override_limit = false);

struct EnumerationOptions {
  bool connected_only = false;
  bool allow_loops = true;
  int max_multiplicity = 3;
};

// Every subcubic multigraph on labeled vertices 0..n-1 exactly once, in a
// fixed slot order (no isomorphism reduction). n <= 8.
void enumerate_subcubic(int n, const EnumerationOptions& options,
                        const std::function<void(const Multigraph&)>& emit);

struct TheoremReport {
  bool pass = true;
  std::string failure;  // first violated check; empty when pass
  BoundCertificate certificate;
  std::optional<int> oracle_f2;
};

// Runs extract, revalidates the certificate against the structure-derived
// classification, and (within the size limit) against the brute-force f2.
TheoremReport check_theorem(const Multigraph& g, bool run_oracle = true,
                            int oracle_limit = 16);

struct VerifySummary {
  long long graphs_checked = 0;
  long long failures = 0;
  std::vector<std::string> failure_reports;  // capped at 32 entries
};

// check_theorem over the full enumeration for every n in 1..max_n.
// Serial reference implementation.
VerifySummary verify_enumeration_serial(int max_n,
                                        const EnumerationOptions& options,
                                        bool with_oracle);

// OpenMP-parallel version: the slot tree is split into prefixes that are
// checked concurrently and merged in prefix order, so the summary is
// identical to the serial one. threads = 0 picks the OpenMP default.
VerifySummary verify_enumeration(int max_n, const EnumerationOptions& options,
                                 bool with_oracle, int threads = 0);

// Shared driver used by both verifiers: applies `check` to every enumerated
// graph and folds the outcomes into a summary. Exposed for the benchmark and
// for sweeps that need a different per-graph predicate (may return a failure
// string, empty = pass).
using GraphCheck = std::function<std::string(const Multigraph&)>;
VerifySummary sweep_enumeration_serial(int max_n,
                                       const EnumerationOptions& options,
                                       const GraphCheck& check);
VerifySummary sweep_enumeration(int max_n, const EnumerationOptions& options,
                                const GraphCheck& check, int threads = 0);

}  // namespace subreg
