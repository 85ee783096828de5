#pragma once

#include <cstdint>

#include "subreg/multigraph.hpp"

namespace subreg {

// Deterministic splitmix64 stream; avoids the implementation-defined
// std::shuffle / distribution behavior so seeded runs are portable.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  uint64_t below(uint64_t bound) { return next() % bound; }
};

// Connected 2-edge-connected cubic multigraph on n vertices (n even, >= 2)
// by rejection sampling over random stub pairings.
Multigraph random_bridgeless_cubic(int n, Rng& rng, int max_attempts = 100000);

}  // namespace subreg
