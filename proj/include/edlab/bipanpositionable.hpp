#pragma once

#include <cstdint>
#include <optional>

#include "edlab/graph.hpp"

namespace edlab {

enum class BipanVerdict { yes, no, budget_exceeded };

struct BipanTriple {
  int x = 0;
  int y = 0;
  int k = 0;
};

struct BipanOptions {
  // DFS node budget per (x, y, k) triple. A triple that trips it counts as
  // unresolved, never as a failure.
  long long node_budget = 10'000'000;
  int workers = 1;
};

struct BipanReport {
  BipanVerdict verdict = BipanVerdict::no;
  // First failing triple in enumeration order, present iff verdict is no and
  // the failure came from the cycle search rather than a structural guard.
  std::optional<BipanTriple> counterexample;
  long long nodes_explored = 0;
  int triples_checked = 0;
};

// Decides whether g is bipanpositionable: for every distinct pair x, y and
// every k with dist(x,y) <= k <= n/2 and k = dist(x,y) (mod 2), some
// hamiltonian cycle places x and y at cycle distance exactly k. Requires
// n <= 64. Structural guards (odd order, non-bipartite, unbalanced sides,
// disconnected, fewer than 4 vertices) short-circuit to no. All triples are
// evaluated regardless of worker count, so the report is deterministic.
BipanReport check_bipanpositionable(const Graph& g, const BipanOptions& opts = {});

inline BipanVerdict is_bipanpositionable(const Graph& g, const BipanOptions& opts = {}) {
  return check_bipanpositionable(g, opts).verdict;
}

}  // namespace edlab
