#pragma once

#include <optional>

#include "edlab/graph.hpp"
#include "edlab/vertex_set.hpp"

namespace edlab {

// Exhaustive reference answers for cross-checking the branch-and-bound
// search. Deliberately naive: enumerate subsets by cardinality and test the
// closure predicate directly. Lexicographically least witness among optima.
struct BruteResult {
  int optimum = 0;
  VertexSet witness;
};

BruteResult brute_min_closed(const Graph& g, std::optional<int> anchor = {});      // n <= 20
BruteResult brute_min_path_closed(const Graph& g, std::optional<int> anchor = {});  // n <= 16

// Number of simple paths from u of exactly len edges, by DFS enumeration.
// Cross-checks the path-length table builder. n <= 16.
long long count_simple_paths(const Graph& g, int u, int len);

// Independent check that `set` really is closed / path-closed, written
// against the definitions rather than the MoveTable plumbing.
bool oracle_is_closed(const Graph& g, const VertexSet& set);
bool oracle_is_path_closed(const Graph& g, const VertexSet& set);  // n <= 16

}  // namespace edlab
