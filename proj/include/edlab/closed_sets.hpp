#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edlab/distance.hpp"
#include "edlab/graph.hpp"
#include "edlab/path_table.hpp"
#include "edlab/vertex_set.hpp"

namespace edlab {

// A set U is closed when every u in U can answer every distance the whole
// graph makes available from u (1..ecc(u)) with a witness inside U:
// for all u in U, for all d in valid_distances(u), some x in U has
// dist(u,x) = d. Path-closed is the same statement over simple-path lengths.
bool is_closed(const DistanceMatrix& d, const VertexSet& u);
bool is_path_closed(const PathLengthTable& t, const VertexSet& u);

// Greatest closed subset of s (possibly empty): repeatedly drop vertices
// missing a witness until stable. Unions of closed sets are closed, so the
// fixed point is unique and order-independent.
VertexSet closed_core(const DistanceMatrix& d, const VertexSet& s);
VertexSet path_closed_core(const PathLengthTable& t, const VertexSet& s);

// Every closed set must contain some vertex x that is eccentricity-far from
// one of its members, and then x needs ecc(x) distinct witnesses. With
// A = union over u of {v : dist(u,v) = ecc(u)}, any closed set has at least
// min_{v in A} ecc(v) + 1 vertices. Also a floor for the distance game value.
int ecc_lower_bound(const DistanceMatrix& d);

// Uniform "call -> response candidates" view of a graph, shared by the
// closed-set searches and the game engine. Distance tables have exclusive
// calls (one response distance per vertex pair); path tables do not (one
// witness can answer several lengths).
struct MoveTable {
  int n = 0;
  bool exclusive_calls = true;
  std::vector<std::vector<int>> calls;          // sorted call labels per vertex
  std::vector<std::vector<VertexSet>> targets;  // parallel to calls
  std::vector<int> max_cover;  // max # of one vertex's calls a single response answers
};

MoveTable distance_moves(const DistanceMatrix& d);
MoveTable path_moves(const PathLengthTable& t);

bool is_closed(const MoveTable& mt, const VertexSet& u);
VertexSet closed_core_in(const MoveTable& mt, const VertexSet& s);

enum class Symmetry { none, hypercube };

struct MinSetOptions {
  std::optional<int> anchor;
  Symmetry symmetry = Symmetry::none;
  std::uint64_t node_budget = 100'000'000;
  double time_budget_seconds = 0;  // 0 = unlimited; trips like the node budget
  int lower_hint = 0;  // extra lower bound from the caller (must be sound)
  bool progress = false;  // periodic progress lines on stderr
};

struct SearchOutcome {
  int optimum = 0;  // optimal cardinality, or best lower bound when budget trips
  VertexSet witness;
  std::optional<int> anchor;
  std::uint64_t nodes_explored = 0;
  enum class Status { optimal, budget_exceeded } status = Status::optimal;
};

// Minimum-cardinality (path-)closed set, optionally constrained to contain
// an anchor vertex. Iterative deepening from sound lower bounds with
// branch-and-bound over unsatisfied (vertex, call) witness constraints.
// With Symmetry::hypercube (hypercube-family graphs only) the anchor is fixed
// at vertex 0 via vertex-transitivity, coordinate-permutation orbits are
// deduplicated during branching, and closed-set cardinality evenness lets the
// deepening step by 2.
// Ties: symmetry=none returns the lexicographically least optimal witness;
// symmetry=hypercube returns the orbit-canonical witness (translated onto the
// requested anchor). Deterministic either way.
SearchOutcome min_closed_set(const Graph& g, const MinSetOptions& opts = {});
SearchOutcome min_closed_set(const Graph& g, const DistanceMatrix& d,
                             const MinSetOptions& opts = {});
SearchOutcome min_path_closed_set(const Graph& g, const MinSetOptions& opts = {});
SearchOutcome min_path_closed_set(const Graph& g, const PathLengthTable& t,
                                  const MinSetOptions& opts = {});

}  // namespace edlab
