#pragma once

#include <cstdint>
#include <vector>

#include "edlab/closed_sets.hpp"
#include "edlab/graph.hpp"
#include "edlab/vertex_set.hpp"

namespace edlab {

enum class Variant { distance, path };

// Certificate bounds on the game value. upper comes from a minimum closed set
// through the start (the responder confines play to it), lower from the
// smallest closed set anywhere (play only stalls inside one) plus the
// eccentricity argument. The path-variant lower bound is reported as
// heuristic; the distance-variant bounds are exact certificates.
struct GameBounds {
  int lower = 0;
  int upper = 0;
  bool lower_is_heuristic = false;
  VertexSet upper_witness;  // closed set behind `upper`; empty when unknown
};

struct TraceStep {
  int call = 0;       // magnitude announced from the current position
  int response = 0;   // vertex the token moves to
  bool extends = false;  // true when the response visits a new vertex
};

struct SolveOptions {
  std::uint64_t state_budget = 10'000'000;        // memoized (position, set) pairs
  std::uint64_t search_node_budget = 100'000'000;  // for the certificate bounds
  double time_budget_seconds = 0;                  // 0 = unlimited, trips like budgets
  bool want_bounds = true;
  bool want_trace = false;
};

// Exact game value by memoized search over (position, visited set) states,
// one visited set solved at a time as a monotone value-iteration system.
// value is meaningful only when status == exact; on budget_exceeded the
// bounds still hold (they come from the independent set searches).
struct SolveResult {
  Variant variant = Variant::distance;
  int start = 0;
  int value = 0;
  GameBounds bounds;
  enum class Status { exact, budget_exceeded } status = Status::exact;
  std::uint64_t states_expanded = 0;
  std::vector<TraceStep> trace;  // optimal line of play until growth stops
};

GameBounds game_bounds(const Graph& g, Variant variant, int start,
                       std::uint64_t search_node_budget = 100'000'000,
                       double time_budget_seconds = 0);

SolveResult solve_game(const Graph& g, Variant variant, int start,
                       const SolveOptions& opts = {});

}  // namespace edlab
