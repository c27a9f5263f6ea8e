#pragma once

#include <map>
#include <string>

#include "edlab/game.hpp"

namespace edlab {

// Cycle value: n for powers of two, otherwise n(p-1)/p with p the smallest
// odd prime factor of n.
int predict_cycle_fd(int n);

// Exact hypercube values known for dimensions 0..9.
const std::map<int, int>& hypercube_known_table();

struct HypercubeBounds {
  int lower = 0;
  int upper = 0;
  std::string lower_source;
  std::string upper_source;
};

// Best composable bounds on the hypercube value for dimension n. Lower comes
// from the eccentricity floor n+1, the 4k/4k+1 congruence results, and
// even-cardinality rounding; upper from the embedded-cycle bound, doubling a
// known smaller dimension, the near-power-of-two theorem, and the whole
// vertex set. Sources are recorded as citation tags.
HypercubeBounds hypercube_bounds(int n);
HypercubeBounds hypercube_bounds(int n, const std::map<int, int>& known);

// Per-start cuttlefish predictions within the stated ranges (path: n >= 10;
// distance: odd n >= 5, even n >= 6). No extrapolation outside them.
int predict_cf(int n, int start, Variant variant);

}  // namespace edlab
