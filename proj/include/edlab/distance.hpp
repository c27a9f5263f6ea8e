#pragma once

#include <cstdint>
#include <vector>

#include "edlab/graph.hpp"

namespace edlab {

// All-pairs hop distances (BFS-exact) plus per-vertex eccentricities and the
// set of distances each vertex can realize. In a connected graph that set is
// always the full range {1..ecc(u)}; it is still computed from the BFS rows
// rather than assumed, and tests assert the range property.
class DistanceMatrix {
 public:
  static constexpr int kMaxVertices = 4096;

  int n() const { return n_; }
  int dist(int u, int v) const { return d_[(size_t)u * n_ + v]; }
  int ecc(int u) const { return ecc_[u]; }
  const std::vector<int>& valid_distances(int u) const { return valid_[u]; }
  int diameter() const { return diameter_; }
  int min_ecc() const { return radius_; }

 private:
  friend DistanceMatrix all_pairs_distances(const Graph&);
  int n_ = 0;
  int diameter_ = 0;
  int radius_ = 0;
  std::vector<std::int16_t> d_;
  std::vector<int> ecc_;
  std::vector<std::vector<int>> valid_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// Range-checked ecc accessor.
int eccentricity(const DistanceMatrix& d, int v);

}  // namespace edlab
