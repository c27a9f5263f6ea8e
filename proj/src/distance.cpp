#include "edlab/distance.hpp"

#include <algorithm>

namespace edlab {

DistanceMatrix all_pairs_distances(const Graph& g) {
  int n = g.n();
  if (n > DistanceMatrix::kMaxVertices)
    throw ResourceLimit("distance matrix capped at 4096 vertices");
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.assign((size_t)n * n, -1);
  dm.ecc_.assign(n, 0);
  dm.valid_.assign(n, {});

  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    auto* row = &dm.d_[(size_t)s * n];
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (int v : g.neighbors(u))
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
    }
    // Connectivity is a Graph invariant, so every entry is now >= 0.
    int ecc = 0;
    for (int v = 0; v < n; ++v) ecc = std::max(ecc, (int)row[v]);
    dm.ecc_[s] = ecc;
    std::vector<char> seen(ecc + 1, 0);
    for (int v = 0; v < n; ++v) seen[row[v]] = 1;
    for (int d = 1; d <= ecc; ++d)
      if (seen[d]) dm.valid_[s].push_back(d);
  }
  dm.diameter_ = *std::max_element(dm.ecc_.begin(), dm.ecc_.end());
  dm.radius_ = *std::min_element(dm.ecc_.begin(), dm.ecc_.end());
  return dm;
}

int eccentricity(const DistanceMatrix& d, int v) {
  if (v < 0 || v >= d.n()) throw InvalidParameter("vertex index out of range");
  return d.ecc(v);
}

}  // namespace edlab
