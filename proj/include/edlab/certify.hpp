#pragma once

#include <string>
#include <vector>

#include "edlab/game.hpp"
#include "edlab/vertex_set.hpp"

namespace edlab {

// The 2k vertices of an isometrically embedded 2k-cycle in Q_k: the weight
// ramp 0, 1, 11, 111, ... and the complements of its interior. Self-checks
// that hypercube distance equals cycle distance for every pair.
VertexSet build_isometric_cycle_set(int k);

// Pads a closed set of Q_x into Q_n twice, once with leading zeros and once
// with leading ones. Requires floor(n/2) <= x < n and s closed in Q_x
// (checked); the result has cardinality 2|s|.
VertexSet build_doubling_set(const VertexSet& s, int n, int x);

struct CfCertificate {
  std::string name;  // "A", "B", "C"
  VertexSet set;
};

// The named confinement sets for CF_n, per variant. Every vertex of CF_n
// lies in at least one returned set (asserted).
std::vector<CfCertificate> build_cf_certificates(int n, Variant variant);

}  // namespace edlab
