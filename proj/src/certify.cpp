#include "edlab/certify.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>

#include "edlab/closed_sets.hpp"
#include "edlab/distance.hpp"
#include "edlab/errors.hpp"
#include "edlab/graph.hpp"

namespace edlab {

VertexSet build_isometric_cycle_set(int k) {
  if (k < 2 || k > 20) throw InvalidParameter("isometric cycle needs 2 <= k <= 20");
  const std::uint32_t full = (1u << k) - 1u;
  std::vector<std::uint32_t> ring;
  ring.reserve(2 * k);
  for (int j = 0; j <= k; ++j) ring.push_back((1u << j) - 1u);
  for (int j = 1; j <= k - 1; ++j) ring.push_back(full ^ ring[j]);
  // ring[i] and ring[j] must be at cycle distance min(|i-j|, 2k-|i-j|) in Q_k.
  const int len = 2 * k;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      int along = j - i;
      if (len - along < along) along = len - along;
      if (std::popcount(ring[i] ^ ring[j]) != along)
        throw InternalError("isometric cycle self-check failed");
    }
  }
  VertexSet out(1 << k);
  for (auto wv : ring) out.insert(static_cast<int>(wv));
  if (out.count() != len) throw InternalError("isometric cycle has repeated vertices");
  return out;
}

VertexSet build_doubling_set(const VertexSet& s, int n, int x) {
  if (n < 1 || n > 13 || x < 0 || x >= n || x < n / 2)
    throw InvalidParameter("doubling needs floor(n/2) <= x < n <= 13");
  if (s.universe() != (1 << x)) throw InvalidParameter("set universe does not match Q_x");
  {
    Graph qx = make_hypercube(x);
    DistanceMatrix d = all_pairs_distances(qx);
    if (!is_closed(d, s)) throw InvalidParameter("set is not closed in Q_x");
  }
  const std::uint64_t high = ((std::uint64_t{1} << (n - x)) - 1) << x;
  VertexSet out(1 << n);
  for (int w = s.next(0); w >= 0; w = s.next(w + 1)) {
    out.insert(w);
    out.insert(static_cast<int>(static_cast<std::uint64_t>(w) | high));
  }
  if (out.count() != 2 * s.count()) throw InternalError("doubling images overlap");
  return out;
}

namespace {

void add_u_range(VertexSet& set, int n, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) set.insert(cf::u(n, i));
}

void add_legs(VertexSet& set, int n, bool vs, bool ws) {
  const int m = cf::leg_len(n);
  for (int j = 1; j <= m; ++j) {
    if (vs) set.insert(cf::v(n, j));
    if (ws) set.insert(cf::w(n, j));
  }
}

}  // namespace

std::vector<CfCertificate> build_cf_certificates(int n, Variant variant) {
  const bool odd = (n % 2) != 0;
  if (variant == Variant::path) {
    if (n < 10) throw UnsupportedInput("path certificates need n >= 10");
  } else {
    if (n < 5) throw UnsupportedInput("distance certificates need n >= 5");
  }
  const int total = n + 2 * cf::leg_len(n);
  std::vector<CfCertificate> out;
  auto fresh = [&](const char* name) -> VertexSet& {
    out.push_back({name, VertexSet(total)});
    return out.back().set;
  };

  if (variant == Variant::path) {
    const int split = odd ? (n + 3) / 2 : n / 2 + 1;
    VertexSet& a = fresh("A");
    add_legs(a, n, true, true);
    add_u_range(a, n, 1, split);
    VertexSet& b = fresh("B");
    add_legs(b, n, true, true);
    add_u_range(b, n, odd ? split : split + 1, n);
    b.insert(cf::u(n, 1));
    b.insert(cf::u(n, 2));
  } else if (!odd) {
    VertexSet& a = fresh("A");
    add_legs(a, n, true, false);
    add_u_range(a, n, 1, n / 2 + 1);
    VertexSet& b = fresh("B");
    add_legs(b, n, false, true);
    add_u_range(b, n, n / 2 + 2, n);
    b.insert(cf::u(n, 1));
    b.insert(cf::u(n, 2));
  } else {
    VertexSet& a = fresh("A");
    add_legs(a, n, true, false);
    add_u_range(a, n, 1, n / 2 + 1);
    VertexSet& b = fresh("B");
    add_legs(b, n, false, true);
    add_u_range(b, n, (n + 5) / 2, n);
    b.insert(cf::u(n, 1));
    b.insert(cf::u(n, 2));
    VertexSet& c = fresh("C");
    add_legs(c, n, true, false);
    add_u_range(c, n, 1, (n + 3) / 2);
  }

  VertexSet cover(total);
  for (const auto& cert : out) cover |= cert.set;
  if (cover.count() != total) throw InternalError("certificates do not cover CF_n");
  return out;
}

}  // namespace edlab
