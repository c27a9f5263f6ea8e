#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edlab/closed_sets.hpp"
#include "edlab/distance.hpp"
#include "edlab/graph.hpp"
#include "edlab/oracle.hpp"
#include "edlab/path_table.hpp"

using namespace edlab;

TEST_CASE("closedness on small cycles") {
  DistanceMatrix d = all_pairs_distances(make_cycle(6));
  CHECK(is_closed(d, VertexSet::full(6)));
  CHECK(is_closed(d, VertexSet::of(6, {0, 1, 3, 4})));
  CHECK(!is_closed(d, VertexSet::of(6, {0, 2, 4})));  // no distance-1 witness
  CHECK(!is_closed(d, VertexSet::of(6, {0})));
  CHECK(!is_closed(d, VertexSet::of(6, {0, 1})));  // distance 3 unanswered
  CHECK_THROWS_AS(is_closed(d, VertexSet(6)), InvalidParameter);
}

TEST_CASE("full set of a connected graph is closed") {
  for (const char* spec : {"cycle:9", "path:7", "hypercube:3", "cuttlefish:9"}) {
    Graph g = graph_from_spec(spec);
    DistanceMatrix d = all_pairs_distances(g);
    CHECK(is_closed(d, VertexSet::full(g.n())));
  }
}

TEST_CASE("core is a closed subset and idempotent") {
  Graph g = make_cycle(9);
  DistanceMatrix d = all_pairs_distances(g);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet s(9);
    for (int v = 0; v < 9; ++v)
      if (rng() & 1) s.insert(v);
    VertexSet c = closed_core(d, s);
    for (int v : c.to_vector()) CHECK(s.test(v));
    if (!c.empty()) CHECK(is_closed(d, c));
    VertexSet cc = closed_core(d, c);
    CHECK(cc.to_vector() == c.to_vector());
    // core of a closed set is the set itself
    if (!c.empty()) CHECK(closed_core(d, c).count() == c.count());
  }
  CHECK(closed_core(d, VertexSet(9)).empty());
}

TEST_CASE("union of closed sets is closed") {
  Graph g = make_hypercube(3);
  DistanceMatrix d = all_pairs_distances(g);
  std::mt19937 rng(11);
  int checked = 0;
  // nonempty cores are rare for sparse random subsets, so run plenty of trials
  for (int trial = 0; trial < 1500; ++trial) {
    VertexSet a(8), b(8);
    for (int v = 0; v < 8; ++v) {
      if (rng() & 1) a.insert(v);
      if (rng() & 1) b.insert(v);
    }
    VertexSet ca = closed_core(d, a);
    VertexSet cb = closed_core(d, b);
    if (ca.empty() || cb.empty()) continue;
    VertexSet u = ca;
    u |= cb;
    CHECK(is_closed(d, u));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("path closed core") {
  Graph g = make_hypercube(3);
  PathLengthTable t = build_path_length_table(g);
  VertexSet face = VertexSet::of(8, {0, 1, 3, 2});
  CHECK(is_path_closed(t, face));
  CHECK(path_closed_core(t, face).count() == 4);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    VertexSet s(8);
    for (int v = 0; v < 8; ++v)
      if (rng() & 1) s.insert(v);
    VertexSet c = path_closed_core(t, s);
    for (int v : c.to_vector()) CHECK(s.test(v));
    if (!c.empty()) {
      CHECK(is_path_closed(t, c));
      CHECK(oracle_is_path_closed(g, c));
    }
    CHECK(path_closed_core(t, c).to_vector() == c.to_vector());
  }
}

TEST_CASE("eccentricity floor") {
  CHECK(ecc_lower_bound(all_pairs_distances(make_cycle(6))) == 4);
  CHECK(ecc_lower_bound(all_pairs_distances(make_path(5))) == 5);
  // floor never exceeds the brute optimum
  for (const char* spec : {"cycle:7", "cycle:8", "path:6", "cuttlefish:7", "hypercube:3"}) {
    Graph g = graph_from_spec(spec);
    CHECK(ecc_lower_bound(all_pairs_distances(g)) <= brute_min_closed(g).optimum);
  }
}

TEST_CASE("move tables agree with the direct predicates") {
  Graph g = make_cuttlefish(7);
  DistanceMatrix d = all_pairs_distances(g);
  PathLengthTable t = build_path_length_table(g);
  MoveTable dm = distance_moves(d);
  MoveTable pm = path_moves(t);
  CHECK(dm.exclusive_calls);
  CHECK(!pm.exclusive_calls);
  CHECK(dm.n == g.n());
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (rng() & 1) s.insert(v);
    if (s.empty()) continue;
    CHECK(is_closed(dm, s) == is_closed(d, s));
    CHECK(is_closed(pm, s) == is_path_closed(t, s));
    CHECK(closed_core_in(dm, s).to_vector() == closed_core(d, s).to_vector());
    CHECK(closed_core_in(pm, s).to_vector() == path_closed_core(t, s).to_vector());
  }
  // calls are the valid magnitudes, sorted, with matching target sets
  for (int u = 0; u < g.n(); ++u) {
    REQUIRE(dm.calls[u] == d.valid_distances(u));
    for (int i = 0; i < (int)dm.calls[u].size(); ++i)
      for (int v : dm.targets[u][i].to_vector()) CHECK(d.dist(u, v) == dm.calls[u][i]);
  }
}
