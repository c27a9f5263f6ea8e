#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edlab/distance.hpp"
#include "edlab/graph.hpp"

using namespace edlab;

TEST_CASE("cycle distances") {
  DistanceMatrix d = all_pairs_distances(make_cycle(7));
  CHECK(d.n() == 7);
  CHECK(d.dist(0, 0) == 0);
  CHECK(d.dist(0, 3) == 3);
  CHECK(d.dist(0, 4) == 3);  // wraps the short way
  CHECK(d.dist(2, 6) == 3);
  CHECK(d.diameter() == 3);
  CHECK(d.min_ecc() == 3);
  for (int v = 0; v < 7; ++v) CHECK(d.ecc(v) == 3);
}

TEST_CASE("hypercube distance is hamming distance") {
  DistanceMatrix d = all_pairs_distances(make_hypercube(4));
  for (int u = 0; u < 16; ++u)
    for (int v = 0; v < 16; ++v) CHECK(d.dist(u, v) == __builtin_popcount(u ^ v));
  CHECK(d.diameter() == 4);
}

TEST_CASE("path eccentricities") {
  DistanceMatrix d = all_pairs_distances(make_path(5));
  CHECK(d.ecc(0) == 4);
  CHECK(d.ecc(2) == 2);
  CHECK(d.diameter() == 4);
  CHECK(d.min_ecc() == 2);
  CHECK(eccentricity(d, 4) == 4);
  CHECK_THROWS_AS(eccentricity(d, 5), InvalidParameter);
  CHECK_THROWS_AS(eccentricity(d, -1), InvalidParameter);
}

TEST_CASE("valid distances form the full range") {
  // connected graphs realize every distance 1..ecc(u) from each u
  for (const char* spec : {"cycle:9", "path:6", "hypercube:3", "cuttlefish:8"}) {
    DistanceMatrix d = all_pairs_distances(graph_from_spec(spec));
    for (int u = 0; u < d.n(); ++u) {
      const auto& vd = d.valid_distances(u);
      REQUIRE((int)vd.size() == d.ecc(u));
      for (int i = 0; i < (int)vd.size(); ++i) CHECK(vd[i] == i + 1);
    }
  }
}

TEST_CASE("symmetry and triangle inequality") {
  DistanceMatrix d = all_pairs_distances(make_cuttlefish(9));
  for (int u = 0; u < d.n(); ++u)
    for (int v = 0; v < d.n(); ++v) {
      CHECK(d.dist(u, v) == d.dist(v, u));
      for (int w = 0; w < d.n(); ++w)
        CHECK(d.dist(u, v) <= d.dist(u, w) + d.dist(w, v));
    }
}

TEST_CASE("single vertex") {
  DistanceMatrix d = all_pairs_distances(make_path(1));
  CHECK(d.ecc(0) == 0);
  CHECK(d.valid_distances(0).empty());
  CHECK(d.diameter() == 0);
}
