#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edlab/bipanpositionable.hpp"
#include "edlab/distance.hpp"
#include "edlab/graph.hpp"

using namespace edlab;

TEST_CASE("positive instances") {
  CHECK(is_bipanpositionable(make_cycle(4)) == BipanVerdict::yes);
  CHECK(is_bipanpositionable(make_hypercube(2)) == BipanVerdict::yes);
  CHECK(is_bipanpositionable(make_hypercube(3)) == BipanVerdict::yes);
  CHECK(is_bipanpositionable(make_hypercube(4)) == BipanVerdict::yes);
}

TEST_CASE("structural rejections") {
  // too small, odd order, or not hamiltonian-bipartite material
  CHECK(is_bipanpositionable(make_cycle(3)) == BipanVerdict::no);
  CHECK(is_bipanpositionable(make_cycle(5)) == BipanVerdict::no);
  CHECK(is_bipanpositionable(make_path(4)) == BipanVerdict::no);
  CHECK(is_bipanpositionable(make_path(2)) == BipanVerdict::no);
  CHECK(is_bipanpositionable(make_cuttlefish(8)) == BipanVerdict::no);
}

TEST_CASE("long even cycles fail with a counterexample") {
  for (int n : {6, 8, 10}) {
    BipanReport r = check_bipanpositionable(make_cycle(n));
    REQUIRE(r.verdict == BipanVerdict::no);
    REQUIRE(r.counterexample.has_value());
    // the unique hamiltonian cycle realizes only the hop distance
    DistanceMatrix d = all_pairs_distances(make_cycle(n));
    const BipanTriple& t = *r.counterexample;
    CHECK(t.k > d.dist(t.x, t.y));
    CHECK(2 * t.k <= n);
    CHECK((t.k - d.dist(t.x, t.y)) % 2 == 0);
  }
}

TEST_CASE("counterexample triple is refutable by hand on C_6") {
  BipanReport r = check_bipanpositionable(make_cycle(6));
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->x == 0);
  CHECK(r.counterexample->y == 1);
  CHECK(r.counterexample->k == 3);
  CHECK(r.triples_checked >= 1);
}

TEST_CASE("report counts are deterministic across workers") {
  BipanOptions one;
  one.workers = 1;
  BipanOptions four;
  four.workers = 4;
  BipanReport a = check_bipanpositionable(make_hypercube(3), one);
  BipanReport b = check_bipanpositionable(make_hypercube(3), four);
  CHECK(a.verdict == b.verdict);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.triples_checked == b.triples_checked);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  BipanOptions tight;
  tight.node_budget = 5;
  BipanReport r = check_bipanpositionable(make_hypercube(4), tight);
  CHECK(r.verdict == BipanVerdict::budget_exceeded);
  CHECK(!r.counterexample.has_value());
}

TEST_CASE("oversized graphs are refused") {
  CHECK_THROWS_AS(check_bipanpositionable(make_hypercube(7)), UnsupportedInput);
}
