#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "edlab/distance.hpp"
#include "edlab/game.hpp"
#include "edlab/graph.hpp"
#include "edlab/path_table.hpp"
#include "edlab/predict.hpp"

using namespace edlab;

TEST_CASE("cycle games match the formula") {
  for (int n = 3; n <= 10; ++n) {
    Graph g = make_cycle(n);
    for (int start : {0, n / 2}) {
      SolveResult r = solve_game(g, Variant::distance, start);
      REQUIRE(r.status == SolveResult::Status::exact);
      CHECK(r.value == predict_cycle_fd(n));
    }
  }
}

TEST_CASE("start vertex does not matter on vertex-transitive graphs") {
  Graph g = make_hypercube(3);
  for (int start = 0; start < 8; ++start) {
    SolveResult r = solve_game(g, Variant::distance, start);
    CHECK(r.value == 4);
  }
}

TEST_CASE("cuttlefish distance games") {
  for (int n : {5, 6, 7}) {
    Graph g = make_cuttlefish(n);
    for (int start = 0; start < g.n(); ++start) {
      SolveResult r = solve_game(g, Variant::distance, start);
      REQUIRE(r.status == SolveResult::Status::exact);
      CHECK(r.value == predict_cf(n, start, Variant::distance));
    }
  }
}

TEST_CASE("path variant is 4 on the small bipanpositionable graphs") {
  CHECK(solve_game(make_cycle(4), Variant::path, 0).value == 4);
  for (int start = 0; start < 8; ++start)
    CHECK(solve_game(make_hypercube(3), Variant::path, start).value == 4);
  CHECK(solve_game(make_hypercube(2), Variant::path, 1).value == 4);
}

TEST_CASE("bounds sandwich the value") {
  for (const char* spec : {"cycle:7", "path:5", "cuttlefish:6", "hypercube:3"}) {
    Graph g = graph_from_spec(spec);
    for (int start = 0; start < g.n(); ++start) {
      SolveResult r = solve_game(g, Variant::distance, start);
      REQUIRE(r.status == SolveResult::Status::exact);
      CHECK(r.bounds.lower <= r.value);
      CHECK(r.value <= r.bounds.upper);
      CHECK(!r.bounds.lower_is_heuristic);
      // the upper witness is a closed set containing the start
      REQUIRE(!r.bounds.upper_witness.empty());
      CHECK(r.bounds.upper_witness.test(start));
      CHECK(is_closed(all_pairs_distances(g), r.bounds.upper_witness));
      CHECK(r.bounds.upper_witness.count() == r.bounds.upper);
    }
  }
}

TEST_CASE("trace replays as a legal optimal line") {
  for (const char* spec : {"cycle:6", "cycle:9", "cuttlefish:5", "hypercube:3"}) {
    Graph g = graph_from_spec(spec);
    DistanceMatrix d = all_pairs_distances(g);
    SolveOptions so;
    so.want_trace = true;
    SolveResult r = solve_game(g, Variant::distance, 2, so);
    REQUIRE(r.status == SolveResult::Status::exact);
    REQUIRE(!r.trace.empty());
    std::set<int> visited = {2};
    int cur = 2;
    for (const TraceStep& t : r.trace) {
      CHECK(d.dist(cur, t.response) == t.call);
      CHECK(t.call >= 1);
      CHECK(t.call <= d.ecc(cur));
      CHECK(t.extends == !visited.count(t.response));
      visited.insert(t.response);
      cur = t.response;
    }
    CHECK((int)visited.size() == r.value);
  }
}

TEST_CASE("path variant trace uses path lengths") {
  Graph g = make_hypercube(3);
  PathLengthTable t = build_path_length_table(g);
  SolveOptions so;
  so.want_trace = true;
  SolveResult r = solve_game(g, Variant::path, 0, so);
  REQUIRE(r.status == SolveResult::Status::exact);
  std::set<int> visited = {0};
  int cur = 0;
  for (const TraceStep& ts : r.trace) {
    CHECK((t.length_mask(cur, ts.response) >> (ts.call - 1) & 1) == 1);
    CHECK(ts.extends == !visited.count(ts.response));
    visited.insert(ts.response);
    cur = ts.response;
  }
  CHECK((int)visited.size() == 4);
}

TEST_CASE("state budget trips with bounds intact") {
  Graph g = make_cuttlefish(9);
  SolveOptions so;
  so.state_budget = 50;
  SolveResult r = solve_game(g, Variant::distance, 0, so);
  CHECK(r.status == SolveResult::Status::budget_exceeded);
  CHECK(r.bounds.lower >= 1);
  CHECK(r.bounds.lower <= r.bounds.upper);
  // true value 8 sits inside the reported window
  CHECK(r.bounds.lower <= 8);
  CHECK(8 <= r.bounds.upper);
}

TEST_CASE("solve is deterministic") {
  Graph g = make_cuttlefish(6);
  SolveOptions so;
  so.want_trace = true;
  SolveResult a = solve_game(g, Variant::distance, 3, so);
  SolveResult b = solve_game(g, Variant::distance, 3, so);
  CHECK(a.value == b.value);
  CHECK(a.states_expanded == b.states_expanded);
  REQUIRE(a.trace.size() == b.trace.size());
  for (size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].call == b.trace[i].call);
    CHECK(a.trace[i].response == b.trace[i].response);
  }
}

TEST_CASE("bad start vertex") {
  CHECK_THROWS_AS(solve_game(make_cycle(5), Variant::distance, 5, {}), InvalidParameter);
  CHECK_THROWS_AS(solve_game(make_cycle(5), Variant::distance, -1, {}), InvalidParameter);
}

TEST_CASE("one vertex game") {
  SolveResult r = solve_game(make_path(1), Variant::distance, 0);
  CHECK(r.value == 1);
  CHECK(r.trace.empty());
}
