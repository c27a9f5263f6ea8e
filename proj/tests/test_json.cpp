#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "edlab/bipanpositionable.hpp"
#include "edlab/claims.hpp"
#include "edlab/game.hpp"
#include "edlab/graph.hpp"
#include "edlab/json_io.hpp"

using namespace edlab;
using nlohmann::ordered_json;

TEST_CASE("variant names round trip") {
  CHECK(variant_name(Variant::distance) == std::string("distance"));
  CHECK(variant_name(Variant::path) == std::string("path"));
  CHECK(parse_variant("distance") == Variant::distance);
  CHECK(parse_variant("path") == Variant::path);
  CHECK_THROWS_AS(parse_variant("both"), InvalidParameter);
  CHECK_THROWS_AS(parse_variant(""), InvalidParameter);
}

TEST_CASE("search outcome schema") {
  SearchOutcome s;
  s.optimum = 4;
  s.witness = VertexSet::of(6, {0, 1, 3, 4});
  s.nodes_explored = 42;
  ordered_json j = to_json(s);
  CHECK(j["optimum"] == 4);
  CHECK(j["witness"] == ordered_json::array({0, 1, 3, 4}));
  CHECK(j["anchor"].is_null());
  CHECK(j["status"] == "optimal");
  CHECK(j["nodes"] == 42);

  s.anchor = 3;
  s.status = SearchOutcome::Status::budget_exceeded;
  j = to_json(s);
  CHECK(j["anchor"] == 3);
  CHECK(j["status"] == "budget-exceeded");
}

TEST_CASE("solve result schema") {
  SolveResult r = solve_game(make_cycle(6), Variant::distance, 0);
  ordered_json j = to_json(r);
  CHECK(j["value"] == 4);
  CHECK(j["bounds"] == ordered_json::array({4, 4}));
  CHECK(j["variant"] == "distance");
  CHECK(j["start"] == 0);
  CHECK(j["status"] == "exact");
  CHECK(j["states"].get<std::uint64_t>() == r.states_expanded);
  CHECK(j["trace"].is_null());  // no trace requested

  SolveOptions so;
  so.want_trace = true;
  r = solve_game(make_cycle(6), Variant::distance, 0, so);
  j = to_json(r);
  REQUIRE(j["trace"].is_array());
  CHECK(j["trace"].size() == r.trace.size());
  CHECK(j["trace"][0].size() == 2);
  CHECK(j["trace"][0][0] == r.trace[0].call);
  CHECK(j["trace"][0][1] == r.trace[0].response);

  // budget runs keep the bounds but null the value
  so.want_trace = false;
  so.state_budget = 10;
  r = solve_game(make_cuttlefish(8), Variant::distance, 0, so);
  REQUIRE(r.status == SolveResult::Status::budget_exceeded);
  j = to_json(r);
  CHECK(j["value"].is_null());
  CHECK(j["status"] == "budget-exceeded");
  CHECK(j["bounds"].is_array());
}

TEST_CASE("bipan report schema") {
  BipanReport r = check_bipanpositionable(make_hypercube(3));
  ordered_json j = to_json(r);
  CHECK(j["verdict"] == "yes");
  CHECK(j["counterexample"].is_null());
  CHECK(j["triples"].get<int>() == r.triples_checked);
  CHECK(j["nodes"].get<long long>() == r.nodes_explored);

  r = check_bipanpositionable(make_cycle(6));
  j = to_json(r);
  CHECK(j["verdict"] == "no");
  REQUIRE(j["counterexample"].is_object());
  CHECK(j["counterexample"]["x"] == 0);
  CHECK(j["counterexample"]["y"] == 1);
  CHECK(j["counterexample"]["k"] == 3);
}

TEST_CASE("claim report serialization") {
  Report rep;
  Claim a;
  a.id = "alpha/1";
  a.statement = "first";
  a.expected = "4";
  a.computed = "4";
  a.status = Claim::Status::pass;
  a.seconds = 0.25;
  Claim b;
  b.id = "beta/2";
  b.statement = "second, with \"quotes\" and, commas";
  b.expected = "x, y";
  b.computed = "\"z\"";
  b.status = Claim::Status::fail;
  Claim c;
  c.id = "gamma/3";
  c.status = Claim::Status::skipped_budget;
  rep.claims = {a, b, c};

  CHECK(rep.failures() == 1);
  CHECK(rep.skips() == 1);
  CHECK(!rep.all_passed());

  ordered_json j = rep.to_json();
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["id"] == "alpha/1");
  CHECK(j[0]["statement"] == "first");
  CHECK(j[0]["expected"] == "4");
  CHECK(j[0]["computed"] == "4");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["seconds"].get<double>() == doctest::Approx(0.25));
  CHECK(j[1]["status"] == "fail");
  CHECK(j[2]["status"] == "skipped-budget");

  std::string csv = rep.to_csv();
  auto first_line = csv.substr(0, csv.find('\n'));
  CHECK(first_line == "id,expected,computed,status,seconds");
  // embedded quotes double, fields with commas get quoted
  CHECK(csv.find("\"x, y\"") != std::string::npos);
  CHECK(csv.find("\"\"\"z\"\"\"") != std::string::npos);
  CHECK(csv.find("alpha/1,4,4,pass,0.250") != std::string::npos);
}

TEST_CASE("status names") {
  CHECK(claim_status_name(Claim::Status::pass) == std::string("pass"));
  CHECK(claim_status_name(Claim::Status::fail) == std::string("fail"));
  CHECK(claim_status_name(Claim::Status::skipped_budget) == std::string("skipped-budget"));
  CHECK(verdict_name(BipanVerdict::yes) == std::string("yes"));
  CHECK(verdict_name(BipanVerdict::no) == std::string("no"));
  CHECK(verdict_name(BipanVerdict::budget_exceeded) == std::string("budget-exceeded"));
}
