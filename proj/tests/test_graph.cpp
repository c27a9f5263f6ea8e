#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "edlab/graph.hpp"

using namespace edlab;

TEST_CASE("cycle generator") {
  Graph g = make_cycle(6);
  CHECK(g.n() == 6);
  CHECK(g.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(g.neighbors(v).size() == 2);
  CHECK(g.has_edge(0, 5));
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(0, 3));
  CHECK(g.family() == Family::cycle);
  CHECK(g.vertex_transitive_hint());
  CHECK_THROWS_AS(make_cycle(2), UnsupportedInput);
}

TEST_CASE("path generator") {
  Graph g = make_path(4);
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.neighbors(0).size() == 1);
  CHECK(g.neighbors(1).size() == 2);
  CHECK(!g.vertex_transitive_hint());
  CHECK(make_path(1).n() == 1);
  CHECK_THROWS_AS(make_path(0), UnsupportedInput);
}

TEST_CASE("hypercube generator") {
  Graph q3 = make_hypercube(3);
  CHECK(q3.n() == 8);
  CHECK(q3.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(q3.neighbors(v).size() == 3);
  // edges join ids at hamming distance 1
  for (auto [u, v] : q3.edges()) CHECK(__builtin_popcount(u ^ v) == 1);
  CHECK(make_hypercube(0).n() == 1);
  CHECK(q3.vertex_transitive_hint());
  CHECK_THROWS_AS(make_hypercube(-1), UnsupportedInput);
  CHECK_THROWS_AS(make_hypercube(21), ResourceLimit);
}

TEST_CASE("cuttlefish layout") {
  Graph g = make_cuttlefish(10);
  // 10-cycle plus two legs of length 4
  CHECK(cf::leg_len(10) == 4);
  CHECK(g.n() == 18);
  CHECK(g.edge_count() == 18);
  CHECK(cf::u(10, 1) == 0);
  CHECK(cf::u(10, 10) == 9);
  CHECK(cf::v(10, 1) == 10);
  CHECK(cf::v(10, 4) == 13);
  CHECK(cf::w(10, 1) == 14);
  CHECK(cf::w(10, 4) == 17);
  // legs hang off u_1 and u_2
  CHECK(g.has_edge(cf::u(10, 1), cf::v(10, 1)));
  CHECK(g.has_edge(cf::u(10, 2), cf::w(10, 1)));
  CHECK(g.has_edge(cf::v(10, 3), cf::v(10, 4)));
  // leg tips have degree 1
  CHECK(g.neighbors(cf::v(10, 4)).size() == 1);
  CHECK(g.neighbors(cf::w(10, 4)).size() == 1);
  CHECK(!g.vertex_transitive_hint());
  CHECK_THROWS_AS(make_cuttlefish(4), UnsupportedInput);
  // CF_5 legs have length 1
  CHECK(make_cuttlefish(5).n() == 7);
}

TEST_CASE("spec parsing") {
  CHECK(graph_from_spec("cycle:9").n() == 9);
  CHECK(graph_from_spec("hypercube:4").n() == 16);
  CHECK(graph_from_spec("cuttlefish:11").n() == 19);
  CHECK(graph_from_spec("path:1").n() == 1);
  CHECK_THROWS_AS(graph_from_spec("cycle"), InvalidParameter);
  CHECK_THROWS_AS(graph_from_spec("cycle:"), InvalidParameter);
  CHECK_THROWS_AS(graph_from_spec("cycle:abc"), InvalidParameter);
  CHECK_THROWS_AS(graph_from_spec("grid:3"), InvalidParameter);
  CHECK_THROWS_AS(graph_from_spec(":5"), InvalidParameter);
}

TEST_CASE("edge list round trip") {
  for (const char* spec : {"cycle:7", "hypercube:3", "cuttlefish:9", "path:5"}) {
    Graph g = graph_from_spec(spec);
    Graph h = parse_edge_list(serialize_edge_list(g));
    REQUIRE(h.n() == g.n());
    REQUIRE(h.edge_count() == g.edge_count());
    CHECK(h.edges() == g.edges());
    // parsed graphs carry no family shortcut
    CHECK(h.family() == Family::custom);
    CHECK(!h.vertex_transitive_hint());
  }
}

TEST_CASE("edge list rejects bad input") {
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 1\n"), InvalidGraph);   // self loop
  CHECK_THROWS_AS(parse_edge_list("3 3\n0 1\n1 2\n0 1\n"), InvalidGraph);  // duplicate
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);  // min endpoint first
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\nbanana\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 5\n"), InvalidGraph);  // vertex out of range
  CHECK_THROWS_AS(parse_edge_list("4 2\n0 1\n2 3\n"), UnsupportedInput);  // disconnected
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  // reversed duplicates surface once the adjacency is assembled
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}}), InvalidGraph);
  // line order is free, leading/trailing blanks and CR are tolerated
  Graph g = parse_edge_list("\n3 3\n1 2\r\n0 2\n0 1\n\n");
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("neighbor masks under 64 vertices") {
  Graph g = make_cycle(5);
  CHECK(g.neighbor_mask(0) == ((1ULL << 1) | (1ULL << 4)));
  Graph big = make_hypercube(7);  // 128 vertices, no masks
  CHECK_THROWS_AS(big.neighbor_mask(0), ResourceLimit);
}
