#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edlab/errors.hpp"

namespace edlab {

enum class Family { custom, cycle, path, hypercube, cuttlefish };

// Finite simple connected undirected graph. Vertices are 0..n-1, adjacency
// lists are kept sorted. Generators tag the family so downstream code can
// apply family-specific shortcuts (symmetry, closed-form seeds); parsed
// graphs are always Family::custom with no transitivity hint.
class Graph {
 public:
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                          Family family = Family::custom, int family_param = 0,
                          bool vertex_transitive = false);

  int n() const { return (int)adj_.size(); }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;

  // Edges in canonical order: (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  // Neighborhood as a bitmask; only available when n <= 64.
  std::uint64_t neighbor_mask(int v) const;

  Family family() const { return family_; }
  int family_param() const { return family_param_; }
  bool vertex_transitive_hint() const { return vertex_transitive_; }

 private:
  Graph() = default;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> masks_;  // empty when n > 64
  int m_ = 0;
  Family family_ = Family::custom;
  int family_param_ = 0;
  bool vertex_transitive_ = false;
};

// Cycle u_0 - u_1 - ... - u_{n-1} - u_0; n >= 3.
Graph make_cycle(int n);

// Path u_0 - u_1 - ... - u_{n-1}; n >= 1.
Graph make_path(int n);

// k-dimensional hypercube on 2^k vertices; vertex ids are coordinate
// bitmasks, edges join ids at Hamming distance 1. k in [0, 20].
Graph make_hypercube(int k);

// Cuttlefish: an n-cycle (vertices 0..n-1) with two pendant paths of
// floor(n/2)-1 vertices, one attached at cycle vertex 0 and one at cycle
// vertex 1. n >= 5. Vertex layout: cycle vertex u_i (1-based) -> i-1, first
// leg v_j -> n-1+j, second leg w_j -> n-1+(floor(n/2)-1)+j.
Graph make_cuttlefish(int n);

// 1-based named vertices of make_cuttlefish(n), matching the layout above.
namespace cf {
int u(int n, int i);
int v(int n, int j);
int w(int n, int j);
int leg_len(int n);  // floor(n/2)-1
}  // namespace cf

// Edge-list text format: "<n> <m>\n" then m lines "<u> <v>" with
// 0 <= u < v < n, in canonical order when written by serialize_edge_list.
// parse accepts any edge order and extra blanks/carriage returns, and
// rejects malformed lines (ParseError with line number), self-loops,
// duplicates and reversed pairs (InvalidGraph), and disconnected graphs
// (UnsupportedInput).
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// "cycle:9", "path:4", "hypercube:3", "cuttlefish:11".
Graph graph_from_spec(const std::string& spec);
std::string family_name(Family f);

}  // namespace edlab
