#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edlab/graph.hpp"
#include "edlab/vertex_set.hpp"

namespace edlab {

struct PathTableOptions {
  // Total DFS node budget for the whole table; it is split evenly across
  // source vertices (floor(budget/n) each) so truncation does not depend on
  // worker scheduling.
  std::uint64_t node_budget = 100'000'000;
  int workers = 1;
};

// For every ordered pair (u,v), the set of lengths l such that some simple
// path of exactly l edges joins u and v. Lengths are stored as a 64-bit mask
// with bit l-1 representing length l, which caps supported graphs at 64
// vertices (simple paths have at most n-1 edges). Tables built within budget
// are complete and symmetric; truncated tables refuse exact queries.
class PathLengthTable {
 public:
  enum class Status { complete, truncated };

  int n() const { return n_; }
  Status status() const { return status_; }
  bool complete() const { return status_ == Status::complete; }

  std::uint64_t length_mask(int u, int v) const;
  std::vector<int> lengths(int u, int v) const;
  std::uint64_t valid_length_mask(int u) const;

  std::uint64_t nodes_visited() const { return nodes_total_; }
  std::uint64_t nodes_from(int source) const;

 private:
  friend PathLengthTable build_path_length_table(const Graph&, const PathTableOptions&);
  void require_complete() const {
    if (!complete()) throw UnusableTable("path table truncated by budget");
  }
  int n_ = 0;
  Status status_ = Status::complete;
  std::vector<std::uint64_t> masks_;       // n*n
  std::vector<std::uint64_t> valid_;       // per source, union of row masks
  std::vector<std::uint64_t> src_nodes_;   // DFS nodes per source
  std::uint64_t nodes_total_ = 0;
};

PathLengthTable build_path_length_table(const Graph& g, const PathTableOptions& opts = {});

// Sorted list of path lengths realizable from u to anywhere.
std::vector<int> valid_lengths(const PathLengthTable& t, int u);

// Vertices reachable from u by a simple path of exactly l edges; 1 <= l < n.
VertexSet reachable_at_length(const PathLengthTable& t, int u, int l);

// One line per ordered pair: "u v: l1,l2,..." (pairs with no path of any
// length, i.e. u==v, are omitted). Used for golden-file comparisons.
std::string dump_path_table(const PathLengthTable& t);

}  // namespace edlab
