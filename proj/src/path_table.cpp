#include "edlab/path_table.hpp"

#include <algorithm>
#include <bit>

#include "edlab/parallel.hpp"

namespace edlab {

namespace {

// Depth-first enumeration of every simple path out of src, recording the
// length set per endpoint. Returns false when the per-source node cap was
// hit (enumeration incomplete). Nodes are counted per path extension, so the
// final count equals the number of nonempty simple paths starting at src.
struct SourceDfs {
  const std::vector<std::uint64_t>& adj;
  std::uint64_t* row;           // length masks for this source
  std::uint64_t cap;
  std::uint64_t nodes = 0;
  bool complete = true;

  void run(int src) { walk(src, 1ULL << src, 0); }

  void walk(int u, std::uint64_t visited, int depth) {
    if (!complete) return;
    std::uint64_t frontier = adj[u] & ~visited;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (++nodes > cap) {
        complete = false;
        return;
      }
      row[v] |= 1ULL << depth;  // bit l-1 for length l = depth+1
      walk(v, visited | (1ULL << v), depth + 1);
      if (!complete) return;
    }
  }
};

}  // namespace

PathLengthTable build_path_length_table(const Graph& g, const PathTableOptions& opts) {
  int n = g.n();
  if (n > 64) throw ResourceLimit("path tables capped at 64 vertices");
  if (opts.node_budget == 0) throw InvalidParameter("node budget must be positive");

  PathLengthTable t;
  t.n_ = n;
  t.masks_.assign((size_t)n * n, 0);
  t.valid_.assign(n, 0);
  t.src_nodes_.assign(n, 0);

  std::vector<std::uint64_t> adj(n);
  for (int u = 0; u < n; ++u) adj[u] = g.neighbor_mask(u);
  std::uint64_t per_source = std::max<std::uint64_t>(1, opts.node_budget / n);

  std::vector<char> complete(n, 1);
  parallel_for(n, opts.workers, [&](int s) {
    SourceDfs dfs{adj, &t.masks_[(size_t)s * n], per_source};
    dfs.run(s);
    t.src_nodes_[s] = dfs.nodes;
    complete[s] = dfs.complete ? 1 : 0;
  });

  for (int s = 0; s < n; ++s) {
    t.nodes_total_ += t.src_nodes_[s];
    if (!complete[s]) t.status_ = PathLengthTable::Status::truncated;
    for (int v = 0; v < n; ++v) t.valid_[s] |= t.masks_[(size_t)s * n + v];
  }
  return t;
}

std::uint64_t PathLengthTable::length_mask(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidParameter("vertex index out of range");
  require_complete();
  return masks_[(size_t)u * n_ + v];
}

std::vector<int> PathLengthTable::lengths(int u, int v) const {
  std::uint64_t m = length_mask(u, v);
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

std::uint64_t PathLengthTable::valid_length_mask(int u) const {
  if (u < 0 || u >= n_) throw InvalidParameter("vertex index out of range");
  require_complete();
  return valid_[u];
}

std::uint64_t PathLengthTable::nodes_from(int source) const {
  if (source < 0 || source >= n_) throw InvalidParameter("vertex index out of range");
  return src_nodes_[source];
}

std::vector<int> valid_lengths(const PathLengthTable& t, int u) {
  std::uint64_t m = t.valid_length_mask(u);
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

VertexSet reachable_at_length(const PathLengthTable& t, int u, int l) {
  if (l < 1 || l >= t.n())
    throw InvalidParameter("path length must be in [1, n-1]");
  VertexSet out(t.n());
  std::uint64_t bit = 1ULL << (l - 1);
  for (int v = 0; v < t.n(); ++v)
    if (v != u && (t.length_mask(u, v) & bit)) out.insert(v);
  return out;
}

std::string dump_path_table(const PathLengthTable& t) {
  std::string out;
  for (int u = 0; u < t.n(); ++u)
    for (int v = 0; v < t.n(); ++v) {
      if (u == v) continue;
      out += std::to_string(u) + " " + std::to_string(v) + ":";
      bool first = true;
      for (int l : t.lengths(u, v)) {
        out += first ? " " : ",";
        out += std::to_string(l);
        first = false;
      }
      out += "\n";
    }
  return out;
}

}  // namespace edlab
