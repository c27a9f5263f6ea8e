#include "edlab/oracle.hpp"

#include <cstdint>
#include <vector>

#include "edlab/errors.hpp"

namespace edlab {

namespace {

// Fresh BFS rows, written against the definition on purpose: the oracle must
// not share plumbing with the code it cross-checks.
std::vector<std::vector<int>> bfs_rows(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> rows(n);
  for (int s = 0; s < n; ++s) {
    rows[s].assign(n, -1);
    rows[s][s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (rows[s][w] < 0) {
          rows[s][w] = rows[s][v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (rows[s][v] < 0) throw InvalidGraph("oracle requires a connected graph");
  }
  return rows;
}

void reach_dfs(const Graph& g, int cur, int len, std::uint32_t used,
               std::vector<std::uint32_t>& out) {
  if (len > 0) out[len] |= std::uint32_t{1} << cur;
  for (int w : g.neighbors(cur)) {
    if (used & (std::uint32_t{1} << w)) continue;
    reach_dfs(g, w, len + 1, used | (std::uint32_t{1} << w), out);
  }
}

// reach[u][l] = endpoints of simple paths from u with exactly l edges.
std::vector<std::vector<std::uint32_t>> reach_tables(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw UnsupportedInput("path oracle supports at most 16 vertices");
  std::vector<std::vector<std::uint32_t>> reach(n);
  for (int u = 0; u < n; ++u) {
    reach[u].assign(n, 0);
    reach_dfs(g, u, 0, std::uint32_t{1} << u, reach[u]);
  }
  return reach;
}

std::uint32_t mask_of(const VertexSet& set) {
  std::uint32_t m = 0;
  for (int v = set.next(0); v >= 0; v = set.next(v + 1)) m |= std::uint32_t{1} << v;
  return m;
}

bool closed_by_rows(const std::vector<std::vector<int>>& rows, int n, const VertexSet& set) {
  for (int u = set.next(0); u >= 0; u = set.next(u + 1)) {
    int ecc = 0;
    for (int v = 0; v < n; ++v) ecc = std::max(ecc, rows[u][v]);
    for (int delta = 1; delta <= ecc; ++delta) {
      bool hit = false;
      for (int x = set.next(0); x >= 0 && !hit; x = set.next(x + 1)) hit = rows[u][x] == delta;
      if (!hit) return false;
    }
  }
  return true;
}

bool path_closed_by_reach(const std::vector<std::vector<std::uint32_t>>& reach, int n,
                          const VertexSet& set, std::uint32_t set_mask) {
  for (int u = set.next(0); u >= 0; u = set.next(u + 1)) {
    for (int l = 1; l < n; ++l) {
      if (reach[u][l] == 0) continue;
      if ((reach[u][l] & set_mask) == 0) return false;
    }
  }
  return true;
}

// Subsets of {0..n-1} of size c in lexicographic order of the sorted vertex
// list, so the first closed subset found is the lex-least witness.
template <typename Fn>
bool for_each_combination(int n, int c, Fn&& fn) {
  std::vector<int> pick(c);
  for (int i = 0; i < c; ++i) pick[i] = i;
  while (true) {
    if (fn(pick)) return true;
    int i = c - 1;
    while (i >= 0 && pick[i] == n - c + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool oracle_is_closed(const Graph& g, const VertexSet& set) {
  if (set.empty()) throw InvalidParameter("oracle_is_closed needs a non-empty set");
  return closed_by_rows(bfs_rows(g), g.n(), set);
}

bool oracle_is_path_closed(const Graph& g, const VertexSet& set) {
  if (set.empty()) throw InvalidParameter("oracle_is_path_closed needs a non-empty set");
  return path_closed_by_reach(reach_tables(g), g.n(), set, mask_of(set));
}

BruteResult brute_min_closed(const Graph& g, std::optional<int> anchor) {
  const int n = g.n();
  if (n > 20) throw UnsupportedInput("closed-set oracle supports at most 20 vertices");
  if (anchor && (*anchor < 0 || *anchor >= n)) throw InvalidParameter("anchor out of range");
  const auto rows = bfs_rows(g);
  BruteResult res;
  for (int c = 1; c <= n; ++c) {
    bool found = for_each_combination(n, c, [&](const std::vector<int>& pick) {
      if (anchor) {
        bool has = false;
        for (int v : pick) has = has || v == *anchor;
        if (!has) return false;
      }
      VertexSet cand = VertexSet::from_vector(n, pick);
      if (!closed_by_rows(rows, n, cand)) return false;
      res.optimum = c;
      res.witness = cand;
      return true;
    });
    if (found) return res;
  }
  throw InternalError("no closed set found; full vertex set should always close");
}

BruteResult brute_min_path_closed(const Graph& g, std::optional<int> anchor) {
  const int n = g.n();
  if (n > 16) throw UnsupportedInput("path oracle supports at most 16 vertices");
  if (anchor && (*anchor < 0 || *anchor >= n)) throw InvalidParameter("anchor out of range");
  const auto reach = reach_tables(g);
  BruteResult res;
  for (int c = 1; c <= n; ++c) {
    bool found = for_each_combination(n, c, [&](const std::vector<int>& pick) {
      if (anchor) {
        bool has = false;
        for (int v : pick) has = has || v == *anchor;
        if (!has) return false;
      }
      VertexSet cand = VertexSet::from_vector(n, pick);
      if (!path_closed_by_reach(reach, n, cand, mask_of(cand))) return false;
      res.optimum = c;
      res.witness = cand;
      return true;
    });
    if (found) return res;
  }
  throw InternalError("no path-closed set found; full vertex set should always close");
}

long long count_simple_paths(const Graph& g, int u, int len) {
  const int n = g.n();
  if (n > 16) throw UnsupportedInput("path oracle supports at most 16 vertices");
  if (u < 0 || u >= n) throw InvalidParameter("vertex out of range");
  if (len < 0) throw InvalidParameter("length must be nonnegative");
  long long count = 0;
  struct Rec {
    const Graph& g;
    int want;
    long long& out;
    void walk(int cur, int depth, std::uint32_t used) {
      if (depth == want) {
        ++out;
        return;
      }
      for (int w : g.neighbors(cur)) {
        if (used & (std::uint32_t{1} << w)) continue;
        walk(w, depth + 1, used | (std::uint32_t{1} << w));
      }
    }
  } rec{g, len, count};
  rec.walk(u, 0, std::uint32_t{1} << u);
  return count;
}

}  // namespace edlab
