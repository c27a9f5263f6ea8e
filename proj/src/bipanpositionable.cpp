#include "edlab/bipanpositionable.hpp"

#include <bit>
#include <cstddef>
#include <vector>

#include "edlab/distance.hpp"
#include "edlab/errors.hpp"
#include "edlab/parallel.hpp"

namespace edlab {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// One (x, y, k) instance: find a hamiltonian cycle made of an x-y arc with k
// edges and a second arc through every remaining vertex.
struct TripleSearch {
  const std::vector<std::uint64_t>& nbr;
  std::uint64_t all;
  int n;
  long long budget;
  long long nodes = 0;
  bool tripped = false;

  bool bump() {
    if (++nodes > budget) {
      tripped = true;
      return false;
    }
    return true;
  }

  bool all_reachable(int from, std::uint64_t ok, std::uint64_t need) const {
    std::uint64_t seen = bit(from);
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= nbr[v];
      }
      next &= ok & ~seen;
      seen |= next;
      frontier = next;
    }
    return (need & ~seen) == 0;
  }

  // BFS distance from `from` to `to` using only vertices in ok as hops.
  int hop_dist(int from, int to, std::uint64_t ok) const {
    if (from == to) return 0;
    std::uint64_t seen = bit(from);
    std::uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
      ++d;
      std::uint64_t next = 0;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= nbr[v];
      }
      next &= ok & ~seen;
      if (next & bit(to)) return d;
      seen |= next;
      frontier = next;
    }
    return -1;
  }

  // Second arc from x back to y whose interior is exactly `todo`.
  bool arc2(int cur, int y, std::uint64_t todo) {
    if (!bump()) return false;
    if (todo == 0) return (nbr[cur] & bit(y)) != 0;
    const std::uint64_t pending = todo | bit(y);
    if (!all_reachable(cur, pending, pending)) return false;
    for (std::uint64_t cand = nbr[cur] & todo; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      if (arc2(v, y, todo & ~bit(v))) return true;
      if (tripped) return false;
    }
    return false;
  }

  // First arc: `left` more edges to reach y, everything in `used` is taken.
  bool arc1(int x, int cur, int y, int left, std::uint64_t used) {
    if (!bump()) return false;
    if (left == 1) {
      if (!(nbr[cur] & bit(y))) return false;
      return arc2(x, y, all & ~(used | bit(y)));
    }
    const std::uint64_t room = all & ~used & ~bit(y);
    if (std::popcount(room) < left - 1) return false;
    const int d = hop_dist(cur, y, room | bit(y));
    if (d < 0 || d > left) return false;
    for (std::uint64_t cand = nbr[cur] & room; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      if (arc1(x, v, y, left - 1, used | bit(v))) return true;
      if (tripped) return false;
    }
    return false;
  }

  bool run(int x, int y, int k) { return arc1(x, x, y, k, bit(x)); }
};

}  // namespace

BipanReport check_bipanpositionable(const Graph& g, const BipanOptions& opts) {
  const int n = g.n();
  if (n > 64) throw UnsupportedInput("bipanpositionable check needs n <= 64");
  if (opts.node_budget <= 0) throw InvalidParameter("node budget must be positive");
  if (opts.workers < 1) throw InvalidParameter("workers must be >= 1");

  BipanReport rep;
  rep.verdict = BipanVerdict::no;
  if (n < 4 || n % 2 != 0) return rep;

  // 2-color by BFS: bail on odd cycles, disconnection, or unbalanced sides.
  std::vector<int> color(n, -1);
  {
    std::vector<int> queue{0};
    color[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = color[v] ^ 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return rep;
        }
      }
    }
    if (static_cast<int>(queue.size()) != n) return rep;
    int zeros = 0;
    for (int c : color) zeros += (c == 0);
    if (2 * zeros != n) return rep;
  }

  const DistanceMatrix dm = all_pairs_distances(g);
  std::vector<std::uint64_t> nbr(n);
  std::uint64_t all = 0;
  for (int v = 0; v < n; ++v) {
    nbr[v] = g.neighbor_mask(v);
    all |= bit(v);
  }

  std::vector<BipanTriple> tasks;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int k = dm.dist(x, y); 2 * k <= n; k += 2) tasks.push_back({x, y, k});

  std::vector<signed char> outcome(tasks.size(), 0);  // 1 found, 0 refuted, 2 budget
  std::vector<long long> spent(tasks.size(), 0);
  parallel_for(tasks.size(), opts.workers, [&](std::size_t i) {
    TripleSearch ts{nbr, all, n, opts.node_budget};
    const bool found = ts.run(tasks[i].x, tasks[i].y, tasks[i].k);
    outcome[i] = ts.tripped ? 2 : (found ? 1 : 0);
    spent[i] = ts.nodes;
  });

  rep.triples_checked = static_cast<int>(tasks.size());
  bool any_budget = false;
  rep.verdict = BipanVerdict::yes;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    rep.nodes_explored += spent[i];
    if (outcome[i] == 2) any_budget = true;
    if (outcome[i] == 0 && !rep.counterexample) {
      rep.verdict = BipanVerdict::no;
      rep.counterexample = tasks[i];
    }
  }
  if (rep.verdict == BipanVerdict::yes && any_budget) rep.verdict = BipanVerdict::budget_exceeded;
  return rep;
}

}  // namespace edlab
