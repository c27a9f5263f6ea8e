#include <algorithm>
#include <chrono>
#include <climits>
#include <unordered_map>

#include "edlab/game.hpp"

namespace edlab {

namespace {

struct BudgetHit {};

// Solves one visited set at a time. Member values of a fixed set S form a
// monotone max/min system coupled through same-set responses; iterating it
// from the floor |S| converges to the game values. Responses that leave S
// recurse into the next level and are cached. Members of the closed core of S
// sit exactly at |S| (the responder can keep play inside the core forever),
// and a position outside the core provably exceeds |S|, so the core doubles
// as the exact stopping test.
class GameSolver {
 public:
  GameSolver(const MoveTable& mt, std::uint64_t state_budget, double time_budget = 0)
      : mt_(mt), n_(mt.n), budget_(state_budget), time_budget_(time_budget),
        start_(std::chrono::steady_clock::now()) {}

  int solve(int pos, const VertexSet& s) {
    VertexSet core = closed_core_in(mt_, s);
    if (core.test(pos)) return s.count();
    const Level& lv = level(s);
    return lv.value[lv.index_of(pos)];
  }

  std::uint64_t states() const { return states_; }

  std::vector<TraceStep> trace(int start) {
    std::vector<TraceStep> steps;
    VertexSet s(n_);
    s.insert(start);
    int pos = start;
    // Within one level the lock sweep of the position strictly decreases
    // along optimal play, and levels only go up, so n*n+n steps is generous.
    int guard = n_ * n_ + n_ + 8;
    for (;;) {
      VertexSet core = closed_core_in(mt_, s);
      if (core.test(pos)) break;
      if (--guard < 0) throw InternalError("game trace failed to terminate");
      const Level& lv = level(s);
      Locks lk = locks_for(s);
      int i = lv.index_of(pos);
      int ci = lk.call[i];
      const VertexSet& tv = mt_.targets[pos][ci];
      int best = INT_MAX, bx = -1;
      for (int x = tv.next(0); x >= 0; x = tv.next(x + 1)) {
        int gx;
        if (s.test(x)) {
          gx = lv.value[lv.index_of(x)];
        } else {
          VertexSet s2 = s;
          s2.insert(x);
          gx = solve(x, s2);
        }
        if (gx < best) {
          best = gx;
          bx = x;
        }
      }
      if (best != lv.value[i]) throw InternalError("trace disagrees with solved value");
      steps.push_back({mt_.calls[pos][ci], bx, !s.test(bx)});
      if (!s.test(bx)) s.insert(bx);
      pos = bx;
    }
    return steps;
  }

 private:
  struct Level {
    std::vector<int> members;  // ascending
    std::vector<int> value;    // parallel
    int index_of(int v) const {
      auto it = std::lower_bound(members.begin(), members.end(), v);
      if (it == members.end() || *it != v) throw InternalError("position not in its level set");
      return (int)(it - members.begin());
    }
  };

  struct Locks {
    std::vector<int> lock;  // sweep when the value last rose
    std::vector<int> call;  // first call index achieving it at that sweep
  };

  const Level& level(const VertexSet& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    Level lv;
    run_sweeps(s, lv, nullptr);
    states_ += lv.members.size();
    return memo_.emplace(s, std::move(lv)).first->second;
  }

  Locks locks_for(const VertexSet& s) {
    Level lv;
    Locks lk;
    run_sweeps(s, lv, &lk);
    return lk;
  }

  void run_sweeps(const VertexSet& s, Level& lv, Locks* locks) {
    if (states_ + (std::uint64_t)s.count() > budget_) throw BudgetHit{};
    if (time_budget_ > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() >
            time_budget_)
      throw BudgetHit{};
    lv.members = s.to_vector();
    int m = (int)lv.members.size();
    int base = s.count();
    std::vector<int> idx(n_, -1);
    for (int i = 0; i < m; ++i) idx[lv.members[i]] = i;
    VertexSet core = closed_core_in(mt_, s);

    std::vector<int> prev(m, base), next(m, base);
    if (locks) {
      locks->lock.assign(m, 0);
      locks->call.assign(m, -1);
    }
    std::unordered_map<int, int> esc;
    auto escape = [&](int x) {
      auto eit = esc.find(x);
      if (eit != esc.end()) return eit->second;
      VertexSet s2 = s;
      s2.insert(x);
      int v = solve(x, s2);
      esc.emplace(x, v);
      return v;
    };

    for (int sweep = 1;; ++sweep) {
      bool changed = false;
      for (int i = 0; i < m; ++i) {
        int p = lv.members[i];
        if (core.test(p)) {
          next[i] = base;
          continue;
        }
        int bestv = -1, bestcall = -1;
        int ncalls = (int)mt_.calls[p].size();
        for (int ci = 0; ci < ncalls; ++ci) {
          const VertexSet& tv = mt_.targets[p][ci];
          int min_in = INT_MAX;
          bool has_escape = false;
          for (int x = tv.next(0); x >= 0; x = tv.next(x + 1)) {
            if (idx[x] >= 0)
              min_in = std::min(min_in, prev[idx[x]]);
            else
              has_escape = true;
          }
          int mval;
          if (min_in <= base + 1 || !has_escape) {
            // Escaping responses are worth at least base+1, so they cannot
            // beat an in-set option this low; skip opening new levels.
            mval = min_in;
          } else {
            mval = min_in;
            for (int x = tv.next(0); x >= 0; x = tv.next(x + 1))
              if (idx[x] < 0) mval = std::min(mval, escape(x));
          }
          if (mval > bestv) {
            bestv = mval;
            bestcall = ci;
          }
        }
        if (bestv < prev[i]) throw InternalError("game values must be monotone");
        next[i] = bestv;
        if (bestv != prev[i]) {
          changed = true;
          if (locks) {
            locks->lock[i] = sweep;
            locks->call[i] = bestcall;
          }
        }
      }
      prev.swap(next);
      if (!changed) break;
    }
    lv.value = std::move(prev);
  }

  const MoveTable& mt_;
  int n_;
  std::uint64_t budget_;
  double time_budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t states_ = 0;
  std::unordered_map<VertexSet, Level, VertexSetHash> memo_;
};

VertexSet translate_onto(const Graph& g, const VertexSet& w, int start) {
  int n = g.n();
  VertexSet out(n);
  int w0 = w.next(0);
  if (g.family() == Family::cycle) {
    int delta = ((start - w0) % n + n) % n;
    for (int v = w.next(0); v >= 0; v = w.next(v + 1)) out.insert((v + delta) % n);
  } else {
    int mask = w0 ^ start;
    for (int v = w.next(0); v >= 0; v = w.next(v + 1)) out.insert(v ^ mask);
  }
  return out;
}

}  // namespace

GameBounds game_bounds(const Graph& g, Variant variant, int start,
                       std::uint64_t search_node_budget, double time_budget_seconds) {
  if (start < 0 || start >= g.n()) throw InvalidParameter("start vertex out of range");
  bool dist = variant == Variant::distance;
  MinSetOptions mo;
  mo.node_budget = search_node_budget;
  mo.time_budget_seconds = time_budget_seconds;
  if (g.family() == Family::hypercube) mo.symmetry = Symmetry::hypercube;

  GameBounds b;
  b.lower_is_heuristic = !dist;
  SearchOutcome un = dist ? min_closed_set(g, mo) : min_path_closed_set(g, mo);
  b.lower = un.optimum;  // on a tripped budget this is still a proven floor

  bool translatable = g.family() == Family::cycle || g.family() == Family::hypercube;
  if (un.status == SearchOutcome::Status::optimal && translatable) {
    b.upper = un.optimum;
    b.upper_witness = translate_onto(g, un.witness, start);
    return b;
  }
  mo.anchor = start;
  SearchOutcome an = dist ? min_closed_set(g, mo) : min_path_closed_set(g, mo);
  if (an.status == SearchOutcome::Status::optimal) {
    b.upper = an.optimum;
    b.upper_witness = an.witness;
  } else {
    b.upper = g.n();
    b.upper_witness = VertexSet::full(g.n());
  }
  return b;
}

SolveResult solve_game(const Graph& g, Variant variant, int start, const SolveOptions& opts) {
  if (start < 0 || start >= g.n()) throw InvalidParameter("start vertex out of range");
  SolveResult r;
  r.variant = variant;
  r.start = start;

  MoveTable mt;
  if (variant == Variant::distance) {
    mt = distance_moves(all_pairs_distances(g));
  } else {
    PathLengthTable t = build_path_length_table(g, {opts.search_node_budget, 1});
    if (!t.complete()) {
      // No exact length table, no exact game. Budget status with the only
      // bounds that survive: the generic floor and the full vertex set.
      r.status = SolveResult::Status::budget_exceeded;
      if (opts.want_bounds) {
        r.bounds.lower = g.n() >= 2 ? 2 : 1;
        r.bounds.lower_is_heuristic = true;
        r.bounds.upper = g.n();
        r.bounds.upper_witness = VertexSet::full(g.n());
      }
      return r;
    }
    mt = path_moves(t);
  }

  const auto t0 = std::chrono::steady_clock::now();
  if (opts.want_bounds) {
    r.bounds = game_bounds(g, variant, start, opts.search_node_budget, opts.time_budget_seconds);
  } else {
    r.bounds.lower = 1;
    r.bounds.upper = g.n();
    r.bounds.upper_witness = VertexSet::full(g.n());
  }

  double solver_time = 0;
  if (opts.time_budget_seconds > 0) {
    const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    solver_time = opts.time_budget_seconds - used;
    if (solver_time <= 0) {
      r.status = SolveResult::Status::budget_exceeded;
      r.value = 0;
      return r;
    }
  }
  GameSolver solver(mt, opts.state_budget, solver_time);
  try {
    VertexSet s0(g.n());
    s0.insert(start);
    r.value = solver.solve(start, s0);
    if (opts.want_trace) r.trace = solver.trace(start);
    r.states_expanded = solver.states();
    if (opts.want_bounds) {
      if (r.value > r.bounds.upper) throw InternalError("solved value beats its upper bound");
      if (!r.bounds.lower_is_heuristic && r.value < r.bounds.lower)
        throw InternalError("solved value beats its lower bound");
    }
  } catch (const BudgetHit&) {
    r.status = SolveResult::Status::budget_exceeded;
    r.value = 0;
    r.states_expanded = solver.states();
    r.trace.clear();
  }
  return r;
}

}  // namespace edlab
