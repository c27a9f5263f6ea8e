#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <set>

#include "edlab/closed_sets.hpp"

namespace edlab {

namespace {

// Branch-and-bound decision engine: does a closed set U with
// required <= U <= allowed and |U| <= k exist? Branches on an unsatisfied
// (vertex, call) constraint with the fewest candidate witnesses; a forced
// candidate is added immediately. Sound pruning: distinct unanswered calls of
// one member need at least ceil(unsat / max_cover) extra vertices.
class SetSearch {
 public:
  enum class Result { found, refuted, budget };

  SetSearch(const MoveTable& mt, std::uint64_t budget, double time_budget, bool progress)
      : mt_(mt), n_(mt.n), budget_(budget), time_budget_(time_budget), progress_(progress) {
    full_mask_.resize(n_);
    answers_.assign((size_t)n_ * n_, 0);
    for (int u = 0; u < n_; ++u) {
      size_t calls = mt.calls[u].size();
      if (calls > 64) throw ResourceLimit("search supports at most 64 calls per vertex");
      full_mask_[u] = calls == 64 ? ~0ULL : (1ULL << calls) - 1;
      for (size_t c = 0; c < calls; ++c) {
        const VertexSet& tv = mt.targets[u][c];
        for (int x = tv.next(0); x >= 0; x = tv.next(x + 1))
          answers_[(size_t)u * n_ + x] |= 1ULL << c;
      }
    }
    start_ = std::chrono::steady_clock::now();
  }

  Result exists(int k, const VertexSet& required, const VertexSet& allowed,
                bool use_blocks, int dim) {
    if (required.empty()) throw InternalError("decision probe needs a seed vertex");
    if (!allowed.contains_all(required)) return Result::refuted;
    if (required.count() > k) return Result::refuted;
    cur_k_ = k;
    State s;
    s.P = VertexSet(n_);
    s.avail = allowed;
    s.use_blocks = use_blocks;
    if (use_blocks && dim > 0) s.blocks.push_back((dim == 64 ? ~0ULL : (1ULL << dim) - 1));
    for (int v = required.next(0); v >= 0; v = required.next(v + 1)) {
      if (!bump()) return Result::budget;
      add(s, v);
    }
    return dfs(s);
  }

  const VertexSet& witness() const { return witness_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct State {
    VertexSet P;
    VertexSet avail;  // allowed minus P
    std::vector<int> members;
    std::vector<std::uint64_t> sat;  // answered-call mask per member
    std::vector<std::uint64_t> blocks;
    bool use_blocks = false;
  };

  bool bump() {
    if (timed_out_ || nodes_ >= budget_) return false;
    ++nodes_;
    if (time_budget_ > 0 && (nodes_ & 0xFFFF) == 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() >
            time_budget_) {
      timed_out_ = true;
      return false;
    }
    if (progress_ && (nodes_ & ((1 << 22) - 1)) == 0) report_progress();
    return true;
  }

  void report_progress() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::fprintf(stderr, "min-set: k=%d nodes=%llu elapsed=%.1fs\n", cur_k_,
                 (unsigned long long)nodes_, secs);
  }

  void add(State& s, int x) {
    std::uint64_t newsat = 0;
    for (size_t i = 0; i < s.members.size(); ++i) {
      s.sat[i] |= answers_[(size_t)s.members[i] * n_ + x];
      newsat |= answers_[(size_t)x * n_ + s.members[i]];
    }
    s.P.insert(x);
    s.avail.erase(x);
    s.members.push_back(x);
    s.sat.push_back(newsat);
    if (s.use_blocks) {
      std::vector<std::uint64_t> nb;
      nb.reserve(s.blocks.size() + 1);
      for (std::uint64_t b : s.blocks) {
        std::uint64_t inside = b & (std::uint64_t)(unsigned)x;
        std::uint64_t outside = b & ~inside;
        if (inside) nb.push_back(inside);
        if (outside) nb.push_back(outside);
      }
      s.blocks.swap(nb);
    }
  }

  Result dfs(State& s) {
    // Propagate forced witnesses, then pick the tightest constraint.
    int bu = -1, bc = -1, bcount = 0;
    for (;;) {
      bu = -1;
      bcount = 0;
      int need = 0;
      for (size_t i = 0; i < s.members.size(); ++i) {
        int u = s.members[i];
        std::uint64_t unsat = full_mask_[u] & ~s.sat[i];
        if (!unsat) continue;
        need = std::max(need, (std::popcount(unsat) + mt_.max_cover[u] - 1) / mt_.max_cover[u]);
        while (unsat) {
          int c = std::countr_zero(unsat);
          unsat &= unsat - 1;
          int count = mt_.targets[u][c].intersection_count(s.avail);
          if (count == 0) return Result::refuted;
          if (bu < 0 || count < bcount) {
            bu = u;
            bc = c;
            bcount = count;
          }
        }
      }
      if (bu < 0) {
        witness_ = s.P;  // every constraint answered: P itself is closed
        return Result::found;
      }
      if (s.P.count() + need > cur_k_) return Result::refuted;
      if (bcount == 1) {
        VertexSet forced = mt_.targets[bu][bc];
        forced &= s.avail;
        if (!bump()) return Result::budget;
        add(s, forced.next(0));
        continue;
      }
      break;
    }

    VertexSet cands = mt_.targets[bu][bc];
    cands &= s.avail;
    std::set<std::vector<std::uint8_t>> seen_profiles;
    for (int c = cands.next(0); c >= 0; c = cands.next(c + 1)) {
      if (s.use_blocks) {
        std::vector<std::uint8_t> profile;
        profile.reserve(s.blocks.size());
        for (std::uint64_t b : s.blocks)
          profile.push_back((std::uint8_t)std::popcount(b & (std::uint64_t)(unsigned)c));
        if (!seen_profiles.insert(std::move(profile)).second) continue;
      }
      if (!bump()) return Result::budget;
      State t = s;
      add(t, c);
      Result r = dfs(t);
      if (r != Result::refuted) return r;
    }
    return Result::refuted;
  }

  const MoveTable& mt_;
  int n_;
  std::uint64_t budget_;
  double time_budget_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  bool progress_;
  int cur_k_ = 0;
  std::vector<std::uint64_t> full_mask_;
  std::vector<std::uint64_t> answers_;  // answers_[u*n+x]: call indices of u answered by x
  VertexSet witness_;
  std::chrono::steady_clock::time_point start_;
};

// Lex-least coordinate-permutation image of a hypercube vertex set, compared
// as the ascending member sequence. Brute force over dim! permutations; fine
// for the dimensions the search itself can handle.
VertexSet canonical_hypercube_set(const VertexSet& w, int dim) {
  if (dim > 10) return w;
  std::vector<int> perm(dim);
  for (int i = 0; i < dim; ++i) perm[i] = i;
  auto members = w.to_vector();
  std::vector<int> best, image(members.size());
  do {
    for (size_t i = 0; i < members.size(); ++i) {
      int m = members[i], out = 0;
      for (int b = 0; b < dim; ++b)
        if (m >> b & 1) out |= 1 << perm[b];
      image[i] = out;
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return VertexSet::from_vector(w.universe(), best);
}

struct SearchSetup {
  const Graph* g;
  const MoveTable* mt;
  MinSetOptions opts;
  int seed_lb = 2;      // sound lower bound to start deepening from
  bool even_step = false;  // closed sets in this graph have even cardinality
};

SearchOutcome run_min_search(const SearchSetup& su) {
  const MoveTable& mt = *su.mt;
  const MinSetOptions& opts = su.opts;
  int n = mt.n;
  bool hyper = opts.symmetry == Symmetry::hypercube;
  int dim = su.g->family_param();
  if (hyper && su.g->family() != Family::hypercube)
    throw InvalidParameter("hypercube symmetry needs a hypercube-family graph");
  if (opts.anchor && (*opts.anchor < 0 || *opts.anchor >= n))
    throw InvalidParameter("anchor out of range");

  SearchOutcome out;
  out.anchor = opts.anchor;
  if (n == 1) {
    // The one-vertex graph has no callable value, so the singleton is closed.
    out.optimum = 1;
    out.witness = VertexSet::of(1, {0});
    return out;
  }

  SetSearch engine(mt, opts.node_budget, opts.time_budget_seconds, opts.progress);
  VertexSet all = VertexSet::full(n);

  int lb = std::max(2, std::max(su.seed_lb, opts.lower_hint));
  if (su.even_step && lb % 2) ++lb;
  int proven_lb = lb;

  auto budget_out = [&]() {
    out.optimum = proven_lb;
    out.witness = VertexSet(n);
    out.nodes_explored = engine.nodes();
    out.status = SearchOutcome::Status::budget_exceeded;
    return out;
  };

  for (int k = lb; k <= n; k += su.even_step ? 2 : 1) {
    if (opts.progress) std::fprintf(stderr, "min-set: trying k=%d\n", k);
    SetSearch::Result r;
    int amin = -1;  // min element proven optimal by the unanchored scan
    if (hyper) {
      r = engine.exists(k, VertexSet::of(n, {0}), all, true, dim);
    } else if (opts.anchor) {
      r = engine.exists(k, VertexSet::of(n, {*opts.anchor}), all, false, 0);
    } else {
      r = SetSearch::Result::refuted;
      for (int a = 0; a < n && r == SetSearch::Result::refuted; ++a) {
        VertexSet allowed(n);
        for (int v = a; v < n; ++v) allowed.insert(v);
        r = engine.exists(k, VertexSet::of(n, {a}), allowed, false, 0);
        if (r == SetSearch::Result::found) amin = a;
      }
    }
    if (r == SetSearch::Result::budget) return budget_out();
    if (r == SetSearch::Result::refuted) {
      proven_lb = k + 1;
      if (su.even_step && proven_lb % 2) ++proven_lb;
      continue;
    }

    // Found at optimum |witness| (could be k-1 when stepping by 2).
    VertexSet w = engine.witness();
    int optimum = w.count();
    if (optimum < proven_lb)
      throw InternalError("search witness beats the proven lower bound");
    if (hyper) {
      w = canonical_hypercube_set(w, dim);
      if (opts.anchor && *opts.anchor != 0) {
        VertexSet t(n);
        for (int v = w.next(0); v >= 0; v = w.next(v + 1)) t.insert(v ^ *opts.anchor);
        w = t;
      }
    } else {
      // Rebuild the lexicographically least optimal witness by forcing its
      // elements smallest-first; each probe pins the set below b to `prefix`.
      // The unanchored scan already refuted min elements below amin at this
      // size, so the first round can start there.
      VertexSet prefix(n);
      int last = amin >= 0 && optimum == k ? amin - 1 : -1;
      bool aborted = false;
      while (prefix.count() < optimum && !aborted) {
        int wnext = w.next(last + 1);
        for (int b = last + 1; b <= wnext; ++b) {
          if (b == wnext) {
            prefix.insert(b);
            last = b;
            break;
          }
          VertexSet required = prefix;
          required.insert(b);
          if (opts.anchor) required.insert(*opts.anchor);
          VertexSet allowed = required;
          for (int v = b + 1; v < n; ++v) allowed.insert(v);
          SetSearch::Result pr = engine.exists(optimum, required, allowed, false, 0);
          if (pr == SetSearch::Result::budget) {
            aborted = true;  // keep the (valid) witness we have
            break;
          }
          if (pr == SetSearch::Result::found) {
            w = engine.witness();
            prefix.insert(b);
            last = b;
            break;
          }
        }
      }
    }

    if (!is_closed(mt, w)) throw InternalError("search produced a non-closed witness");
    if (opts.anchor && !w.test(*opts.anchor))
      throw InternalError("search witness misses its anchor");
    out.optimum = optimum;
    out.witness = w;
    out.nodes_explored = engine.nodes();
    return out;
  }
  throw InternalError("deepening passed the whole vertex set");
}

int coverage_seed(const MoveTable& mt, int u) {
  int calls = (int)mt.calls[u].size();
  return 1 + (calls + mt.max_cover[u] - 1) / mt.max_cover[u];
}

// Start value justified by the closed-form small cases: dimensions 4k and
// 4k+1 (k >= 1) have minima of at least 4k+4, and every minimum is even.
int hypercube_distance_seed(int dim) {
  int lb = dim + 1;
  if (dim >= 5 && dim % 4 == 1) lb = std::max(lb, dim + 3);
  if (dim >= 4 && dim % 4 == 0) lb = std::max(lb, dim + 4);
  if (dim >= 1 && lb % 2) ++lb;
  return lb;
}

}  // namespace

SearchOutcome min_closed_set(const Graph& g, const DistanceMatrix& d,
                             const MinSetOptions& opts) {
  MoveTable mt = distance_moves(d);
  SearchSetup su{&g, &mt, opts};
  su.seed_lb = std::max(2, ecc_lower_bound(d));
  if (opts.anchor && g.n() > 1)
    su.seed_lb = std::max(su.seed_lb, 1 + d.ecc(*opts.anchor));
  if (g.family() == Family::hypercube) {
    su.seed_lb = std::max(su.seed_lb, hypercube_distance_seed(g.family_param()));
    su.even_step = g.family_param() >= 1;
  }
  return run_min_search(su);
}

SearchOutcome min_closed_set(const Graph& g, const MinSetOptions& opts) {
  return min_closed_set(g, all_pairs_distances(g), opts);
}

SearchOutcome min_path_closed_set(const Graph& g, const PathLengthTable& t,
                                  const MinSetOptions& opts) {
  MoveTable mt = path_moves(t);
  SearchSetup su{&g, &mt, opts};
  if (g.n() > 1) {
    if (opts.anchor) {
      su.seed_lb = coverage_seed(mt, *opts.anchor);
    } else {
      int best = mt.n;
      for (int u = 0; u < mt.n; ++u) best = std::min(best, coverage_seed(mt, u));
      su.seed_lb = best;
    }
  }
  return run_min_search(su);
}

SearchOutcome min_path_closed_set(const Graph& g, const MinSetOptions& opts) {
  if (opts.anchor && (*opts.anchor < 0 || *opts.anchor >= g.n()))
    throw InvalidParameter("anchor vertex out of range");
  PathLengthTable t = build_path_length_table(g, {opts.node_budget, 1});
  if (!t.complete()) {
    // The node budget ran out before the length table was exact. Report a
    // budget trip with the generic floor rather than throwing.
    SearchOutcome out;
    out.anchor = opts.anchor;
    out.optimum = g.n() >= 2 ? 2 : 1;
    out.witness = VertexSet(g.n());
    out.status = SearchOutcome::Status::budget_exceeded;
    return out;
  }
  return min_path_closed_set(g, t, opts);
}

}  // namespace edlab
