#include "edlab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <utility>

#include "edlab/bipanpositionable.hpp"
#include "edlab/certify.hpp"
#include "edlab/closed_sets.hpp"
#include "edlab/distance.hpp"
#include "edlab/errors.hpp"
#include "edlab/game.hpp"
#include "edlab/graph.hpp"
#include "edlab/oracle.hpp"
#include "edlab/parallel.hpp"
#include "edlab/path_table.hpp"
#include "edlab/predict.hpp"

namespace edlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Thrown by runners when a budget prevents any verdict. Turns into
// skipped-budget, never into a failure.
struct BudgetSkip {
  std::string note;
};

struct Ctx {
  const VerifyOptions& opts;
  std::mutex mu;
  std::map<int, SearchOutcome> qmin;

  MinSetOptions minset_opts() const {
    MinSetOptions mo;
    mo.node_budget = opts.node_budget;
    return mo;
  }

  PathLengthTable path_table(const Graph& g) const {
    PathLengthTable t = build_path_length_table(g, {opts.node_budget, 1});
    if (!t.complete()) throw BudgetSkip{"path table truncated by node budget"};
    return t;
  }

  SolveOptions solve_opts() const {
    SolveOptions so;
    so.state_budget = opts.state_budget;
    so.search_node_budget = opts.node_budget;
    return so;
  }

  // Shared hypercube searches (the table, evenness, and doubling claims all
  // want them). First writer wins; map references are stable.
  const SearchOutcome& minset_q(int k) {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = qmin.find(k);
      if (it != qmin.end()) return it->second;
    }
    MinSetOptions mo = minset_opts();
    mo.symmetry = Symmetry::hypercube;
    SearchOutcome out = min_closed_set(make_hypercube(k), mo);
    std::lock_guard<std::mutex> lock(mu);
    return qmin.emplace(k, std::move(out)).first->second;
  }
};

using Runner = std::function<std::string(Ctx&)>;

struct Entry {
  std::string id;
  std::string statement;
  std::string expected;
  bool full_only = false;
  Runner run;
};

// A tripped search still proves a floor; a floor above the expected value is
// a verdict (fail), anything else is a skip.
std::string settled(const SearchOutcome& s, int expect) {
  if (s.status == SearchOutcome::Status::optimal) return std::to_string(s.optimum);
  if (s.optimum > expect) return "proven >= " + std::to_string(s.optimum) + " under budget";
  throw BudgetSkip{"node budget exceeded at floor " + std::to_string(s.optimum)};
}

std::string settled_value(const SolveResult& r, int expect) {
  if (r.status == SolveResult::Status::exact) return std::to_string(r.value);
  if (!r.bounds.lower_is_heuristic && r.bounds.lower > expect)
    return "proven >= " + std::to_string(r.bounds.lower) + " under budget";
  if (r.bounds.upper > 0 && r.bounds.upper < expect)
    return "proven <= " + std::to_string(r.bounds.upper) + " under budget";
  throw BudgetSkip{"state budget exceeded"};
}

int settled_int(const SearchOutcome& s) {
  if (s.status != SearchOutcome::Status::optimal)
    throw BudgetSkip{"node budget exceeded at floor " + std::to_string(s.optimum)};
  return s.optimum;
}

std::string fraction(int hit, int total, const std::string& suffix, const std::string& detail) {
  std::string out = std::to_string(hit) + "/" + std::to_string(total) + " " + suffix;
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

// Independent re-check of the embedded-cycle claim: rebuild the cyclic order
// by unit steps inside the set, then compare both metrics pairwise.
std::string check_iso_cycle(int k) {
  VertexSet s = build_isometric_cycle_set(k);
  Graph q = make_hypercube(k);
  DistanceMatrix d = all_pairs_distances(q);
  const int len = 2 * k;
  if (s.count() != len) return "wrong size " + std::to_string(s.count());
  if (!is_closed(d, s)) return "not closed";
  if (!s.test(0)) return "missing base vertex";
  std::vector<char> used(s.universe(), 0);
  std::vector<int> order{0};
  used[0] = 1;
  for (int step = 1; step < len; ++step) {
    int next = -1;
    for (int v = s.next(0); v >= 0 && next < 0; v = s.next(v + 1))
      if (!used[v] && d.dist(order.back(), v) == 1) next = v;
    if (next < 0) return "not a single cycle";
    order.push_back(next);
    used[next] = 1;
  }
  if (d.dist(order.back(), order[0]) != 1) return "not a single cycle";
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      int along = std::min(j - i, len - (j - i));
      if (d.dist(order[i], order[j]) != along) return "not isometric";
    }
  return std::to_string(len) + " vertices, closed, isometric";
}

std::string check_doubling(Ctx& ctx, int n, int x) {
  const SearchOutcome& sx = ctx.minset_q(x);
  if (sx.status != SearchOutcome::Status::optimal)
    throw BudgetSkip{"Q_" + std::to_string(x) + " search tripped its budget"};
  VertexSet dbl = build_doubling_set(sx.witness, n, x);
  DistanceMatrix d = all_pairs_distances(make_hypercube(n));
  std::string size = std::to_string(dbl.count()) + " vertices";
  if (!is_closed(d, dbl)) return size + ", not closed in Q_" + std::to_string(n);
  return size + ", closed in Q_" + std::to_string(n);
}

std::vector<std::pair<std::string, Graph>> small_corpus(bool path_variant) {
  const int cap = path_variant ? 8 : 10;
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 3; n <= cap; ++n) out.emplace_back("C" + std::to_string(n), make_cycle(n));
  for (int n = 2; n <= cap; ++n) out.emplace_back("P" + std::to_string(n), make_path(n));
  out.emplace_back("Q2", make_hypercube(2));
  out.emplace_back("Q3", make_hypercube(3));
  out.emplace_back("CF5", make_cuttlefish(5));
  if (!path_variant) out.emplace_back("CF6", make_cuttlefish(6));
  return out;
}

void add_cycle_claims(std::vector<Entry>& es) {
  for (int n = 3; n <= 12; ++n) {
    const int want = predict_cycle_fd(n);
    es.push_back({"thm1.1/c" + std::to_string(n),
                  "Thm 1.1: exact distance-variant game value of C_" + std::to_string(n) +
                      " from vertex 0",
                  std::to_string(want), false, [n, want](Ctx& ctx) {
                    SolveResult r = solve_game(make_cycle(n), Variant::distance, 0, ctx.solve_opts());
                    return settled_value(r, want);
                  }});
  }
  for (int n = 3; n <= 24; ++n) {
    const int want = predict_cycle_fd(n);
    es.push_back({"thm1.1/minset/c" + std::to_string(n),
                  "Thm 1.1 via Thm 2.3: minimum closed set cardinality of C_" + std::to_string(n),
                  std::to_string(want), false, [n, want](Ctx& ctx) {
                    return settled(min_closed_set(make_cycle(n), ctx.minset_opts()), want);
                  }});
  }
}

void add_hypercube_claims(std::vector<Entry>& es, Scope scope) {
  const auto& table = hypercube_known_table();
  for (int k = 2; k <= 9; ++k) {
    const int want = table.at(k);
    es.push_back({"table-q/" + std::to_string(k),
                  "Section 4 table: minimum closed set cardinality of Q_" + std::to_string(k),
                  std::to_string(want), k >= 8, [k, want](Ctx& ctx) {
                    return settled(ctx.minset_q(k), want);
                  }});
  }

  const int kmax = scope == Scope::full ? 9 : 7;
  const int total = (kmax - 1) + 3;
  es.push_back({"lemma4.2/evenness",
                "Lemma 4.2: every computed hypercube closed-set minimum and game value is even",
                fraction(total, total, "even", ""), false, [kmax, total](Ctx& ctx) {
                  int even = 0;
                  std::string detail;
                  for (int k = 2; k <= kmax; ++k) {
                    int v = settled_int(ctx.minset_q(k));
                    if (v % 2 == 0)
                      ++even;
                    else if (detail.empty())
                      detail = "odd minimum " + std::to_string(v) + " at Q_" + std::to_string(k);
                  }
                  for (int k = 1; k <= 3; ++k) {
                    SolveResult r =
                        solve_game(make_hypercube(k), Variant::distance, 0, ctx.solve_opts());
                    if (r.status != SolveResult::Status::exact) throw BudgetSkip{"solve tripped"};
                    if (r.value % 2 == 0)
                      ++even;
                    else if (detail.empty())
                      detail = "odd value " + std::to_string(r.value) + " at Q_" + std::to_string(k);
                  }
                  return fraction(even, total, "even", detail);
                }});

  for (int k = 2; k <= 10; ++k) {
    es.push_back({"fact4.1/q" + std::to_string(k),
                  "Fact 4.1: pairwise distance sums of random vertex triples in Q_" +
                      std::to_string(k) + " are even",
                  "10000/10000 even", false, [k](Ctx&) {
                    DistanceMatrix d = all_pairs_distances(make_hypercube(k));
                    std::mt19937_64 rng(0xED1AB0ULL + (unsigned)k);
                    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
                    int even = 0;
                    std::string detail;
                    for (int i = 0; i < 10000; ++i) {
                      int a = (int)(rng() & mask), b = (int)(rng() & mask), c = (int)(rng() & mask);
                      int sum = d.dist(a, b) + d.dist(b, c) + d.dist(a, c);
                      if (sum % 2 == 0)
                        ++even;
                      else if (detail.empty())
                        detail = "odd sum at (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")";
                    }
                    return fraction(even, 10000, "even", detail);
                  }});
  }

  for (int k = 2; k <= 10; ++k) {
    es.push_back({"lemma4.3/q" + std::to_string(k),
                  "Lemma 4.3: a 2k-cycle embeds isometrically in Q_" + std::to_string(k) +
                      " and its vertex set is closed",
                  std::to_string(2 * k) + " vertices, closed, isometric", false,
                  [k](Ctx&) { return check_iso_cycle(k); }});
  }

  es.push_back({"lemma4.4/q12",
                "Lemma 4.4: doubling a minimum closed set of Q_6 gives a closed set in Q_12",
                "16 vertices, closed in Q_12", false,
                [](Ctx& ctx) { return check_doubling(ctx, 12, 6); }});
  es.push_back({"lemma4.4/q5",
                "Lemma 4.4: doubling a minimum closed set of Q_3 gives a closed set in Q_5",
                "8 vertices, closed in Q_5", false,
                [](Ctx& ctx) { return check_doubling(ctx, 5, 3); }});

  es.push_back({"bounds/q9",
                "Lemma 4.5 and Lemma 4.3 collapse the Q_9 bounds onto the table value 12",
                "[12, 12] (Lemma 4.5 / Lemma 4.3)", false, [](Ctx&) {
                  HypercubeBounds b = hypercube_bounds(9);
                  return "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "] (" +
                         b.lower_source + " / " + b.upper_source + ")";
                }});
  es.push_back({"bounds/q12-pinned",
                "Lemma 4.6 and the Q_6 doubling pin f_d(Q_12) = 16 with no search "
                "(consistent with Thm 4.7 at k=4, x=4)",
                "[16, 16]", false, [](Ctx&) {
                  HypercubeBounds b = hypercube_bounds(12);
                  return "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
                }});
}

void add_path_variant_claims(std::vector<Entry>& es) {
  struct Inst {
    const char* tag;
    Graph g;
  };
  const Inst insts[] = {{"c4", make_cycle(4)}, {"q3", make_hypercube(3)}};
  for (const Inst& in : insts) {
    Graph g = in.g;
    es.push_back({std::string("thm3.1/bipan/") + in.tag,
                  std::string("Def 3.2: ") + (in.tag[0] == 'c' ? "C_4" : "Q_3") +
                      " is bipanpositionable (hamiltonian-cycle search over every (x,y,k))",
                  "yes", false, [g](Ctx& ctx) {
                    BipanOptions bo;
                    bo.node_budget = (long long)ctx.opts.node_budget;
                    BipanReport r = check_bipanpositionable(g, bo);
                    if (r.verdict == BipanVerdict::budget_exceeded)
                      throw BudgetSkip{"triple search budget exceeded"};
                    return std::string(r.verdict == BipanVerdict::yes ? "yes" : "no");
                  }});
  }

  struct FpInst {
    const char* tag;
    Graph g;
  };
  const FpInst fps[] = {
      {"c4", make_cycle(4)}, {"q3", make_hypercube(3)}, {"q4", make_hypercube(4)}};
  for (const FpInst& in : fps) {
    Graph g = in.g;
    const int n = g.n();
    es.push_back({std::string("thm3.1/fp/") + in.tag,
                  "Thm 3.1: path-variant game value is 4 from every start",
                  "4 at " + std::to_string(n) + "/" + std::to_string(n) + " starts", false,
                  [g, n](Ctx& ctx) {
                    int hits = 0;
                    std::string detail;
                    for (int v = 0; v < n; ++v) {
                      std::string got = settled_value(solve_game(g, Variant::path, v, ctx.solve_opts()), 4);
                      if (got == "4")
                        ++hits;
                      else if (detail.empty())
                        detail = "start " + std::to_string(v) + " gave " + got;
                    }
                    std::string out = "4 at " + std::to_string(hits) + "/" + std::to_string(n) + " starts";
                    if (!detail.empty()) out += " (" + detail + ")";
                    return out;
                  }});
  }

  for (int k = 2; k <= 3; ++k) {
    es.push_back({"cor-fp/q" + std::to_string(k),
                  "Corollary to Thm 3.1: minimum path-closed set of Q_" + std::to_string(k) +
                      " has 4 vertices",
                  "4", false, [k](Ctx& ctx) {
                    return settled(min_path_closed_set(make_hypercube(k), ctx.minset_opts()), 4);
                  }});
  }
  for (int k = 3; k <= 4; ++k) {
    es.push_back({"cor-fp/face/q" + std::to_string(k),
                  "Thm 3.1 strategy set: a 4-cycle face of Q_" + std::to_string(k) +
                      " is path-closed",
                  "path-closed", false, [k](Ctx& ctx) {
                    Graph g = make_hypercube(k);
                    PathLengthTable t = ctx.path_table(g);
                    VertexSet face = VertexSet::of(g.n(), {0, 1, 3, 2});
                    return std::string(is_path_closed(t, face) ? "path-closed" : "not path-closed");
                  }});
  }
}

void add_cuttlefish_claims(std::vector<Entry>& es) {
  for (int n = 5; n <= 12; ++n) {
    const int total = n + 2 * cf::leg_len(n);
    es.push_back({"thm5.2/cf" + std::to_string(n) + "/dist",
                  "Thm 5.2: anchored closed-set minima on CF_" + std::to_string(n) +
                      " match 2*floor(n/2), +1 at the facing ring vertex for odd n",
                  fraction(total, total, "match", ""), false, [n, total](Ctx& ctx) {
                    Graph g = make_cuttlefish(n);
                    DistanceMatrix d = all_pairs_distances(g);
                    int hits = 0;
                    std::string detail;
                    for (int v = 0; v < total; ++v) {
                      const int want = predict_cf(n, v, Variant::distance);
                      MinSetOptions mo = ctx.minset_opts();
                      mo.anchor = v;
                      std::string got = settled(min_closed_set(g, d, mo), want);
                      if (got == std::to_string(want))
                        ++hits;
                      else if (detail.empty())
                        detail = "anchor " + std::to_string(v) + " gave " + got + ", want " +
                                 std::to_string(want);
                    }
                    return fraction(hits, total, "match", detail);
                  }});
  }

  for (int n = 5; n <= 7; ++n) {
    const int total = n + 2 * cf::leg_len(n);
    es.push_back({"thm5.2/solve/cf" + std::to_string(n),
                  "Thm 5.2 cross-check: exact distance-variant game values on CF_" +
                      std::to_string(n) + " at every start",
                  fraction(total, total, "match", ""), false, [n, total](Ctx& ctx) {
                    Graph g = make_cuttlefish(n);
                    int hits = 0;
                    std::string detail;
                    for (int v = 0; v < total; ++v) {
                      const int want = predict_cf(n, v, Variant::distance);
                      std::string got =
                          settled_value(solve_game(g, Variant::distance, v, ctx.solve_opts()), want);
                      if (got == std::to_string(want))
                        ++hits;
                      else if (detail.empty())
                        detail = "start " + std::to_string(v) + " gave " + got + ", want " +
                                 std::to_string(want);
                    }
                    return fraction(hits, total, "match", detail);
                  }});
  }

  for (int n = 10; n <= 14; ++n) {
    const int size = predict_cf(n, 0, Variant::path);
    es.push_back({"thm5.1/cf" + std::to_string(n) + "/path",
                  "Thm 5.1 upper bound: CF_" + std::to_string(n) +
                      " path certificates are path-closed and cover every start",
                  "2 certificates, size " + std::to_string(size) + ", path-closed, cover all",
                  false, [n, size](Ctx& ctx) {
                    Graph g = make_cuttlefish(n);
                    PathLengthTable t = ctx.path_table(g);
                    auto certs = build_cf_certificates(n, Variant::path);
                    if (certs.size() != 2) return std::to_string(certs.size()) + " certificates";
                    VertexSet cover(g.n());
                    for (const auto& c : certs) {
                      if (c.set.count() != size)
                        return "certificate " + c.name + " has size " + std::to_string(c.set.count());
                      if (!is_path_closed(t, c.set)) return "certificate " + c.name + " not path-closed";
                      cover |= c.set;
                    }
                    if (cover.count() != g.n())
                      return std::string("certificates do not cover all starts");
                    return "2 certificates, size " + std::to_string(size) +
                           ", path-closed, cover all";
                  }});
  }

  {
    const int total = 10 + 2 * cf::leg_len(10);
    es.push_back({"thm5.1/solve/cf10",
                  "Thm 5.1 exact: path-variant game value of CF_10 is 14 from every start",
                  fraction(total, total, "= 14", ""), true, [total](Ctx& ctx) {
                    Graph g = make_cuttlefish(10);
                    int hits = 0;
                    std::string detail;
                    for (int v = 0; v < total; ++v) {
                      std::string got = settled_value(solve_game(g, Variant::path, v, ctx.solve_opts()), 14);
                      if (got == "14")
                        ++hits;
                      else if (detail.empty())
                        detail = "start " + std::to_string(v) + " gave " + got;
                    }
                    return fraction(hits, total, "= 14", detail);
                  }});
  }
}

void add_oracle_claims(std::vector<Entry>& es) {
  es.push_back({"oracle/minset/distance",
                "Exhaustive subset enumeration agrees with the search on every small "
                "corpus graph (distance variant, anchored and free)",
                "21/21 agree", false, [](Ctx& ctx) {
                  auto corpus = small_corpus(false);
                  int hits = 0;
                  std::string detail;
                  for (const auto& [name, g] : corpus) {
                    BruteResult b = brute_min_closed(g);
                    SearchOutcome s = min_closed_set(g, ctx.minset_opts());
                    bool ok = s.status == SearchOutcome::Status::optimal &&
                              b.optimum == s.optimum && b.witness == s.witness;
                    for (int v = 0; ok && v < g.n(); ++v) {
                      MinSetOptions mo = ctx.minset_opts();
                      mo.anchor = v;
                      SearchOutcome sa = min_closed_set(g, mo);
                      ok = sa.status == SearchOutcome::Status::optimal &&
                           brute_min_closed(g, v).optimum == sa.optimum;
                    }
                    if (ok)
                      ++hits;
                    else if (detail.empty())
                      detail = "disagreement on " + name;
                  }
                  return fraction(hits, (int)corpus.size(), "agree", detail);
                }});

  es.push_back({"oracle/minset/path",
                "Exhaustive subset enumeration agrees with the search on every small "
                "corpus graph (path variant, anchored and free)",
                "16/16 agree", false, [](Ctx& ctx) {
                  auto corpus = small_corpus(true);
                  int hits = 0;
                  std::string detail;
                  for (const auto& [name, g] : corpus) {
                    BruteResult b = brute_min_path_closed(g);
                    SearchOutcome s = min_path_closed_set(g, ctx.minset_opts());
                    bool ok = s.status == SearchOutcome::Status::optimal &&
                              b.optimum == s.optimum && b.witness == s.witness;
                    for (int v = 0; ok && v < g.n(); ++v) {
                      MinSetOptions mo = ctx.minset_opts();
                      mo.anchor = v;
                      SearchOutcome sa = min_path_closed_set(g, mo);
                      ok = sa.status == SearchOutcome::Status::optimal &&
                           brute_min_path_closed(g, v).optimum == sa.optimum;
                    }
                    if (ok)
                      ++hits;
                    else if (detail.empty())
                      detail = "disagreement on " + name;
                  }
                  return fraction(hits, (int)corpus.size(), "agree", detail);
                }});

  es.push_back({"oracle/sandwich/distance",
                "Thm 2.3 sandwich: every exact distance-variant value sits between the "
                "free and anchored closed-set minima from the oracle",
                "21/21 within bounds", false, [](Ctx& ctx) {
                  auto corpus = small_corpus(false);
                  int hits = 0;
                  std::string detail;
                  for (const auto& [name, g] : corpus) {
                    const int lo = brute_min_closed(g).optimum;
                    bool ok = true;
                    for (int v = 0; ok && v < g.n(); ++v) {
                      SolveResult r = solve_game(g, Variant::distance, v, ctx.solve_opts());
                      if (r.status != SolveResult::Status::exact) throw BudgetSkip{"solve tripped"};
                      const int hi = brute_min_closed(g, v).optimum;
                      ok = lo <= r.value && r.value <= hi;
                    }
                    if (ok)
                      ++hits;
                    else if (detail.empty())
                      detail = "violation on " + name;
                  }
                  return fraction(hits, (int)corpus.size(), "within bounds", detail);
                }});

  es.push_back({"oracle/sandwich/path",
                "Closed-set sandwich on the path variant (upper side is Thm 2.3-style "
                "confinement; the lower side is checked observationally)",
                "16/16 within bounds", false, [](Ctx& ctx) {
                  auto corpus = small_corpus(true);
                  int hits = 0;
                  std::string detail;
                  for (const auto& [name, g] : corpus) {
                    const int lo = brute_min_path_closed(g).optimum;
                    bool ok = true;
                    for (int v = 0; ok && v < g.n(); ++v) {
                      SolveResult r = solve_game(g, Variant::path, v, ctx.solve_opts());
                      if (r.status != SolveResult::Status::exact) throw BudgetSkip{"solve tripped"};
                      const int hi = brute_min_path_closed(g, v).optimum;
                      ok = lo <= r.value && r.value <= hi;
                    }
                    if (ok)
                      ++hits;
                    else if (detail.empty())
                      detail = "violation on " + name;
                  }
                  return fraction(hits, (int)corpus.size(), "within bounds", detail);
                }});
}

std::vector<Entry> build_entries(Scope scope) {
  std::vector<Entry> es;
  add_cycle_claims(es);
  add_hypercube_claims(es, scope);
  add_path_variant_claims(es);
  add_cuttlefish_claims(es);
  add_oracle_claims(es);
  std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
  return es;
}

Entry self_test_entry() {
  return {"self-test/inject-failure",
          "Harness self-test: this claim is constructed to fail and must be reported as such",
          "intact", false, [](Ctx&) { return std::string("tampered"); }};
}

}  // namespace

const char* claim_status_name(Claim::Status s) {
  switch (s) {
    case Claim::Status::pass: return "pass";
    case Claim::Status::fail: return "fail";
    default: return "skipped-budget";
  }
}

int Report::failures() const {
  int n = 0;
  for (const Claim& c : claims) n += c.status == Claim::Status::fail;
  return n;
}

int Report::skips() const {
  int n = 0;
  for (const Claim& c : claims) n += c.status == Claim::Status::skipped_budget;
  return n;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Claim& c : claims) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["status"] = claim_status_name(c.status);
    j["seconds"] = c.seconds;
    arr.push_back(std::move(j));
  }
  return arr;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string Report::to_csv() const {
  std::string out = "id,expected,computed,status,seconds\n";
  char buf[32];
  for (const Claim& c : claims) {
    std::snprintf(buf, sizeof buf, "%.3f", c.seconds);
    out += csv_field(c.id) + "," + csv_field(c.expected) + "," + csv_field(c.computed) + "," +
           claim_status_name(c.status) + "," + buf + "\n";
  }
  return out;
}

std::vector<std::string> claim_ids(Scope scope) {
  std::vector<std::string> ids;
  for (const Entry& e : build_entries(scope)) ids.push_back(e.id);
  return ids;
}

Report verify_paper(const VerifyOptions& opts) {
  if (opts.workers < 1) throw InvalidParameter("workers must be >= 1");
  if (opts.node_budget == 0 || opts.state_budget == 0)
    throw InvalidParameter("budgets must be positive");

  std::vector<Entry> entries = build_entries(opts.scope);
  if (opts.inject_failure) {
    entries.push_back(self_test_entry());
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.id < b.id; });
  }

  Ctx ctx{opts, {}, {}};
  Report rep;
  rep.claims.resize(entries.size());
  const auto t0 = Clock::now();

  parallel_for(entries.size(), opts.workers, [&](std::size_t i) {
    const Entry& e = entries[i];
    Claim& c = rep.claims[i];
    c.id = e.id;
    c.statement = e.statement;
    c.expected = e.expected;
    if (e.full_only && opts.scope != Scope::full) {
      c.status = Claim::Status::skipped_budget;
      c.computed = "skipped: full scope only";
      return;
    }
    if (opts.time_budget_seconds > 0 && elapsed(t0) > opts.time_budget_seconds) {
      c.status = Claim::Status::skipped_budget;
      c.computed = "skipped: time budget spent";
      return;
    }
    const auto start = Clock::now();
    try {
      c.computed = e.run(ctx);
      c.status = c.computed == c.expected ? Claim::Status::pass : Claim::Status::fail;
    } catch (const BudgetSkip& b) {
      c.status = Claim::Status::skipped_budget;
      c.computed = b.note;
    } catch (const std::exception& ex) {
      c.status = Claim::Status::fail;
      c.computed = std::string("error: ") + ex.what();
    }
    c.seconds = elapsed(start);
    if (opts.progress)
      std::fprintf(stderr, "claim %-22s %-14s %6.2fs\n", c.id.c_str(),
                   claim_status_name(c.status), c.seconds);
  });
  return rep;
}

}  // namespace edlab
