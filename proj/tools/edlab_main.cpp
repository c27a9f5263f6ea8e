// Command-line front end: gen, solve, min-closed, certify, verify-paper,
// table. JSON output is the stable interface; text is for reading; exit codes
// are 0 ok, 1 operational error or failed check, 2 usage, 3 budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "edlab/bipanpositionable.hpp"
#include "edlab/certify.hpp"
#include "edlab/claims.hpp"
#include "edlab/closed_sets.hpp"
#include "edlab/distance.hpp"
#include "edlab/errors.hpp"
#include "edlab/game.hpp"
#include "edlab/graph.hpp"
#include "edlab/json_io.hpp"
#include "edlab/oracle.hpp"
#include "edlab/path_table.hpp"
#include "edlab/predict.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

using nlohmann::ordered_json;

edlab::Graph load_graph(const std::string& src) {
  if (src.find(':') != std::string::npos) return edlab::graph_from_spec(src);
  std::ifstream in(src);
  if (!in) throw edlab::InvalidParameter("cannot open graph file '" + src + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return edlab::parse_edge_list(ss.str());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw edlab::InvalidParameter("cannot write '" + out_path + "'");
  out << text;
}

// EDLAB_WORKERS, when set, overrides the flag (reproducible CI runs).
int resolve_workers(int flag_value) {
  const char* env = std::getenv("EDLAB_WORKERS");
  if (!env || !*env) return flag_value;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096)
    throw edlab::InvalidParameter("EDLAB_WORKERS must be a positive integer");
  return (int)v;
}

struct CommonOpts {
  std::uint64_t node_budget = 100'000'000;
  std::uint64_t state_budget = 50'000'000;
  double time_budget = 0;
  int workers = 1;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_csv = false) {
  cmd->add_option("--node-budget", c.node_budget, "search node budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--state-budget", c.state_budget, "game state budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-budget", c.time_budget, "wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", c.workers, "worker threads (EDLAB_WORKERS overrides)")
      ->check(CLI::PositiveNumber);
  std::vector<std::string> formats = {"json", "text"};
  if (with_csv) formats.push_back("csv");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--out", c.out, "write output to this file instead of stdout");
}

std::string render_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- solve ----------------------------------------------------------------

std::string solve_text(const edlab::SolveResult& r) {
  std::string out = "variant: " + edlab::variant_name(r.variant) + "\n";
  out += "start: " + std::to_string(r.start) + "\n";
  if (r.status == edlab::SolveResult::Status::exact)
    out += "value: " + std::to_string(r.value) + " (exact)\n";
  else
    out += "value: undecided (budget exceeded)\n";
  if (r.bounds.upper > 0) {
    out += "bounds: [" + std::to_string(r.bounds.lower) + ", " + std::to_string(r.bounds.upper) +
           "]" + (r.bounds.lower_is_heuristic ? " (lower heuristic)" : "") + "\n";
  }
  out += "states: " + std::to_string(r.states_expanded) + "\n";
  if (!r.trace.empty()) {
    out += "trace:";
    for (const auto& t : r.trace)
      out += " (" + std::to_string(t.call) + " -> " + std::to_string(t.response) +
             (t.extends ? "+" : "") + ")";
    out += "\n";
  }
  return out;
}

int run_solve(const std::string& graph_src, const std::string& variant, int start, bool trace,
              const CommonOpts& c) {
  edlab::Graph g = load_graph(graph_src);
  edlab::SolveOptions so;
  so.state_budget = c.state_budget;
  so.search_node_budget = c.node_budget;
  so.time_budget_seconds = c.time_budget;
  so.want_trace = trace;
  edlab::SolveResult r = edlab::solve_game(g, edlab::parse_variant(variant), start, so);
  emit(c.format == "text" ? solve_text(r) : render_json(edlab::to_json(r)), c.out);
  return r.status == edlab::SolveResult::Status::exact ? kOk : kBudget;
}

// ---- min-closed -----------------------------------------------------------

std::string outcome_text(const edlab::SearchOutcome& s) {
  std::string out = "optimum: " + std::to_string(s.optimum) + "\n";
  out += "witness:";
  for (int v : s.witness.to_vector()) out += " " + std::to_string(v);
  out += "\n";
  out += "anchor: " + (s.anchor ? std::to_string(*s.anchor) : std::string("-")) + "\n";
  out += std::string("status: ") +
         (s.status == edlab::SearchOutcome::Status::optimal ? "optimal" : "budget-exceeded") +
         "\n";
  out += "nodes: " + std::to_string(s.nodes_explored) + "\n";
  return out;
}

int run_min_closed(const std::string& graph_src, const std::string& variant,
                   std::optional<int> anchor, bool symmetry, bool progress,
                   const CommonOpts& c) {
  edlab::Graph g = load_graph(graph_src);
  edlab::MinSetOptions mo;
  mo.node_budget = c.node_budget;
  mo.time_budget_seconds = c.time_budget;
  mo.progress = progress;
  if (anchor) mo.anchor = *anchor;
  if (symmetry) mo.symmetry = edlab::Symmetry::hypercube;
  edlab::SearchOutcome s = edlab::parse_variant(variant) == edlab::Variant::distance
                               ? edlab::min_closed_set(g, mo)
                               : edlab::min_path_closed_set(g, mo);
  emit(c.format == "text" ? outcome_text(s) : render_json(edlab::to_json(s)), c.out);
  return s.status == edlab::SearchOutcome::Status::optimal ? kOk : kBudget;
}

// ---- certify --------------------------------------------------------------

ordered_json set_json(const edlab::VertexSet& s) {
  ordered_json arr = ordered_json::array();
  for (int v : s.to_vector()) arr.push_back(v);
  return arr;
}

int run_certify_iso(int k, const CommonOpts& c) {
  edlab::VertexSet s = edlab::build_isometric_cycle_set(k);
  edlab::DistanceMatrix d = edlab::all_pairs_distances(edlab::make_hypercube(k));
  bool closed = edlab::is_closed(d, s);
  ordered_json j;
  j["kind"] = "iso-cycle";
  j["k"] = k;
  j["size"] = s.count();
  j["vertices"] = set_json(s);
  j["closed"] = closed;
  j["check"] = closed ? "pass" : "fail";
  if (c.format == "text") {
    std::string t = "iso-cycle k=" + std::to_string(k) + ": size " + std::to_string(s.count()) +
                    (closed ? ", closed" : ", NOT CLOSED") + "\n";
    emit(t, c.out);
  } else {
    emit(render_json(j), c.out);
  }
  return closed ? kOk : kError;
}

int run_certify_doubling(int n, int x, const CommonOpts& c) {
  edlab::MinSetOptions mo;
  mo.node_budget = c.node_budget;
  mo.time_budget_seconds = c.time_budget;
  mo.symmetry = edlab::Symmetry::hypercube;
  edlab::SearchOutcome sx = edlab::min_closed_set(edlab::make_hypercube(x), mo);
  if (sx.status != edlab::SearchOutcome::Status::optimal) {
    std::fprintf(stderr, "Q_%d search tripped its budget\n", x);
    return kBudget;
  }
  edlab::VertexSet dbl = edlab::build_doubling_set(sx.witness, n, x);
  edlab::DistanceMatrix d = edlab::all_pairs_distances(edlab::make_hypercube(n));
  bool closed = edlab::is_closed(d, dbl);
  ordered_json j;
  j["kind"] = "doubling";
  j["n"] = n;
  j["x"] = x;
  j["size"] = dbl.count();
  j["vertices"] = set_json(dbl);
  j["closed"] = closed;
  j["check"] = closed ? "pass" : "fail";
  if (c.format == "text") {
    emit("doubling Q_" + std::to_string(x) + " -> Q_" + std::to_string(n) + ": size " +
             std::to_string(dbl.count()) + (closed ? ", closed" : ", NOT CLOSED") + "\n",
         c.out);
  } else {
    emit(render_json(j), c.out);
  }
  return closed ? kOk : kError;
}

int run_certify_cf(int n, const std::string& variant, const CommonOpts& c) {
  edlab::Variant var = edlab::parse_variant(variant);
  edlab::Graph g = edlab::make_cuttlefish(n);
  auto certs = edlab::build_cf_certificates(n, var);
  std::optional<edlab::DistanceMatrix> dm;
  std::optional<edlab::PathLengthTable> pt;
  if (var == edlab::Variant::distance)
    dm = edlab::all_pairs_distances(g);
  else
    pt = edlab::build_path_length_table(g, {c.node_budget, resolve_workers(c.workers)});
  bool all_ok = true;
  edlab::VertexSet cover(g.n());
  ordered_json arr = ordered_json::array();
  for (const auto& cert : certs) {
    bool closed = dm ? edlab::is_closed(*dm, cert.set) : edlab::is_path_closed(*pt, cert.set);
    all_ok = all_ok && closed;
    cover |= cert.set;
    ordered_json cj;
    cj["name"] = cert.name;
    cj["size"] = cert.set.count();
    cj["vertices"] = set_json(cert.set);
    cj["closed"] = closed;
    arr.push_back(std::move(cj));
  }
  bool covers = cover.count() == g.n();
  all_ok = all_ok && covers;
  ordered_json j;
  j["kind"] = "cf";
  j["n"] = n;
  j["variant"] = edlab::variant_name(var);
  j["certificates"] = arr;
  j["cover_all"] = covers;
  j["check"] = all_ok ? "pass" : "fail";
  if (c.format == "text") {
    std::string t = "cf n=" + std::to_string(n) + " (" + edlab::variant_name(var) + "):";
    for (const auto& cert : certs) t += " " + cert.name + "=" + std::to_string(cert.set.count());
    t += covers ? ", cover all" : ", COVERAGE GAP";
    t += all_ok ? ", pass\n" : ", FAIL\n";
    emit(t, c.out);
  } else {
    emit(render_json(j), c.out);
  }
  return all_ok ? kOk : kError;
}

int run_certify_bipan(const std::string& graph_src, const CommonOpts& c) {
  edlab::Graph g = load_graph(graph_src);
  edlab::BipanOptions bo;
  bo.node_budget = (long long)c.node_budget;
  bo.workers = resolve_workers(c.workers);
  edlab::BipanReport r = edlab::check_bipanpositionable(g, bo);
  ordered_json j = edlab::to_json(r);
  j["kind"] = "bipan";
  if (c.format == "text") {
    std::string t = std::string("bipanpositionable: ") + edlab::verdict_name(r.verdict);
    if (r.counterexample)
      t += " (no hamiltonian cycle places " + std::to_string(r.counterexample->x) + "," +
           std::to_string(r.counterexample->y) + " at cycle distance " +
           std::to_string(r.counterexample->k) + ")";
    emit(t + "\n", c.out);
  } else {
    emit(render_json(j), c.out);
  }
  return r.verdict == edlab::BipanVerdict::budget_exceeded ? kBudget : kOk;
}

// ---- table ----------------------------------------------------------------

int run_table(const std::string& family, int lo, int hi, const CommonOpts& c) {
  ordered_json rows = ordered_json::array();
  std::string text;
  if (family == "cycle") {
    if (lo < 3) lo = 3;
    if (hi > 100000) throw edlab::InvalidParameter("cycle table capped at n = 100000");
    for (int n = lo; n <= hi; ++n) {
      int v = edlab::predict_cycle_fd(n);
      ordered_json r;
      r["n"] = n;
      r["f_d"] = v;
      rows.push_back(std::move(r));
      text += "C_" + std::to_string(n) + "  f_d = " + std::to_string(v) + "\n";
    }
  } else if (family == "hypercube") {
    if (lo < 0) lo = 0;
    if (hi > 30) throw edlab::InvalidParameter("hypercube table capped at n = 30");
    const auto& known = edlab::hypercube_known_table();
    for (int n = lo; n <= hi; ++n) {
      edlab::HypercubeBounds b = edlab::hypercube_bounds(n);
      auto it = known.find(n);
      ordered_json r;
      r["n"] = n;
      if (it != known.end())
        r["known"] = it->second;
      else
        r["known"] = nullptr;
      r["lower"] = b.lower;
      r["upper"] = b.upper;
      r["lower_source"] = b.lower_source;
      r["upper_source"] = b.upper_source;
      rows.push_back(std::move(r));
      text += "Q_" + std::to_string(n) + "  " +
              (it != known.end() ? "f_d = " + std::to_string(it->second)
                                 : "f_d in [" + std::to_string(b.lower) + ", " +
                                       std::to_string(b.upper) + "]") +
              "  (lower: " + b.lower_source + "; upper: " + b.upper_source + ")\n";
    }
  } else if (family == "cuttlefish") {
    if (lo < 5) lo = 5;
    if (hi > 10000) throw edlab::InvalidParameter("cuttlefish table capped at n = 10000");
    for (int n = lo; n <= hi; ++n) {
      ordered_json r;
      r["n"] = n;
      bool odd = n % 2 != 0;
      bool dist_ok = n >= 5 && (odd || n >= 6);
      if (dist_ok) {
        r["f_d"] = 2 * (n / 2);
        if (odd) {
          ordered_json sp;
          sp["start"] = edlab::cf::u(n, (n + 3) / 2);
          sp["value"] = 2 * (n / 2) + 1;
          r["f_d_special"] = sp;
        } else {
          r["f_d_special"] = nullptr;
        }
      } else {
        r["f_d"] = nullptr;
        r["f_d_special"] = nullptr;
      }
      if (n >= 10)
        r["f_p"] = edlab::predict_cf(n, 0, edlab::Variant::path);
      else
        r["f_p"] = nullptr;
      rows.push_back(r);
      text += "CF_" + std::to_string(n);
      if (dist_ok) {
        text += "  f_d = " + std::to_string(2 * (n / 2));
        if (odd)
          text += " (" + std::to_string(2 * (n / 2) + 1) + " from ring vertex " +
                  std::to_string(edlab::cf::u(n, (n + 3) / 2)) + ")";
      }
      if (n >= 10)
        text += "  f_p = " + std::to_string(edlab::predict_cf(n, 0, edlab::Variant::path));
      text += "\n";
    }
  } else {
    throw edlab::InvalidParameter("unknown family '" + family + "'");
  }

  if (c.format == "text") {
    emit(text, c.out);
  } else if (c.format == "csv") {
    std::string csv;
    if (family == "cycle") {
      csv = "n,f_d\n";
      for (const auto& r : rows)
        csv += std::to_string((int)r["n"]) + "," + std::to_string((int)r["f_d"]) + "\n";
    } else if (family == "hypercube") {
      csv = "n,known,lower,upper\n";
      for (const auto& r : rows)
        csv += std::to_string((int)r["n"]) + "," +
               (r["known"].is_null() ? "" : std::to_string((int)r["known"])) + "," +
               std::to_string((int)r["lower"]) + "," + std::to_string((int)r["upper"]) + "\n";
    } else {
      csv = "n,f_d,f_d_special_start,f_d_special_value,f_p\n";
      for (const auto& r : rows) {
        csv += std::to_string((int)r["n"]) + ",";
        csv += (r["f_d"].is_null() ? "" : std::to_string((int)r["f_d"])) + ",";
        if (!r["f_d_special"].is_null()) {
          csv += std::to_string((int)r["f_d_special"]["start"]) + "," +
                 std::to_string((int)r["f_d_special"]["value"]);
        } else {
          csv += ",";
        }
        csv += "," + (r["f_p"].is_null() ? std::string() : std::to_string((int)r["f_p"])) + "\n";
      }
    }
    emit(csv, c.out);
  } else {
    emit(render_json(rows), c.out);
  }
  return kOk;
}

// ---- verify-paper ---------------------------------------------------------

std::string report_text(const edlab::Report& rep) {
  std::string out;
  for (const edlab::Claim& cl : rep.claims) {
    char line[512];
    std::snprintf(line, sizeof line, "%-24s %-14s expected: %s | computed: %s\n", cl.id.c_str(),
                  edlab::claim_status_name(cl.status), cl.expected.c_str(), cl.computed.c_str());
    out += line;
  }
  out += std::to_string(rep.claims.size()) + " claims: " +
         std::to_string((int)rep.claims.size() - rep.failures() - rep.skips()) + " passed, " +
         std::to_string(rep.failures()) + " failed, " + std::to_string(rep.skips()) +
         " skipped (budget)\n";
  return out;
}

int run_verify(const std::string& scope, bool inject, bool progress, const CommonOpts& c) {
  edlab::VerifyOptions vo;
  vo.scope = scope == "full" ? edlab::Scope::full : edlab::Scope::quick;
  vo.workers = resolve_workers(c.workers);
  vo.node_budget = c.node_budget;
  vo.state_budget = c.state_budget;
  vo.time_budget_seconds = c.time_budget;
  vo.progress = progress;
  vo.inject_failure = inject;
  edlab::Report rep = edlab::verify_paper(vo);
  std::string body;
  if (c.format == "csv")
    body = rep.to_csv();
  else if (c.format == "text")
    body = report_text(rep);
  else
    body = render_json(rep.to_json());
  emit(body, c.out);
  return rep.all_passed() ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explorer-director game toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write the canonical edge list for a family spec");
  std::string gen_spec;
  std::string gen_out;
  gen->add_option("spec", gen_spec, "family spec, e.g. cycle:6, hypercube:3, cuttlefish:10")
      ->required();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "exact game value from a start vertex");
  std::string solve_graph, solve_variant = "distance";
  int solve_start = 0;
  bool solve_trace = false;
  CommonOpts solve_c;
  solve->add_option("graph", solve_graph, "family spec or edge-list file")->required();
  solve->add_option("--variant", solve_variant, "distance | path")
      ->check(CLI::IsMember({"distance", "path"}));
  solve->add_option("--start", solve_start, "start vertex (default 0)");
  solve->add_flag("--trace", solve_trace, "include an optimal line of play");
  add_common(solve, solve_c);

  // min-closed
  auto* minc = app.add_subcommand("min-closed", "minimum (path-)closed set search");
  std::string minc_graph, minc_variant = "distance";
  int minc_anchor = -1;
  bool minc_symmetry = false, minc_progress = false;
  CommonOpts minc_c;
  minc->add_option("graph", minc_graph, "family spec or edge-list file")->required();
  minc->add_option("--variant", minc_variant, "distance | path")
      ->check(CLI::IsMember({"distance", "path"}));
  auto* anchor_opt = minc->add_option("--anchor", minc_anchor, "vertex the set must contain");
  minc->add_flag("--symmetry", minc_symmetry, "hypercube symmetry reduction");
  minc->add_flag("--progress", minc_progress, "periodic progress lines on stderr");
  add_common(minc, minc_c);

  // certify
  auto* certify = app.add_subcommand("certify", "emit and check the benchmark constructions");
  certify->require_subcommand(1);
  auto* ciso = certify->add_subcommand("iso-cycle", "embedded 2k-cycle in Q_k");
  int ciso_k = 3;
  CommonOpts ciso_c;
  ciso->add_option("--k", ciso_k, "hypercube dimension (2..12)")
      ->required()
      ->check(CLI::Range(2, 12));
  add_common(ciso, ciso_c);
  auto* cdbl = certify->add_subcommand("doubling", "doubled closed set from Q_x into Q_n");
  int cdbl_n = 0, cdbl_x = 0;
  CommonOpts cdbl_c;
  cdbl->add_option("--n", cdbl_n, "target dimension")->required()->check(CLI::Range(1, 13));
  cdbl->add_option("--x", cdbl_x, "source dimension")->required()->check(CLI::Range(0, 12));
  add_common(cdbl, cdbl_c);
  auto* ccf = certify->add_subcommand("cf", "cuttlefish confinement certificates");
  int ccf_n = 10;
  std::string ccf_variant = "path";
  CommonOpts ccf_c;
  ccf->add_option("--n", ccf_n, "cycle length of CF_n")->required();
  ccf->add_option("--variant", ccf_variant, "distance | path")
      ->check(CLI::IsMember({"distance", "path"}));
  add_common(ccf, ccf_c);
  auto* cbip = certify->add_subcommand("bipan", "bipanpositionability check");
  std::string cbip_graph;
  CommonOpts cbip_c;
  cbip->add_option("graph", cbip_graph, "family spec or edge-list file")->required();
  add_common(cbip, cbip_c);

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the claim suite and report");
  std::string verify_scope = "quick";
  bool verify_inject = false, verify_progress = false;
  CommonOpts verify_c;
  verify->add_option("--scope", verify_scope, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--progress", verify_progress, "one line per finished claim on stderr");
  verify->add_flag("--inject-failure", verify_inject)->group("");  // harness self-test
  add_common(verify, verify_c, true);

  // table
  auto* table = app.add_subcommand("table", "known and predicted value tables");
  std::string table_family;
  int table_min = -1, table_max = -1;
  CommonOpts table_c;
  table->add_option("--family", table_family, "cycle | hypercube | cuttlefish")
      ->required()
      ->check(CLI::IsMember({"cycle", "hypercube", "cuttlefish"}));
  table->add_option("--min", table_min, "smallest n (default: family minimum)");
  table->add_option("--max", table_max, "largest n");
  add_common(table, table_c, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      edlab::Graph g = edlab::graph_from_spec(gen_spec);
      emit(edlab::serialize_edge_list(g), gen_out);
      return kOk;
    }
    if (*solve) return run_solve(solve_graph, solve_variant, solve_start, solve_trace, solve_c);
    if (*minc) {
      std::optional<int> anchor;
      if (anchor_opt->count() > 0) anchor = minc_anchor;
      return run_min_closed(minc_graph, minc_variant, anchor, minc_symmetry, minc_progress,
                            minc_c);
    }
    if (*ciso) return run_certify_iso(ciso_k, ciso_c);
    if (*cdbl) return run_certify_doubling(cdbl_n, cdbl_x, cdbl_c);
    if (*ccf) return run_certify_cf(ccf_n, ccf_variant, ccf_c);
    if (*cbip) return run_certify_bipan(cbip_graph, cbip_c);
    if (*verify) return run_verify(verify_scope, verify_inject, verify_progress, verify_c);
    if (*table) {
      int lo = table_min, hi = table_max;
      if (table_family == "cycle") {
        if (lo < 0) lo = 3;
        if (hi < 0) hi = 24;
      } else if (table_family == "hypercube") {
        if (lo < 0) lo = 0;
        if (hi < 0) hi = 16;
      } else {
        if (lo < 0) lo = 5;
        if (hi < 0) hi = 14;
      }
      if (hi < lo) throw edlab::InvalidParameter("--max must be at least --min");
      return run_table(table_family, lo, hi, table_c);
    }
    return kUsage;
  } catch (const edlab::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const edlab::InvalidParameter& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const edlab::UnsupportedInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const edlab::InvalidGraph& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const edlab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kError;
  }
}
