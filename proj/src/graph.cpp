#include "edlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace edlab {

namespace {

void check_connected(const std::vector<std::vector<int>>& adj) {
  int n = (int)adj.size();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  if (reached != n) throw UnsupportedInput("graph is not connected");
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges,
                        Family family, int family_param, bool vertex_transitive) {
  if (n < 1) throw InvalidGraph("graph needs at least one vertex");
  Graph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidGraph("edge endpoint out of range");
    if (u == v) throw InvalidGraph("self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw InvalidGraph("duplicate edge");
  }
  check_connected(g.adj_);
  g.m_ = (int)edges.size();
  g.family_ = family;
  g.family_param_ = family_param;
  g.vertex_transitive_ = vertex_transitive;
  if (n <= 64) {
    g.masks_.assign(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v : g.adj_[u]) g.masks_[u] |= 1ULL << v;
  }
  return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n()) throw InvalidParameter("vertex index out of range");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = neighbors(u);
  if (v < 0 || v >= n()) throw InvalidParameter("vertex index out of range");
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;  // already lexicographic: u ascending, adj sorted
}

std::uint64_t Graph::neighbor_mask(int v) const {
  if (masks_.empty()) throw ResourceLimit("neighbor masks need n <= 64");
  if (v < 0 || v >= n()) throw InvalidParameter("vertex index out of range");
  return masks_[v];
}

Graph make_cycle(int n) {
  if (n < 3) throw UnsupportedInput("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, std::move(e), Family::cycle, n, true);
}

Graph make_path(int n) {
  if (n < 1) throw UnsupportedInput("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e), Family::path, n, n <= 2);
}

Graph make_hypercube(int k) {
  if (k < 0) throw UnsupportedInput("hypercube needs k >= 0");
  if (k > 20) throw ResourceLimit("hypercube dimension capped at 20");
  int n = 1 << k;
  std::vector<std::pair<int, int>> e;
  e.reserve((size_t)n * k / 2);
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < k; ++b)
      if (!(u >> b & 1)) e.emplace_back(u, u | (1 << b));
  return Graph::from_edges(n, std::move(e), Family::hypercube, k, true);
}

namespace cf {
int leg_len(int n) { return n / 2 - 1; }
int u(int n, int i) {
  if (i < 1 || i > n) throw InvalidParameter("cuttlefish cycle index");
  return i - 1;
}
int v(int n, int j) {
  if (j < 1 || j > leg_len(n)) throw InvalidParameter("cuttlefish leg index");
  return n - 1 + j;
}
int w(int n, int j) {
  if (j < 1 || j > leg_len(n)) throw InvalidParameter("cuttlefish leg index");
  return n - 1 + leg_len(n) + j;
}
}  // namespace cf

Graph make_cuttlefish(int n) {
  if (n < 5) throw UnsupportedInput("cuttlefish needs n >= 5");
  int legs = cf::leg_len(n);
  int total = n + 2 * legs;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  e.emplace_back(cf::u(n, 1), cf::v(n, 1));
  for (int j = 1; j < legs; ++j) e.emplace_back(cf::v(n, j), cf::v(n, j + 1));
  e.emplace_back(cf::u(n, 2), cf::w(n, 1));
  for (int j = 1; j < legs; ++j) e.emplace_back(cf::w(n, j), cf::w(n, j + 1));
  return Graph::from_edges(total, std::move(e), Family::cuttlefish, n, false);
}

namespace {

// Parses a whole non-negative int from [s, end); returns false on junk.
bool parse_int(const char* s, const char* end, int& out) {
  auto res = std::from_chars(s, end, out);
  return res.ec == std::errc() && res.ptr == end && out >= 0;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;

  auto next_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
      if (required)
        throw ParseError("blank line where data expected", lineno);
    }
    return false;
  };

  auto split2 = [&](int& a, int& b) {
    std::istringstream ls(line);
    std::string ta, tb, rest;
    if (!(ls >> ta >> tb) || (ls >> rest))
      throw ParseError("expected two integers", lineno);
    if (!parse_int(ta.data(), ta.data() + ta.size(), a) ||
        !parse_int(tb.data(), tb.data() + tb.size(), b))
      throw ParseError("expected two integers", lineno);
  };

  if (!next_line(false)) throw ParseError("empty input", 0);
  split2(n, m);
  if (n < 1) throw InvalidGraph("graph needs at least one vertex");
  for (int i = 0; i < m; ++i) {
    if (!next_line(true)) throw ParseError("fewer edge lines than declared", lineno);
    int u, v;
    split2(u, v);
    if (u >= n || v >= n) throw InvalidGraph("edge endpoint out of range");
    if (u == v) throw InvalidGraph("self-loop");
    if (u > v) throw ParseError("edge must be written min-endpoint first", lineno);
    edges.emplace_back(u, v);
  }
  if (next_line(false)) throw ParseError("unexpected extra line", lineno);
  return Graph::from_edges(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  auto es = g.edges();
  std::sort(es.begin(), es.end());
  std::string out = std::to_string(g.n()) + " " + std::to_string((int)es.size()) + "\n";
  for (auto [u, v] : es)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::hypercube: return "hypercube";
    case Family::cuttlefish: return "cuttlefish";
    default: return "custom";
  }
}

Graph graph_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InvalidParameter("graph spec must look like family:n");
  std::string fam = spec.substr(0, colon);
  std::string num = spec.substr(colon + 1);
  int k;
  if (!parse_int(num.data(), num.data() + num.size(), k))
    throw InvalidParameter("bad number in graph spec '" + spec + "'");
  if (fam == "cycle") return make_cycle(k);
  if (fam == "path") return make_path(k);
  if (fam == "hypercube") return make_hypercube(k);
  if (fam == "cuttlefish") return make_cuttlefish(k);
  throw InvalidParameter("unknown graph family '" + fam + "'");
}

}  // namespace edlab
