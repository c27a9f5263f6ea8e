#include "edlab/closed_sets.hpp"

#include <algorithm>

namespace edlab {

namespace {

void require_members(const VertexSet& u, int n, const char* what) {
  if (u.universe() != n) throw InvalidParameter("vertex set universe mismatch");
  if (u.empty()) throw InvalidParameter(std::string(what) + " needs a non-empty set");
}

}  // namespace

bool is_closed(const DistanceMatrix& d, const VertexSet& u) {
  require_members(u, d.n(), "is_closed");
  auto members = u.to_vector();
  std::vector<char> seen;
  for (int a : members) {
    seen.assign(d.ecc(a) + 1, 0);
    for (int b : members) seen[d.dist(a, b)] = 1;
    for (int dd : d.valid_distances(a))
      if (!seen[dd]) return false;
  }
  return true;
}

bool is_path_closed(const PathLengthTable& t, const VertexSet& u) {
  require_members(u, t.n(), "is_path_closed");
  auto members = u.to_vector();
  for (int a : members) {
    std::uint64_t covered = 0;
    for (int b : members)
      if (a != b) covered |= t.length_mask(a, b);
    if (t.valid_length_mask(a) & ~covered) return false;
  }
  return true;
}

VertexSet closed_core(const DistanceMatrix& d, const VertexSet& s) {
  if (s.universe() != d.n()) throw InvalidParameter("vertex set universe mismatch");
  auto members = s.to_vector();
  int m = (int)members.size();
  std::vector<int> index(d.n(), -1);
  for (int i = 0; i < m; ++i) index[members[i]] = i;

  // counts[i][dist] = how many current members sit at that distance from members[i]
  std::vector<std::vector<int>> counts(m);
  for (int i = 0; i < m; ++i) {
    counts[i].assign(d.ecc(members[i]) + 1, 0);
    for (int j = 0; j < m; ++j)
      if (i != j) ++counts[i][d.dist(members[i], members[j])];
  }

  std::vector<char> alive(m, 1);
  std::vector<int> kill;
  auto fails = [&](int i) {
    for (int dd : d.valid_distances(members[i]))
      if (counts[i][dd] == 0) return true;
    return false;
  };
  for (int i = 0; i < m; ++i)
    if (fails(i)) kill.push_back(i);
  while (!kill.empty()) {
    int x = kill.back();
    kill.pop_back();
    if (!alive[x]) continue;
    alive[x] = 0;
    for (int i = 0; i < m; ++i) {
      if (!alive[i] || i == x) continue;
      int dd = d.dist(members[i], members[x]);
      if (--counts[i][dd] == 0 && dd <= d.ecc(members[i]) && fails(i))
        kill.push_back(i);
    }
  }

  VertexSet out(d.n());
  for (int i = 0; i < m; ++i)
    if (alive[i]) out.insert(members[i]);
  return out;
}

VertexSet path_closed_core(const PathLengthTable& t, const VertexSet& s) {
  if (s.universe() != t.n()) throw InvalidParameter("vertex set universe mismatch");
  VertexSet cur = s;
  bool changed = true;
  while (changed && !cur.empty()) {
    changed = false;
    for (int a = cur.next(0); a >= 0; a = cur.next(a + 1)) {
      std::uint64_t covered = 0;
      for (int b = cur.next(0); b >= 0; b = cur.next(b + 1))
        if (a != b) covered |= t.length_mask(a, b);
      if (t.valid_length_mask(a) & ~covered) {
        cur.erase(a);
        changed = true;
      }
    }
  }
  return cur;
}

int ecc_lower_bound(const DistanceMatrix& d) {
  int n = d.n();
  std::vector<char> far(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.dist(u, v) == d.ecc(u)) far[v] = 1;
  int best = -1;
  for (int v = 0; v < n; ++v)
    if (far[v] && (best < 0 || d.ecc(v) < best)) best = d.ecc(v);
  return best + 1;
}

MoveTable distance_moves(const DistanceMatrix& d) {
  MoveTable mt;
  mt.n = d.n();
  mt.exclusive_calls = true;
  mt.calls.resize(mt.n);
  mt.targets.resize(mt.n);
  mt.max_cover.assign(mt.n, 1);
  for (int u = 0; u < mt.n; ++u) {
    mt.calls[u] = d.valid_distances(u);
    mt.targets[u].reserve(mt.calls[u].size());
    for (int call : mt.calls[u]) {
      VertexSet tv(mt.n);
      for (int v = 0; v < mt.n; ++v)
        if (d.dist(u, v) == call) tv.insert(v);
      mt.targets[u].push_back(std::move(tv));
    }
  }
  return mt;
}

MoveTable path_moves(const PathLengthTable& t) {
  MoveTable mt;
  mt.n = t.n();
  mt.exclusive_calls = false;
  mt.calls.resize(mt.n);
  mt.targets.resize(mt.n);
  mt.max_cover.assign(mt.n, 1);
  for (int u = 0; u < mt.n; ++u) {
    mt.calls[u] = valid_lengths(t, u);
    for (int call : mt.calls[u])
      mt.targets[u].push_back(reachable_at_length(t, u, call));
    int cover = 1;
    for (int v = 0; v < mt.n; ++v)
      if (v != u)
        cover = std::max(cover, std::popcount(t.length_mask(u, v)));
    mt.max_cover[u] = cover;
  }
  return mt;
}

bool is_closed(const MoveTable& mt, const VertexSet& u) {
  require_members(u, mt.n, "is_closed");
  for (int a = u.next(0); a >= 0; a = u.next(a + 1))
    for (const auto& tv : mt.targets[a])
      if (!tv.intersects(u)) return false;
  return true;
}

VertexSet closed_core_in(const MoveTable& mt, const VertexSet& s) {
  if (s.universe() != mt.n) throw InvalidParameter("vertex set universe mismatch");
  VertexSet cur = s;
  bool changed = true;
  while (changed && !cur.empty()) {
    changed = false;
    for (int a = cur.next(0); a >= 0; a = cur.next(a + 1)) {
      for (const auto& tv : mt.targets[a])
        if (!tv.intersects(cur)) {
          cur.erase(a);
          changed = true;
          break;
        }
    }
  }
  return cur;
}

}  // namespace edlab
