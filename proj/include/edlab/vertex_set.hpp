#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "edlab/errors.hpp"

namespace edlab {

// Bit-packed vertex subset over a fixed universe {0..n-1} with a cached
// cardinality. All hot loops in the searches run on the raw words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw InvalidParameter("VertexSet universe must be >= 0");
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < (int)s.words_.size(); ++w) s.words_[w] = ~0ULL;
    s.trim();
    s.count_ = universe;
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
  }

  static VertexSet from_vector(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
  }

  int universe() const { return n_; }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

  void insert(int v) {
    check(v);
    std::uint64_t& w = words_[v >> 6];
    std::uint64_t bit = 1ULL << (v & 63);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }

  void erase(int v) {
    check(v);
    std::uint64_t& w = words_[v >> 6];
    std::uint64_t bit = 1ULL << (v & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  void clear() {
    for (auto& w : words_) w = 0;
    count_ = 0;
  }

  // First member >= from, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    std::uint64_t w = words_[wi] >> (from & 63);
    if (w) return from + std::countr_zero(w);
    for (++wi; wi < (int)words_.size(); ++wi)
      if (words_[wi]) return (wi << 6) + std::countr_zero(words_[wi]);
    return -1;
  }

  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool contains_all(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & ~words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    recount();
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    recount();
    return *this;
  }

  VertexSet& subtract(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    recount();
    return *this;
  }

  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Orders sets by their ascending member sequence (standard set-lex order,
  // used for deterministic tie-breaking).
  static int lex_compare(const VertexSet& a, const VertexSet& b) {
    int x = a.next(0), y = b.next(0);
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y ? -1 : 1;
      x = a.next(x + 1);
      y = b.next(y + 1);
    }
    if (x < 0 && y < 0) return 0;
    return x < 0 ? -1 : 1;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>()(n_);
    for (auto w : words_) h = h * 1099511628211ULL + std::hash<std::uint64_t>()(w);
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw InvalidParameter("vertex index out of range");
  }
  void trim() {
    if (n_ % 64 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
  }
  void recount() {
    count_ = 0;
    for (auto w : words_) count_ += std::popcount(w);
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
  int count_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace edlab
