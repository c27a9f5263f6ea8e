#include "edlab/predict.hpp"

namespace edlab {

int predict_cycle_fd(int n) {
  if (n < 3) throw InvalidParameter("cycle prediction needs n >= 3");
  if ((n & (n - 1)) == 0) return n;
  int p = 3;
  while (n % p) p += 2;
  return n / p * (p - 1);
}

const std::map<int, int>& hypercube_known_table() {
  static const std::map<int, int> table = {{0, 1}, {1, 2}, {2, 4}, {3, 4}, {4, 8},
                                           {5, 8}, {6, 8}, {7, 8}, {8, 16}, {9, 12}};
  return table;
}

HypercubeBounds hypercube_bounds(int n) { return hypercube_bounds(n, hypercube_known_table()); }

HypercubeBounds hypercube_bounds(int n, const std::map<int, int>& known) {
  if (n < 0) throw InvalidParameter("hypercube dimension must be >= 0");
  HypercubeBounds b;

  b.lower = n + 1;
  b.lower_source = "Cor 2.4";
  if (n >= 5 && n % 4 == 1 && n + 3 > b.lower) {
    b.lower = n + 3;
    b.lower_source = "Lemma 4.5";
  }
  if (n >= 4 && n % 4 == 0 && n + 4 > b.lower) {
    b.lower = n + 4;
    b.lower_source = "Lemma 4.6";
  }
  if (n >= 1 && b.lower % 2) {
    ++b.lower;
    b.lower_source += " + Lemma 4.2";
  }

  auto offer = [&](long long v, const std::string& src) {
    if (b.upper_source.empty() || v < b.upper) {
      b.upper = (int)v;
      b.upper_source = src;
    }
  };
  if (n >= 2) offer(predict_cycle_fd(2 * n), "Lemma 4.3");
  for (int x = n / 2; x < n; ++x) {
    auto it = known.find(x);
    if (it != known.end()) offer(2LL * it->second, "Lemma 4.4");
  }
  for (int k = 1; k < 31; ++k) {
    long long pk = 1LL << k;
    long long x = pk - n;
    if (x >= 1 && x <= 4 && n >= (1 << (k - 1))) offer(pk, "Thm 4.7");
  }
  if (n <= 20) offer(1LL << n, "full vertex set");

  if (b.upper_source.empty() || b.lower > b.upper)
    throw InternalError("hypercube bounds failed to compose");
  return b;
}

int predict_cf(int n, int start, Variant variant) {
  int total = n < 5 ? 0 : n + 2 * cf::leg_len(n);
  if (n >= 5 && (start < 0 || start >= total))
    throw InvalidParameter("cuttlefish start vertex out of range");
  int half = n / 2;
  if (variant == Variant::path) {
    if (n < 10) throw UnsupportedInput("path prediction stated only for n >= 10");
    return n % 2 ? 3 * half : 3 * n / 2 - 1;
  }
  if (n < 5 || (n % 2 == 0 && n < 6))
    throw UnsupportedInput("distance prediction stated only for odd n >= 5, even n >= 6");
  if (n % 2 && start == cf::u(n, (n + 3) / 2)) return 2 * half + 1;
  return 2 * half;
}

}  // namespace edlab
