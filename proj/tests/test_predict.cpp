#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edlab/graph.hpp"
#include "edlab/predict.hpp"

using namespace edlab;

TEST_CASE("cycle formula") {
  // n for powers of two, n(p-1)/p otherwise
  CHECK(predict_cycle_fd(3) == 2);
  CHECK(predict_cycle_fd(4) == 4);
  CHECK(predict_cycle_fd(5) == 4);
  CHECK(predict_cycle_fd(6) == 4);
  CHECK(predict_cycle_fd(7) == 6);
  CHECK(predict_cycle_fd(8) == 8);
  CHECK(predict_cycle_fd(9) == 6);
  CHECK(predict_cycle_fd(10) == 8);
  CHECK(predict_cycle_fd(12) == 8);
  CHECK(predict_cycle_fd(15) == 10);
  CHECK(predict_cycle_fd(16) == 16);
  CHECK(predict_cycle_fd(24) == 16);
  CHECK(predict_cycle_fd(35) == 28);
  CHECK(predict_cycle_fd(45) == 30);
  CHECK(predict_cycle_fd(1 << 20) == (1 << 20));
  CHECK(predict_cycle_fd(3 * 1024) == 2048);
  CHECK_THROWS_AS(predict_cycle_fd(2), InvalidParameter);
}

TEST_CASE("known hypercube values") {
  const auto& k = hypercube_known_table();
  REQUIRE(k.size() == 10);
  CHECK(k.at(0) == 1);
  CHECK(k.at(1) == 2);
  CHECK(k.at(2) == 4);
  CHECK(k.at(3) == 4);
  CHECK(k.at(4) == 8);
  CHECK(k.at(5) == 8);
  CHECK(k.at(6) == 8);
  CHECK(k.at(7) == 8);
  CHECK(k.at(8) == 16);
  CHECK(k.at(9) == 12);
}

TEST_CASE("hypercube bounds compose") {
  struct Row {
    int n, lo, hi;
    const char *lo_src, *hi_src;
  };
  // frozen against the citation-tagged table
  const Row rows[] = {
      {0, 1, 1, "Cor 2.4", "full vertex set"},
      {1, 2, 2, "Cor 2.4", "Lemma 4.4"},
      {2, 4, 4, "Cor 2.4 + Lemma 4.2", "Lemma 4.3"},
      {3, 4, 4, "Cor 2.4", "Lemma 4.3"},
      {4, 8, 8, "Lemma 4.6", "Lemma 4.3"},
      {5, 8, 8, "Lemma 4.5", "Lemma 4.3"},
      {6, 8, 8, "Cor 2.4 + Lemma 4.2", "Lemma 4.3"},
      {7, 8, 8, "Cor 2.4", "Lemma 4.4"},
      {8, 12, 16, "Lemma 4.6", "Lemma 4.3"},
      {9, 12, 12, "Lemma 4.5", "Lemma 4.3"},
      {10, 12, 16, "Cor 2.4 + Lemma 4.2", "Lemma 4.3"},
      {11, 12, 16, "Cor 2.4", "Lemma 4.4"},
      {12, 16, 16, "Lemma 4.6", "Lemma 4.3"},
  };
  for (const Row& r : rows) {
    HypercubeBounds b = hypercube_bounds(r.n);
    CAPTURE(r.n);
    CHECK(b.lower == r.lo);
    CHECK(b.upper == r.hi);
    CHECK(b.lower_source == r.lo_src);
    CHECK(b.upper_source == r.hi_src);
  }
  CHECK_THROWS_AS(hypercube_bounds(-1), InvalidParameter);
}

TEST_CASE("bounds bracket the known values") {
  const auto& known = hypercube_known_table();
  for (const auto& [n, v] : known) {
    HypercubeBounds b = hypercube_bounds(n);
    CHECK(b.lower <= v);
    CHECK(v <= b.upper);
  }
  // and stay ordered well past the known range
  for (int n = 0; n <= 30; ++n) {
    HypercubeBounds b = hypercube_bounds(n);
    CHECK(b.lower <= b.upper);
    CHECK(b.lower >= n + 1);  // eccentricity floor
  }
}

TEST_CASE("even dimensions get even bounds") {
  for (int n = 2; n <= 30; n += 2) {
    HypercubeBounds b = hypercube_bounds(n);
    CHECK(b.lower % 2 == 0);
    CHECK(b.upper % 2 == 0);
  }
}

TEST_CASE("cuttlefish predictions") {
  // base value 2*floor(n/2); odd n pays one extra from u_{(n+3)/2}
  CHECK(predict_cf(7, 0, Variant::distance) == 6);
  CHECK(predict_cf(7, cf::u(7, 5), Variant::distance) == 7);
  CHECK(predict_cf(11, cf::u(11, 7), Variant::distance) == 11);
  CHECK(predict_cf(11, cf::u(11, 6), Variant::distance) == 10);
  CHECK(predict_cf(12, 0, Variant::distance) == 12);
  CHECK(predict_cf(12, cf::v(12, 3), Variant::distance) == 12);
  CHECK(predict_cf(5, 0, Variant::distance) == 4);
  CHECK(predict_cf(6, 0, Variant::distance) == 6);
  // path values 3*floor(n/2) odd, 3n/2 - 1 even, start-independent
  CHECK(predict_cf(10, 0, Variant::path) == 14);
  CHECK(predict_cf(10, cf::w(10, 4), Variant::path) == 14);
  CHECK(predict_cf(11, 0, Variant::path) == 15);
  CHECK(predict_cf(13, 5, Variant::path) == 18);
  CHECK(predict_cf(14, 5, Variant::path) == 20);
  // stated ranges are enforced
  CHECK_THROWS_AS(predict_cf(9, 0, Variant::path), UnsupportedInput);
  CHECK_THROWS_AS(predict_cf(4, 0, Variant::distance), UnsupportedInput);
  CHECK_THROWS_AS(predict_cf(10, 18, Variant::path), InvalidParameter);
  CHECK_THROWS_AS(predict_cf(10, -1, Variant::distance), InvalidParameter);
}
