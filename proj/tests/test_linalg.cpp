// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/linalg.hpp"

#include <random>

#include "doctest.h"

using namespace x0plane;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m(static_cast<long>(rows.size()),
           static_cast<long>(rows.begin()->size()));
  long r = 0;
  for (const auto& row : rows) {
    long c = 0;
    for (long v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

// plain rational Gaussian elimination kernel, used as an oracle
std::vector<std::vector<Rat>> rational_kernel(const IntMat& m) {
  RatMat a(m.rows, m.cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) a.at(i, j) = Rat(m.at(i, j));
  auto pivots = rref(a);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Rat>> out;
  for (long f = 0; f < m.cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<Rat> v(static_cast<size_t>(m.cols));
    v[static_cast<size_t>(f)] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<size_t>(pivots[i])] = -a.at(static_cast<long>(i), f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Rat> normalize_dir(std::vector<Rat> v) {
  for (auto& x : v)
    if (x != 0) {
      Rat lead = x;
      for (auto& y : v) y /= lead;
      break;
    }
  return v;
}

}  // namespace

TEST_CASE("kernel of identity is empty") {
  auto m = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(kernel(m).empty());
}

TEST_CASE("kernel of a rank-deficient system") {
  // rows (1,2,3), (2,4,6): kernel is 2-dimensional
  auto m = from_rows({{1, 2, 3}, {2, 4, 6}});
  auto k = kernel(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    Int dot = v[0] + 2 * v[1] + 3 * v[2];
    CHECK(dot == 0);
  }
}

TEST_CASE("kernel vectors are primitive with deterministic signs") {
  auto m = from_rows({{2, 0, 4}});
  auto k = kernel(m);
  REQUIRE(k.size() == 2);
  // free columns 1 and 2
  CHECK(k[0] == std::vector<Int>{0, 1, 0});
  CHECK(k[1] == std::vector<Int>{-2, 0, 1});
}

TEST_CASE("kernel against rational elimination oracle on random matrices") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> dim_r(2, 8), dim_c(2, 9),
      entry(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat m(dim_r(rng), dim_c(rng));
    for (long i = 0; i < m.rows; ++i)
      for (long j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
    auto mine = kernel(m);
    auto oracle = rational_kernel(m);
    REQUIRE(mine.size() == oracle.size());
    // identical spans: in both constructions vector t has 1 at the t-th free
    // column and zeros at the others, so directions must agree pairwise
    for (size_t t = 0; t < mine.size(); ++t) {
      std::vector<Rat> a(mine[t].begin(), mine[t].end());
      CHECK(normalize_dir(a) == normalize_dir(oracle[t]));
    }
    // every kernel vector annihilates every row
    for (const auto& v : mine) {
      for (long i = 0; i < m.rows; ++i) {
        Int dot = 0;
        for (long j = 0; j < m.cols; ++j) dot += m.at(i, j) * v[static_cast<size_t>(j)];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("hnf normalizes pivots and reduces above") {
  std::vector<std::vector<Int>> rows = {{Int(0), Int(2), Int(7)},
                                        {Int(3), Int(5), Int(1)}};
  auto h = hnf_rows(rows);
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] == 3);
  CHECK(h[1][0] == 0);
  CHECK(h[1][1] == 2);
  // entry above the second pivot lies in [0, 2)
  CHECK(h[0][1] >= 0);
  CHECK(h[0][1] < 2);
}

TEST_CASE("saturation recovers the primitive lattice") {
  // rows spanning the same Q-space as {(1,0,1),(0,1,1)} but scaled and mixed
  std::vector<std::vector<Rat>> rows = {
      {Rat(2), Rat(0), Rat(2)},
      {Rat(2), Rat(2), Rat(4)},
  };
  auto h = saturated_hnf(rows);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == std::vector<Int>{1, 0, 1});
  CHECK(h[1] == std::vector<Int>{0, 1, 1});
}

TEST_CASE("saturation handles half-integer structure") {
  // span{(1, 1/2)} over Q: integral points are multiples of (2, 1)
  std::vector<std::vector<Rat>> rows = {{Rat(1), Rat(1, 2)}};
  auto h = saturated_hnf(rows);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == std::vector<Int>{2, 1});
}
