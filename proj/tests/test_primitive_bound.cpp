// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/primitive_bound.hpp"

#include <filesystem>
#include <random>

#include "doctest.h"

using namespace x0plane;

namespace {

std::filesystem::path data_dir() { return X0PLANE_TEST_DATA; }

ZPoly zp(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<Int> v;
  for (long c : coeffs_low_to_high) v.emplace_back(c);
  return ZPoly(std::move(v));
}

// X^e_x T^e_t entries
BivarPoly bv(std::initializer_list<std::array<long, 3>> terms) {
  BivarPoly p;
  for (const auto& [ex, et, c] : terms) {
    if (static_cast<long>(p.coeff_x.size()) <= ex)
      p.coeff_x.resize(static_cast<size_t>(ex + 1));
    auto& a = p.coeff_x[static_cast<size_t>(ex)];
    if (static_cast<long>(a.c.size()) <= et)
      a.c.resize(static_cast<size_t>(et + 1));
    a.c[static_cast<size_t>(et)] += Int(c);
    a.trim();
  }
  p.trim();
  return p;
}

// cofactor-expansion determinant over Z[T], used as an independent oracle
ZPoly det_cofactor(const std::vector<std::vector<ZPoly>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  ZPoly acc;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<ZPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<ZPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    ZPoly term = mul(m[0][j], det_cofactor(minor));
    acc = (j % 2 == 0) ? add(acc, term) : sub(acc, term);
  }
  return acc;
}

ZPoly sylvester_det_oracle(const BivarPoly& p, const BivarPoly& q) {
  long m = p.degree_x(), n = q.degree_x();
  std::vector<std::vector<ZPoly>> syl(
      static_cast<size_t>(m + n),
      std::vector<ZPoly>(static_cast<size_t>(m + n)));
  for (long r = 0; r < n; ++r)
    for (long i = 0; i <= m; ++i)
      syl[static_cast<size_t>(r)][static_cast<size_t>(r + i)] =
          p.coeff_x[static_cast<size_t>(m - i)];
  for (long r = 0; r < m; ++r)
    for (long i = 0; i <= n; ++i)
      syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] =
          q.coeff_x[static_cast<size_t>(n - i)];
  return det_cofactor(syl);
}

const BivarPoly& paper_P() {
  static BivarPoly p = load_bivar(data_dir() / "bivar" / "n14_P.bivar");
  return p;
}
const BivarPoly& paper_Q() {
  static BivarPoly q = load_bivar(data_dir() / "bivar" / "n14_Q.bivar");
  return q;
}

}  // namespace

TEST_CASE("resultant basics") {
  // Res_X(X^2 - T, X - 1) = 1 - T
  auto a = bv({{2, 0, 1}, {0, 1, -1}});
  auto b = bv({{1, 0, 1}, {0, 0, -1}});
  auto r = resultant_x(a, b);
  CHECK(r == zp({1, -1}));

  // common root: Res_X(X^2, X) = 0
  auto r0 = resultant_x(bv({{2, 0, 1}}), bv({{1, 0, 1}}));
  CHECK(r0.is_zero());
}

TEST_CASE("discriminant of the committed cubic is nonzero at 1") {
  auto d = discriminant_x(paper_Q());
  auto oracle = sylvester_det_oracle(paper_Q(), [] {
    BivarPoly dq;
    const auto& q = paper_Q();
    for (long i = 1; i <= q.degree_x(); ++i) {
      ZPoly s = q.coeff_x[static_cast<size_t>(i)];
      for (auto& x : s.c) x *= i;
      dq.coeff_x.push_back(std::move(s));
    }
    dq.trim();
    return dq;
  }());
  CHECK(d == oracle);
  CHECK(evaluate(d, Int(1)) != 0);
}

TEST_CASE("resultant equals cofactor oracle on random pairs") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> deg(1, 3), tdeg(0, 2), coeff(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    BivarPoly p, q;
    do {
      p.coeff_x.clear();
      for (long i = 0; i <= deg(rng); ++i) {
        std::vector<Int> c;
        for (long j = 0; j <= tdeg(rng); ++j) c.emplace_back(coeff(rng));
        p.coeff_x.emplace_back(std::move(c));
      }
      p.trim();
    } while (p.degree_x() < 1);
    do {
      q.coeff_x.clear();
      for (long i = 0; i <= deg(rng); ++i) {
        std::vector<Int> c;
        for (long j = 0; j <= tdeg(rng); ++j) c.emplace_back(coeff(rng));
        q.coeff_x.emplace_back(std::move(c));
      }
      q.trim();
    } while (q.degree_x() < 1);
    CHECK(resultant_x(p, q) == sylvester_det_oracle(p, q));
  }
}

TEST_CASE("find_lambda") {
  SUBCASE("published pair accepts lambda = 1") {
    CHECK(find_lambda(paper_P(), paper_Q()) == 1);
  }
  SUBCASE("simple pair") {
    auto p = bv({{1, 0, 1}});                 // X
    auto q = bv({{2, 0, 1}, {0, 1, -1}});     // X^2 - T
    CHECK(find_lambda(p, q) == 1);
  }
  SUBCASE("skips zeros of the discriminant at 0, 1, -1") {
    // disc_X(X^2 - T(T-1)(T+1)) = -4 T (T-1) (T+1) up to sign
    auto q = bv({{2, 0, 1}, {0, 3, -1}, {0, 1, 1}});
    auto p = bv({{1, 0, 1}});
    CHECK(find_lambda(p, q) == 2);
  }
  SUBCASE("rejects a square") {
    auto q = bv({{2, 0, 1}, {1, 0, -2}, {0, 0, 1}});  // (X-1)^2
    CHECK_THROWS_AS(find_lambda(bv({{1, 0, 1}}), q), std::invalid_argument);
  }
}

TEST_CASE("root bounds") {
  SUBCASE("X^2 - 1") {
    auto b = root_bounds_exact(zp({-1, 0, 1}));
    CHECK(b.upper == Rat(4));
    // exact value sqrt(3)/8 ~ 0.2165; the bound is rounded down
    CHECK(b.lower > Rat(21, 100));
    CHECK(b.lower <= Rat(2165064, 10000000));
    CHECK(b.lower < Rat(2));  // true separation 2 lies inside the sandwich
  }
  SUBCASE("double root rejected") {
    CHECK_THROWS_AS(root_bounds_exact(zp({1, -2, 1})),
                    std::invalid_argument);
  }
}

TEST_CASE("root cloud basics") {
  SUBCASE("X^2 + 1") {
    auto cloud = root_cloud(zp({1, 0, 1}));
    REQUIRE(cloud.roots.size() == 2);
    CHECK(cloud.certified);
    CHECK(cloud.met_target);
    for (const auto& d : cloud.roots) {
      CHECK(abs(d.re) < Rat(1, 1000000000000L));
      CHECK(abs(abs(d.im) - 1) < Rat(1, 1000000000000L));
      CHECK(d.radius <= Rat(1, 10000000000L));
    }
  }
  SUBCASE("published cubic separation") {
    auto cloud = root_cloud(paper_Q().at(Int(1)));
    REQUIRE(cloud.roots.size() == 3);
    REQUIRE(cloud.certified);
    auto sep = separations(cloud);
    CHECK(sep.min_lower > Rat(68692234, 100000000));
  }
  SUBCASE("published quartic separation") {
    auto cloud = root_cloud(paper_P().at(Int(1)));
    REQUIRE(cloud.roots.size() == 4);
    REQUIRE(cloud.certified);
    auto sep = separations(cloud);
    CHECK(sep.max_upper < Rat(454, 100));
  }
}

TEST_CASE("sandwich property on random squarefree polynomials") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<long> deg(2, 6), coeff(-20, 20);
  int done = 0;
  while (done < 200) {
    std::vector<Int> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    ZPoly f(std::move(c));
    if (f.degree() < 2) continue;
    if (resultant(f, derivative(f)) == 0) continue;
    auto bounds = root_bounds_exact(f);
    auto cloud = root_cloud(f);
    if (!cloud.certified) continue;  // happens only for clustered doubles
    auto sep = separations(cloud);
    // lower_exact <= true min separation <= 2 L(f)
    CHECK(bounds.lower <= sep.min_upper);
    CHECK(sep.min_lower <= bounds.upper);
    CHECK(sep.max_lower <= bounds.upper);
    ++done;
  }
}

TEST_CASE("resultant specialization identity") {
  std::mt19937 rng(1618);
  std::uniform_int_distribution<long> deg(1, 3), tdeg(0, 2), coeff(-9, 9),
      pick(-3, 3);
  int done = 0;
  while (done < 100) {
    auto rand_bivar = [&]() {
      BivarPoly p;
      for (long i = 0; i <= deg(rng); ++i) {
        std::vector<Int> c;
        for (long j = 0; j <= tdeg(rng); ++j) c.emplace_back(coeff(rng));
        p.coeff_x.emplace_back(std::move(c));
      }
      p.trim();
      return p;
    };
    BivarPoly p = rand_bivar(), q = rand_bivar();
    if (p.degree_x() < 1 || q.degree_x() < 1) continue;
    long lambda = pick(rng);
    if (evaluate(p.leading_x(), Int(lambda)) == 0 ||
        evaluate(q.leading_x(), Int(lambda)) == 0)
      continue;
    Int specialized = resultant(p.at(Int(lambda)), q.at(Int(lambda)));
    Int evaluated = evaluate(resultant_x(p, q), Int(lambda));
    CHECK(specialized == evaluated);
    ++done;
  }
}

TEST_CASE("c0 bound on the committed pair") {
  auto res = c0_bound(paper_P(), paper_Q());
  CHECK(res.lambda == 1);
  CHECK(res.threshold == 7);
  CHECK(res.c0_upper < Rat(7));
  CHECK(res.alpha_max_upper <= Rat(454, 100));
  CHECK(res.beta_min_lower >= Rat(6869, 10000));
}

TEST_CASE("c0 degenerate numerator") {
  // P with X-degree 1: single root, c0 = 0, threshold 1
  auto p = bv({{1, 0, 1}, {0, 1, -1}});         // X - T
  auto q = bv({{2, 0, 1}, {0, 1, -1}});         // X^2 - T
  auto res = c0_bound(p, q);
  CHECK(res.c0_upper == Rat(0));
  CHECK(res.threshold == 1);
}

TEST_CASE("mahler pipeline on the committed pair") {
  auto res = mahler_bound(paper_P(), paper_Q());
  CHECK(res.lambda == 1);
  CHECK(res.threshold >= 1000);
  // same order of magnitude as the coefficient-based remark (tens of thousands)
  CHECK(res.threshold <= Int(1000000));
}

TEST_CASE("minimal polynomial by dehomogenization") {
  PlaneCurveEq eq;
  eq.degree = 3;
  eq.terms = {{{0, 3, 0}, Int(1)}, {{0, 0, 3}, Int(3)}, {{2, 0, 1}, Int(1)},
              {{1, 2, 0}, Int(-1)}, {{0, 1, 2}, Int(1)}, {{1, 1, 1}, Int(1)}};
  auto q = minimal_poly_from_equation(eq);
  // x0=1, T=x1, X=x2: 3X^3 + TX^2 + (1+T)X + (T^3 - T^2)
  CHECK(q.degree_x() == 3);
  CHECK(q.coeff_x[3] == zp({3}));
  CHECK(q.coeff_x[2] == zp({0, 1}));
  CHECK(q.coeff_x[1] == zp({1, 1}));
  CHECK(q.coeff_x[0] == zp({0, 0, -1, 1}));

  PlaneCurveEq line;
  line.degree = 1;
  line.terms = {{{1, 0, 0}, Int(1)}, {{0, 1, 0}, Int(-1)}};
  CHECK_THROWS_AS(minimal_poly_from_equation(line), std::invalid_argument);
}

TEST_CASE("bivar text format round trip") {
  auto p = paper_P();
  auto tmp = std::filesystem::temp_directory_path() / "x0plane_p.bivar";
  save_bivar(p, tmp);
  CHECK(load_bivar(tmp) == p);
  std::filesystem::remove(tmp);
  CHECK(to_string(paper_Q()) == "-3*X^3 + X^2*T + X*T + X + T^3");
}
