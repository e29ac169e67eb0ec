// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/qseries.hpp"

#include <random>

#include "doctest.h"

using namespace x0plane;

namespace {

QSeries make(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return QSeries(std::move(v));
}

// reference product, written independently of QSeries::mul: iterates output
// exponents and accumulates in the opposite loop order
QSeries naive_mul(const QSeries& a, const QSeries& b) {
  long va = a.valuation().value_or(a.prec() + 1);
  long vb = b.valuation().value_or(b.prec() + 1);
  long prec = std::min(a.prec() + vb, b.prec() + va);
  QSeries out(prec);
  for (long n = 2; n <= prec; ++n) {
    Rat acc = 0;
    for (long i = 1; i < n; ++i) {
      if (i <= a.prec() && n - i <= b.prec()) {
        acc += a.coeff(i) * b.coeff(n - i);
      } else {
        // contributing term outside known range must be structurally zero
        bool zero = (i < va || n - i < vb);
        REQUIRE(zero);
      }
    }
    out.set_coeff(n, acc);
  }
  return out;
}

QSeries random_series(std::mt19937& rng, long prec) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  QSeries s(prec);
  for (long n = 1; n <= prec; ++n) s.set_coeff(n, Rat(coeff(rng)));
  return s;
}

}  // namespace

TEST_CASE("add") {
  auto a = make({1, 1, 0, 0, 0});  // q + q^2
  auto b = make({-1, 0, 0, 0, 0});
  auto c = add(a, b);
  CHECK(c.coeff(1) == 0);
  CHECK(c.coeff(2) == 1);
  CHECK(c.valuation() == 2);

  auto z = add(a, scale(a, Rat(-1)));
  CHECK(z.is_zero());
  CHECK(z.prec() == a.prec());
}

TEST_CASE("add of the two cubic-level basis tails") {
  // rows 2 and 3 of the weight-4 level-14 basis
  auto f2 = make({0, 0, 1, 0, -1, -2, -1, -4, 6, 10, -6, 4, -3, -2});
  auto f3 = make({0, 0, 0, 1, -2, 0, 1, 1, 0, -4, 4, -2, 2, 2});
  auto s = add(f2, f3);
  CHECK(s.coeff(3) == 1);
  CHECK(s.coeff(4) == 1);
  CHECK(s.coeff(5) == -3);
  CHECK(s.coeff(6) == -2);
  CHECK(s.valuation() == 3);
}

TEST_CASE("mul basics") {
  auto q = make({1});
  auto q2 = mul(q, q);
  CHECK(q2.prec() == 2);
  CHECK(q2.coeff(2) == 1);

  // (q - 2q^5 - 4q^6 - ...)^2 begins q^2 - 4q^6 - ...
  auto f = make({1, 0, 0, 0, -2, -4, -1, 8, -11, -12});
  auto sq = mul(f, f);
  CHECK(sq.coeff(2) == 1);
  CHECK(sq.coeff(6) == -4);
  CHECK(sq.coeff(7) == -8);

  // scalar identity
  auto s = make({3, 1, 4, 1, 5});
  CHECK(scale(s, Rat(1)) == s);
  CHECK(scale(scale(s, Rat(3)), Rat(1, 3)) == s);
  CHECK(scale(s, Rat(0)).is_zero());
}

TEST_CASE("monomial_pow") {
  auto q = make({1, 0, 0});
  auto q3 = monomial_pow(q, 3);
  CHECK(q3.coeff(3) == 1);
  CHECK(q3.valuation() == 3);

  // square of the valuation-2 form begins q^4 - 4q^7 - ...
  auto f = make({0, 1, 0, 0, -2, -2, 1, -6, 0, 12});
  auto f2 = monomial_pow(f, 2);
  CHECK(f2.coeff(4) == 1);
  CHECK(f2.coeff(7) == -4);

  auto s = make({2, -1, 3});
  CHECK(monomial_pow(s, 1) == s);
  CHECK_THROWS_AS(monomial_pow(s, 0), std::invalid_argument);
}

TEST_CASE("valuation") {
  auto f = make({0, 1, 0, -2});  // q^2 - 2 q^4
  CHECK(f.valuation() == 2);
  QSeries z(6);
  CHECK(!z.valuation().has_value());
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_series(rng, 12);
    auto b = random_series(rng, 12);
    auto c = random_series(rng, 12);
    // commutativity, associativity, distributivity on the common precision
    auto ab = mul(a, b);
    CHECK(ab == mul(b, a));
    auto abc1 = mul(mul(a, b), c).truncated(13);
    auto abc2 = mul(a, mul(b, c)).truncated(13);
    CHECK(abc1 == abc2);
    auto lhs = mul(a, add(b, c));
    auto rhs = add(mul(a, b), mul(a, c));
    long pc = std::min(lhs.prec(), rhs.prec());
    CHECK(lhs.truncated(pc) == rhs.truncated(pc));
  }
}

TEST_CASE("valuation additive under multiplication") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_series(rng, 15);
    auto b = random_series(rng, 15);
    auto va = a.valuation(), vb = b.valuation();
    if (!va || !vb) continue;
    auto p = mul(a, b);
    if (*va + *vb <= p.prec()) CHECK(p.valuation() == *va + *vb);
  }
}

TEST_CASE("mul agrees with an independent reference product") {
  std::mt19937 rng(2025);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_series(rng, 14);
    auto b = random_series(rng, 10);
    CHECK(mul(a, b) == naive_mul(a, b));
  }
}
