// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/plane_model.hpp"

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "x0plane/basis_store.hpp"

using namespace x0plane;

namespace {

std::filesystem::path fixture(long n, long k) {
  return std::filesystem::path(X0PLANE_TEST_DATA) / "bases" /
         ("N" + std::to_string(n) + "_k" + std::to_string(k) + ".qexp");
}

PlaneCurveEq eq_from_terms(
    long degree,
    std::initializer_list<std::pair<std::array<int, 3>, long>> terms) {
  PlaneCurveEq eq;
  eq.degree = degree;
  for (const auto& [e, c] : terms) eq.terms.emplace_back(e, Int(c));
  std::sort(eq.terms.begin(), eq.terms.end(), [](const auto& a, const auto& b) {
    return grlex_greater(a.first, b.first);
  });
  return eq;
}

// the degree-3 model of the level-14 valuation-(2,3,4) triple
PlaneCurveEq cubic14() {
  return eq_from_terms(3, {{{0, 3, 0}, 1},
                           {{0, 0, 3}, 3},
                           {{2, 0, 1}, 1},
                           {{1, 2, 0}, -1},
                           {{0, 1, 2}, 1},
                           {{1, 1, 1}, 1}});
}

}  // namespace

TEST_CASE("monomial order") {
  auto mons = monomials_of_degree(2);
  std::vector<Exponent> expect = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                  {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(mons == expect);
  CHECK(grlex_greater({2, 0, 1}, {0, 3, 0}));
  CHECK(grlex_greater({1, 1, 1}, {1, 0, 2}));
}

TEST_CASE("degree upper bound") {
  auto b = load_basis(fixture(14, 4));
  auto inv = invariants(14);

  // valuations (2,3,4): budget 4 + 1 - 1 - 0 - 1 = 3
  auto t1 = select_triple(b, 1, 2, {Int(0), Int(0), Int(0), Int(1)});
  CHECK(degree_upper_bound(inv, 4, t1.f, t1.g, t1.h) == 3);

  // valuations (1,2,3): correction 0, budget 4
  auto t2 = select_triple(b, 0, 1, {Int(0), Int(0), Int(1), Int(0)});
  CHECK(degree_upper_bound(inv, 4, t2.f, t2.g, t2.h) == 4);

  // weight-2 low-valuation construction: budget genus + 1
  auto b63 = load_basis(fixture(63, 2));
  auto i63 = invariants(63);
  auto t3 = select_triple(
      b63, 2, 3, {Int(0), Int(0), Int(0), Int(0), Int(1)});
  CHECK(degree_upper_bound(i63, 2, t3.f, t3.g, t3.h) == i63.genus + 1);
}

TEST_CASE("assemble_system") {
  auto b = load_basis(fixture(48, 2));
  auto inv = invariants(48);
  MonomialCache cache(b.forms[0], b.forms[1], b.forms[2]);

  SUBCASE("degree 1 columns are the three series") {
    long B = sturm_truncation(inv, 2);
    auto m = assemble_system(cache, 1, B);
    CHECK(m.rows == B);
    CHECK(m.cols == 3);
    for (long n = 1; n <= B; ++n) {
      CHECK(Rat(m.at(n - 1, 0)) == b.forms[0].coeff(n));
      CHECK(Rat(m.at(n - 1, 1)) == b.forms[1].coeff(n));
      CHECK(Rat(m.at(n - 1, 2)) == b.forms[2].coeff(n));
    }
  }
  SUBCASE("degree 2 kernel gives the conic") {
    long B = sturm_truncation(inv, 4);
    auto m = assemble_system(cache, 2, B);
    CHECK(m.cols == 6);
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    // monomial order (x0^2, x0x1, x0x2, x1^2, x1x2, x2^2): +-(x0x2 - x1^2)
    std::vector<Int> plus{0, 0, 1, -1, 0, 0}, minus{0, 0, -1, 1, 0, 0};
    CHECK((k[0] == plus || k[0] == minus));
  }
  SUBCASE("insufficient precision is a hard error") {
    MonomialCache tiny(b.forms[0].truncated(5), b.forms[1].truncated(5),
                       b.forms[2].truncated(5));
    CHECK_THROWS_AS(assemble_system(tiny, 2, sturm_truncation(inv, 4)),
                    std::runtime_error);
  }
}

TEST_CASE("equation for the cubic model") {
  auto b = load_basis(fixture(14, 4));
  auto inv = invariants(14);
  auto t = select_triple(b, 1, 2, {Int(0), Int(0), Int(0), Int(1)});
  auto eq = equation(t.f, t.g, t.h, inv, 4);
  CHECK(eq.degree == 3);
  CHECK(eq.same_up_to_sign(cubic14()));
  // normalization: graded-lex greatest monomial (x0^2 x2) positive
  CHECK(*eq.coeff({2, 0, 1}) == 1);
}

TEST_CASE("equation certificate and wrong-sign rejection") {
  auto b = load_basis(fixture(14, 4));
  auto inv = invariants(14);
  auto t = select_triple(b, 1, 2, {Int(0), Int(0), Int(0), Int(1)});
  auto eq = equation(t.f, t.g, t.h, inv, 4);
  long B = sturm_truncation(inv, eq.degree * 4);
  CHECK(evaluate(eq, t.f, t.g, t.h, B).is_zero());

  PlaneCurveEq wrong = eq;
  wrong.terms[1].second = -wrong.terms[1].second;
  CHECK(!evaluate(wrong, t.f, t.g, t.h, B).is_zero());
}

TEST_CASE("equation is independent of extra fixture precision") {
  auto b = load_basis(fixture(14, 4));
  auto inv = invariants(14);
  auto t = select_triple(b, 1, 2, {Int(0), Int(0), Int(0), Int(1)});
  auto eq_full = equation(t.f, t.g, t.h, inv, 4);
  long needed = sturm_truncation(inv, 3 * 4);
  auto eq_trim = equation(t.f.truncated(needed), t.g.truncated(needed),
                          t.h.truncated(needed), inv, 4);
  CHECK(eq_full == eq_trim);
}

TEST_CASE("json round trip and printer") {
  auto eq = cubic14();
  auto j = to_json(eq);
  CHECK(j.at("degree") == 3);
  auto back = eq_from_json(j);
  CHECK(back == eq);
  CHECK(to_string(eq) ==
        "x0^2*x2 - x0*x1^2 + x0*x1*x2 + x1^3 + x1*x2^2 + 3*x2^3");
}

TEST_CASE("golden equation files round trip") {
  auto path = std::filesystem::path(X0PLANE_TEST_DATA) / "equations" /
              "n14_cubic.json";
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  auto eq = eq_from_json(j.at("equation"));
  CHECK(eq == cubic14());
  CHECK(to_json(eq) == j.at("equation"));
}
