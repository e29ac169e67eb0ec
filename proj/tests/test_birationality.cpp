// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/birationality.hpp"

#include <filesystem>

#include "doctest.h"

using namespace x0plane;

namespace {

std::filesystem::path fixture(long n, long k) {
  return std::filesystem::path(X0PLANE_TEST_DATA) / "bases" /
         ("N" + std::to_string(n) + "_k" + std::to_string(k) + ".qexp");
}

}  // namespace

TEST_CASE("certify: cubic model of level 14 is birational") {
  auto b = load_basis(fixture(14, 4));
  auto inv = invariants(14);
  auto t = select_triple(b, 1, 2, {Int(0), Int(0), Int(0), Int(1)});
  auto r = certify_birational(t.f, t.g, t.h, inv, 4);
  CHECK(r.deg_curve == 3);
  CHECK(r.budget == 3);
  CHECK(r.d_determined());
  CHECK(r.d_min == 1);
  CHECK(r.correction_certified == 1);
  CHECK(r.correction_exact());
}

TEST_CASE("certify: quartic model of level 14 is birational") {
  auto b = load_basis(fixture(14, 4));
  auto inv = invariants(14);
  auto t = select_triple(b, 0, 1, {Int(0), Int(0), Int(1), Int(0)});
  auto r = certify_birational(t.f, t.g, t.h, inv, 4);
  CHECK(r.deg_curve == 4);
  CHECK(r.budget == 4);
  CHECK(r.d_min == 1);
  CHECK(r.d_max == 1);
  CHECK(r.correction_exact());
}

TEST_CASE("certify: level 48 canonical map has degree 2") {
  auto b = load_basis(fixture(48, 2));
  auto inv = invariants(48);
  auto t = select_triple(b, 0, 1, {Int(0), Int(0), Int(1)});
  auto r = certify_birational(t.f, t.g, t.h, inv, 2);
  CHECK(r.deg_curve == 2);
  CHECK(r.budget == 4);
  CHECK(r.d_determined());
  CHECK(r.d_min == 2);
  CHECK(r.correction_exact());
}

TEST_CASE("primitivity test") {
  auto b = load_basis(fixture(14, 4));
  auto inv = invariants(14);

  SUBCASE("all-ones combination is primitive") {
    auto t = select_triple(b, 0, 1, {Int(0), Int(0), Int(1), Int(1)});
    CHECK(primitivity_test(t.f, t.g, t.h, inv, 4));
  }
  SUBCASE("h = f2 is primitive (the quartic model)") {
    auto t = select_triple(b, 0, 1, {Int(0), Int(0), Int(1), Int(0)});
    CHECK(primitivity_test(t.f, t.g, t.h, inv, 4));
  }
  SUBCASE("valuation-(2,3,4) triple fails: degree 3 below the budget 4") {
    auto t = select_triple(b, 1, 2, {Int(0), Int(0), Int(0), Int(1)});
    CHECK(!primitivity_test(t.f, t.g, t.h, inv, 4));
  }
  SUBCASE("level 48 canonical triple fails") {
    auto b48 = load_basis(fixture(48, 2));
    auto t = select_triple(b48, 0, 1, {Int(0), Int(0), Int(1)});
    CHECK(!primitivity_test(t.f, t.g, t.h, invariants(48), 2));
  }
}

TEST_CASE("trial search at level 14") {
  auto b = load_basis(fixture(14, 4));

  SUBCASE("M = 0 yields nothing") {
    CHECK(trial_search(b, 0).empty());
  }
  SUBCASE("M = 1 contains the all-ones vector") {
    auto hits = trial_search(b, 1);
    bool found = false;
    for (const auto& h : hits) {
      if (h.coeffs == std::vector<long>{1, 1}) {
        found = true;
        CHECK(h.eq.degree == 4);
      }
    }
    CHECK(found);
  }
  SUBCASE("monotone in M") {
    auto h1 = trial_search(b, 1);
    auto h2 = trial_search(b, 2);
    for (const auto& a : h1) {
      bool found = false;
      for (const auto& bb : h2) {
        if (bb.coeffs == a.coeffs && bb.eq == a.eq) found = true;
      }
      CHECK(found);
    }
  }
  SUBCASE("parallel dispatch gives the same list") {
    auto h1 = trial_search(b, 1);
    auto h2 = trial_search(b, 1, 4);
    REQUIRE(h1.size() == h2.size());
    for (size_t i = 0; i < h1.size(); ++i) {
      CHECK(h1[i].coeffs == h2[i].coeffs);
      CHECK(h1[i].eq == h2[i].eq);
    }
  }
  SUBCASE("stable under positive scaling of a basis row") {
    BasisSet scaled = b;
    scaled.forms[2] = scale(scaled.forms[2], Rat(3));
    scaled = echelonize(scaled);
    auto h1 = trial_search(b, 1);
    auto h2 = trial_search(scaled, 1);
    REQUIRE(h1.size() == h2.size());
    for (size_t i = 0; i < h1.size(); ++i) CHECK(h1[i].eq == h2[i].eq);
  }
}

TEST_CASE("low degree triple") {
  SUBCASE("level 63: last three echelon rows") {
    auto b = load_basis(fixture(63, 2));
    auto t = low_degree_triple(b);
    REQUIRE(t.has_value());
    CHECK(t->f.valuation() == 3);
    CHECK(t->g.valuation() == 4);
    CHECK(t->h.valuation() == 5);
  }
  SUBCASE("level 110: valuations 13, 14, 15") {
    auto b = load_basis(fixture(110, 2));
    auto t = low_degree_triple(b);
    REQUIRE(t.has_value());
    CHECK(t->f.valuation() == 13);
    CHECK(t->g.valuation() == 14);
    CHECK(t->h.valuation() == 15);
  }
  SUBCASE("level 48 triple exists and certifies d = 2 downstream") {
    auto b = load_basis(fixture(48, 2));
    auto t = low_degree_triple(b);
    REQUIRE(t.has_value());
    auto r = certify_birational(t->f, t->g, t->h, invariants(48), 2);
    CHECK(r.d_min == 2);
    CHECK(r.d_max == 2);
  }
  SUBCASE("level 168 fails the Weierstrass precondition") {
    auto b = load_basis(fixture(168, 2));
    CHECK(!low_degree_triple(b).has_value());
  }
}

TEST_CASE("hyperelliptic lookup") {
  for (long n : {34, 38, 42, 43, 44, 45, 51, 57, 64, 70, 72, 93, 110, 198})
    CHECK(!is_hyperelliptic(n));
  for (long n : {22, 23, 26, 28, 29, 30, 31, 33, 35, 37, 39, 40, 41, 46, 47,
                 48, 50, 59, 71})
    CHECK(is_hyperelliptic(n));
}

TEST_CASE("ambient separation criterion") {
  CHECK(ambient_separates_points(invariants(14), 4));
  CHECK(ambient_separates_points(invariants(27), 4));
  CHECK(ambient_separates_points(invariants(63), 2));
  CHECK(ambient_separates_points(invariants(110), 2));
  CHECK(!ambient_separates_points(invariants(48), 2));  // hyperelliptic
  CHECK(!ambient_separates_points(invariants(11), 2));  // genus 1
}
