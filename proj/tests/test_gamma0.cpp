// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/gamma0.hpp"

#include <numeric>

#include "doctest.h"

using namespace x0plane;

namespace {

// independent cusp count: enumerate cusps a/c, c | N, a mod gcd(c, N/c),
// which parametrize the Gamma0(N) cusp classes
long cusp_count_oracle(long N) {
  long count = 0;
  for (long c = 1; c <= N; ++c) {
    if (N % c != 0) continue;
    long g = std::gcd(c, N / c);
    // number of residues a mod g with gcd(a, g) = 1
    long phi = 0;
    for (long a = 1; a <= g; ++a)
      if (std::gcd(a, g) == 1) ++phi;
    count += phi;
  }
  return count;
}

// brute-force index: count points of P^1(Z/N)
long psi_oracle(long N) {
  if (N == 1) return 1;
  long count = 0;
  std::vector<char> used(static_cast<size_t>(N * N), 0);
  for (long c = 0; c < N; ++c) {
    for (long d = 0; d < N; ++d) {
      if (std::gcd(std::gcd(c, d), N) != 1) continue;
      if (used[static_cast<size_t>(c * N + d)]) continue;
      ++count;
      for (long u = 1; u < N; ++u) {
        if (std::gcd(u, N) != 1) continue;
        used[static_cast<size_t>((c * u % N) * N + d * u % N)] = 1;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("published invariants") {
  CHECK(invariants(14).genus == 1);
  auto i11 = invariants(11);
  CHECK(i11.nu2 == 0);
  CHECK(i11.nu3 == 0);
  CHECK(i11.genus == 1);
  auto i1 = invariants(1);
  CHECK(i1.psi == 1);
  CHECK(i1.nu_inf == 1);
  CHECK(i1.genus == 0);
  CHECK(invariants(48).genus == 3);
  CHECK(invariants(63).genus == 5);
  CHECK(invariants(93).genus == 9);
  CHECK(invariants(110).genus == 15);
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 97})
    CHECK(invariants(p).nu_inf == 2);
}

TEST_CASE("cusp form dimensions") {
  CHECK(dim_cusp_forms(invariants(14), 4) == 4);
  CHECK(dim_cusp_forms(invariants(11), 4) == 2);
  CHECK(dim_cusp_forms(invariants(11), 6) == 4);
  CHECK(dim_cusp_forms(invariants(48), 2) == 3);
  CHECK(dim_cusp_forms(invariants(20), 4) == 6);
  CHECK(dim_cusp_forms(invariants(21), 4) == 6);
  CHECK(dim_cusp_forms(invariants(27), 4) == 6);
  CHECK(dim_cusp_forms(invariants(18), 4) == 5);
  CHECK(dim_cusp_forms(invariants(23), 4) == 5);
  CHECK(dim_cusp_forms(invariants(25), 4) == 5);
  for (long n : {15, 17, 19})
    CHECK(dim_cusp_forms(invariants(n), 4) == 4);
  CHECK_THROWS_AS(dim_cusp_forms(invariants(14), 3), std::invalid_argument);
  CHECK_THROWS_AS(dim_cusp_forms(invariants(14), 0), std::invalid_argument);
}

TEST_CASE("modular form dimensions") {
  auto i14 = invariants(14);
  CHECK(dim_modular_forms(i14, 4) == 8);  // dim S_4 + nu_inf = 4 + 4
  CHECK(dim_modular_forms(invariants(1), 4) == 1);
  auto i48 = invariants(48);
  CHECK(dim_modular_forms(i48, 2) == 3 + i48.nu_inf - 1);
}

TEST_CASE("divisor degree") {
  CHECK(divisor_degree(invariants(1), 12) == Rat(1));
  CHECK(divisor_degree(invariants(14), 4) == Rat(8));
  CHECK(divisor_degree(invariants(110), 2) == Rat(36));
  auto inv = invariants(34);
  CHECK(divisor_degree(inv, 2) * 12 == Rat(2 * inv.psi));
}

TEST_CASE("sturm truncation") {
  CHECK(sturm_truncation(invariants(14), 16) == 33);
  CHECK(sturm_truncation(invariants(1), 12) == 2);
  auto i48 = invariants(48);
  CHECK(sturm_truncation(i48, 8) == (8 * i48.psi) / 12 + 1);
}

TEST_CASE("genus formula integral and nonnegative up to 500") {
  for (long n = 1; n <= 500; ++n) {
    auto inv = invariants(n);  // throws if 12 does not divide
    CHECK(inv.genus >= 0);
  }
}

TEST_CASE("dimension difference is the cusp count") {
  for (long n : {1, 2, 11, 14, 36, 48, 63, 97, 110, 198}) {
    auto inv = invariants(n);
    for (long m : {4, 6, 8, 12})
      CHECK(dim_modular_forms(inv, m) - dim_cusp_forms(inv, m) == inv.nu_inf);
    CHECK(dim_modular_forms(inv, 2) - dim_cusp_forms(inv, 2) ==
          inv.nu_inf - 1);
  }
}

TEST_CASE("psi and nu_inf against brute-force oracles") {
  for (long n = 1; n <= 120; ++n) {
    auto inv = invariants(n);
    CHECK(inv.nu_inf == cusp_count_oracle(n));
    CHECK(inv.psi == psi_oracle(n));
  }
}

TEST_CASE("multiplicativity over coprime factors") {
  for (long a = 1; a <= 20; ++a) {
    for (long b = 1; b <= 10; ++b) {
      if (std::gcd(a, b) != 1 || a * b > 200) continue;
      auto ia = invariants(a), ib = invariants(b), iab = invariants(a * b);
      CHECK(iab.psi == ia.psi * ib.psi);
      if (a * b % 4 != 0) CHECK(iab.nu2 == ia.nu2 * ib.nu2);
      if (a * b % 9 != 0) CHECK(iab.nu3 == ia.nu3 * ib.nu3);
    }
  }
}
