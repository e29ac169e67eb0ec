// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/gamma0.hpp"

#include <numeric>
#include <stdexcept>

namespace x0plane {

namespace {

void require_even_weight(long m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("weight must be an even integer >= 2");
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

// Legendre-type factors with the conventions (-1|2) = 0 and (-3|3) = 0.
long legendre_minus_one(long p) {
  if (p == 2) return 0;
  return p % 4 == 1 ? 1 : -1;
}

long legendre_minus_three(long p) {
  if (p == 3) return 0;
  if (p == 2) return -1;
  return p % 3 == 1 ? 1 : -1;
}

}  // namespace

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Gamma0Invariants invariants(long level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  Gamma0Invariants inv;
  inv.level = level;

  auto primes = prime_factors(level);

  inv.psi = level;
  for (long p : primes) inv.psi = inv.psi / p * (p + 1);

  if (level % 4 == 0) {
    inv.nu2 = 0;
  } else {
    inv.nu2 = 1;
    for (long p : primes) inv.nu2 *= 1 + legendre_minus_one(p);
  }

  if (level % 9 == 0) {
    inv.nu3 = 0;
  } else {
    inv.nu3 = 1;
    for (long p : primes) inv.nu3 *= 1 + legendre_minus_three(p);
  }

  inv.nu_inf = 0;
  for (long d = 1; d * d <= level; ++d) {
    if (level % d != 0) continue;
    inv.nu_inf += euler_phi(std::gcd(d, level / d));
    long e = level / d;
    if (e != d) inv.nu_inf += euler_phi(std::gcd(e, level / e));
  }

  // genus = 1 + psi/12 - nu2/4 - nu3/3 - nu_inf/2, checked to be integral
  long twelve_g = 12 + inv.psi - 3 * inv.nu2 - 4 * inv.nu3 - 6 * inv.nu_inf;
  if (twelve_g % 12 != 0)
    throw std::logic_error("genus formula did not produce an integer");
  inv.genus = twelve_g / 12;
  if (inv.genus < 0) throw std::logic_error("negative genus");
  return inv;
}

long dim_cusp_forms(const Gamma0Invariants& inv, long m) {
  require_even_weight(m);
  if (m == 2) return inv.genus;
  return (m - 1) * (inv.genus - 1) + (m / 2 - 1) * inv.nu_inf +
         (m / 4) * inv.nu2 + (m / 3) * inv.nu3;
}

long dim_modular_forms(const Gamma0Invariants& inv, long m) {
  require_even_weight(m);
  // Gamma0(N) always has at least one cusp
  if (m == 2) return dim_cusp_forms(inv, 2) + inv.nu_inf - 1;
  return dim_cusp_forms(inv, m) + inv.nu_inf;
}

Rat divisor_degree(const Gamma0Invariants& inv, long m) {
  require_even_weight(m);
  Rat r(m * inv.psi, 12);
  r.canonicalize();
  return r;
}

long sturm_truncation(const Gamma0Invariants& inv, long w) {
  require_even_weight(w);
  return (w * inv.psi) / 12 + 1;
}

}  // namespace x0plane
