// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <vector>

#include "x0plane/numtypes.hpp"

namespace x0plane {

/// Arithmetic invariants of the congruence subgroup Gamma0(N).
struct Gamma0Invariants {
  long level = 0;   ///< N
  long psi = 0;     ///< index [SL2(Z):Gamma0(N)] = N * prod_{p|N} (1 + 1/p)
  long nu2 = 0;     ///< number of elliptic points of order 2
  long nu3 = 0;     ///< number of elliptic points of order 3
  long nu_inf = 0;  ///< number of inequivalent cusps
  long genus = 0;   ///< genus of X0(N)

  /// eps_m = 1 for m = 2 and 0 for even m >= 4.
  static long eps(long m) { return m == 2 ? 1 : 0; }
};

/// All invariants of Gamma0(N); total on N >= 1.
Gamma0Invariants invariants(long level);

/// dim S_m(Gamma0(N)) for even m >= 2.
long dim_cusp_forms(const Gamma0Invariants& inv, long m);

/// dim M_m(Gamma0(N)) for even m >= 2.
long dim_modular_forms(const Gamma0Invariants& inv, long m);

/// Total divisor degree m*psi/12 of a nonzero weight-m form, as an exact rational.
Rat divisor_degree(const Gamma0Invariants& inv, long m);

/// B = floor(w*psi/12) + 1: a weight-w form whose q-coefficients a_1..a_B all
/// vanish is identically zero.
long sturm_truncation(const Gamma0Invariants& inv, long w);

std::vector<long> prime_factors(long n);

}  // namespace x0plane
