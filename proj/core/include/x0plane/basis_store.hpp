// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "x0plane/gamma0.hpp"
#include "x0plane/qseries.hpp"

namespace x0plane {

/// Stored q-expansion basis of S_m(Gamma0(N)).
struct BasisSet {
  long level = 0;
  long weight = 0;
  long prec = 0;
  bool echelonized = false;
  std::vector<QSeries> forms;

  long dim() const { return static_cast<long>(forms.size()); }
};

/// Parse a fixture file.
///
/// Format: optional '#' comment lines, a header
///   N <int> weight <int> dim <int> prec <int>
/// and one line per form holding the coefficients of q^1..q^prec as integers
/// or p/q rationals.  The declared dimension is cross-checked against the
/// dimension formula for S_m(Gamma0(N)).
BasisSet load_basis(const std::filesystem::path& path);

/// Serialize in the identical (bit-exact for integer entries) format.
void save_basis(const BasisSet& basis, const std::filesystem::path& path);

/// Integral echelon basis of the same space: the saturation of the row span
/// inside the integer-coefficient series, in Hermite form with strictly
/// increasing valuations and positive leading coefficients.  Throws when the
/// input rows are linearly dependent to working precision.
BasisSet echelonize(const BasisSet& basis);

struct WeierstrassResult {
  bool is_weierstrass = false;
  std::vector<long> valuations;
};

/// Valuation test at the infinite cusp: requires weight 2, genus >= 2 and an
/// echelonized basis; Weierstrass iff the valuation list is not {1,...,g}.
WeierstrassResult weierstrass_at_infinity(const BasisSet& basis);

struct Triple {
  QSeries f, g, h;
};

/// (f_i, f_j, sum_k coeffs[k] f_k); verifies the three are linearly
/// independent to working precision.
Triple select_triple(const BasisSet& basis, long i, long j,
                     const std::vector<Int>& coeffs);

}  // namespace x0plane
