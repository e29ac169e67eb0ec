// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <vector>

#include "x0plane/numtypes.hpp"

namespace x0plane {

/// Dense integer matrix, row major.
struct IntMat {
  long rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}

  Int& at(long r, long c) { return a[static_cast<size_t>(r * cols + c)]; }
  const Int& at(long r, long c) const {
    return a[static_cast<size_t>(r * cols + c)];
  }
};

/// Result of fraction-free (Bareiss) row reduction.
struct Echelon {
  IntMat mat;                    ///< reduced matrix ("minor" entries)
  std::vector<long> pivot_cols;  ///< ascending
  long rank = 0;
};

/// Fraction-free Gaussian elimination with single-step Bareiss divisions.
/// Pivot choice: in each column, the unprocessed row with the smallest
/// nonzero absolute value (ties to the lowest row index).
Echelon bareiss_echelon(IntMat m);

/// Basis of the rational nullspace, one primitive integer vector per free
/// column in ascending free-column order; the entry at the defining free
/// column is positive.
std::vector<std::vector<Int>> kernel(const IntMat& m);

/// Same, reusing an already-computed echelon form.
std::vector<std::vector<Int>> kernel_from_echelon(const Echelon& ech, long cols);

/// Rank of the matrix (via bareiss_echelon).
long rank(IntMat m);

/// Dense rational matrix, row major.
struct RatMat {
  long rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}

  Rat& at(long r, long c) { return a[static_cast<size_t>(r * cols + c)]; }
  const Rat& at(long r, long c) const {
    return a[static_cast<size_t>(r * cols + c)];
  }
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<long> rref(RatMat& m);

/// Row Hermite normal form of an integer row lattice: zero rows dropped,
/// pivots positive, entries above each pivot reduced into [0, pivot).
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows);

/// Basis, in Hermite form, of the saturation  span_Q(rows) ∩ Z^n  of the
/// lattice spanned by the given rational rows.
std::vector<std::vector<Int>> saturated_hnf(const std::vector<std::vector<Rat>>& rows);

}  // namespace x0plane
