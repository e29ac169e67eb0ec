// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "x0plane/numtypes.hpp"

namespace x0plane {

/// Dense univariate integer polynomial; c[i] is the coefficient of X^i.
/// The zero polynomial has an empty coefficient vector.
struct ZPoly {
  std::vector<Int> c;

  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
  static ZPoly constant(Int v) { return ZPoly(std::vector<Int>{std::move(v)}); }

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Int& leading() const { return c.back(); }
  Int coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c.size()))
               ? c[static_cast<size_t>(i)]
               : Int(0);
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const ZPoly&) const = default;
};

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly neg(const ZPoly& a);
/// Exact quotient; throws std::logic_error when b does not divide a in Z[T].
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);
Int evaluate(const ZPoly& a, const Int& x);
Rat evaluate(const ZPoly& a, const Rat& x);

/// L(f) = sum of absolute coefficient values.
Int length(const ZPoly& a);

/// Bivariate integer polynomial P(X, T), stored by X-degree:
/// coeff_x[i] is the polynomial a_i(T) multiplying X^i.
struct BivarPoly {
  std::vector<ZPoly> coeff_x;

  long degree_x() const { return static_cast<long>(coeff_x.size()) - 1; }
  const ZPoly& leading_x() const { return coeff_x.back(); }
  void trim() {
    while (!coeff_x.empty() && coeff_x.back().is_zero()) coeff_x.pop_back();
  }
  /// Specialize T = lambda.
  ZPoly at(const Int& lambda) const;
  bool operator==(const BivarPoly&) const = default;
};

/// Text format: one term per line, "e_X e_T coeff"; '#' starts a comment.
BivarPoly load_bivar(const std::filesystem::path& path);
void save_bivar(const BivarPoly& p, const std::filesystem::path& path);
std::string to_string(const BivarPoly& p);

/// Resultant with respect to X: the Sylvester determinant over Z[T],
/// computed by fraction-free elimination.  Both arguments need positive
/// X-degree.
ZPoly resultant_x(const BivarPoly& p, const BivarPoly& q);

/// Res_X(q, dq/dX) as a polynomial in T.
ZPoly discriminant_x(const BivarPoly& q);

/// Resultant of univariate polynomials (Sylvester determinant over Z).
Int resultant(const ZPoly& a, const ZPoly& b);

}  // namespace x0plane
