// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <vector>

#include "x0plane/numtypes.hpp"

namespace x0plane {

/// Truncated power series sum_{n=1..prec} c_n q^n with exact rational
/// coefficients.  All series handled here are cuspidal, so there is no
/// constant term; coefficients beyond prec are unknown, not zero.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(long prec) : coeffs_(static_cast<size_t>(prec)) {
    if (prec < 1) throw std::invalid_argument("precision must be >= 1");
  }
  QSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("precision must be >= 1");
  }

  long prec() const { return static_cast<long>(coeffs_.size()); }

  /// Coefficient of q^n, 1 <= n <= prec.
  const Rat& coeff(long n) const {
    check_index(n);
    return coeffs_[static_cast<size_t>(n - 1)];
  }
  void set_coeff(long n, Rat v) {
    check_index(n);
    coeffs_[static_cast<size_t>(n - 1)] = std::move(v);
  }

  /// Smallest n with c_n != 0, or nullopt if all known coefficients vanish.
  std::optional<long> valuation() const;

  bool is_zero() const { return !valuation().has_value(); }

  /// Truncate (or fail when asked to extend) to the given precision.
  QSeries truncated(long prec) const;

  bool operator==(const QSeries&) const = default;

 private:
  void check_index(long n) const {
    if (n < 1 || n > prec()) throw std::out_of_range("coefficient index");
  }
  std::vector<Rat> coeffs_;
};

/// Coefficientwise sum; result precision = min of the operand precisions.
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rat& c);

/// Cauchy product.  The result precision is
/// min(a.prec + val(b), b.prec + val(a)), with val the observed valuation
/// (prec + 1 for a series with no nonzero known coefficient); every reported
/// coefficient is exact.  Since all series start at q^1 this is always at
/// least min(a.prec, b.prec).
QSeries mul(const QSeries& a, const QSeries& b);

/// e-fold product by binary exponentiation; e = 0 is rejected because
/// constants are not representable.
QSeries monomial_pow(const QSeries& s, long e);

}  // namespace x0plane
