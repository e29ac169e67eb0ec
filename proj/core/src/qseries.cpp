// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace x0plane {

std::optional<long> QSeries::valuation() const {
  for (long n = 1; n <= prec(); ++n) {
    if (coeff(n) != 0) return n;
  }
  return std::nullopt;
}

QSeries QSeries::truncated(long prec) const {
  if (prec < 1 || prec > this->prec())
    throw std::invalid_argument("cannot extend a truncated series");
  QSeries out(prec);
  for (long n = 1; n <= prec; ++n) out.set_coeff(n, coeff(n));
  return out;
}

QSeries add(const QSeries& a, const QSeries& b) {
  long prec = std::min(a.prec(), b.prec());
  QSeries out(prec);
  for (long n = 1; n <= prec; ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
  return out;
}

QSeries sub(const QSeries& a, const QSeries& b) {
  long prec = std::min(a.prec(), b.prec());
  QSeries out(prec);
  for (long n = 1; n <= prec; ++n) out.set_coeff(n, a.coeff(n) - b.coeff(n));
  return out;
}

QSeries scale(const QSeries& a, const Rat& c) {
  QSeries out(a.prec());
  if (c == 0) return out;
  for (long n = 1; n <= a.prec(); ++n) out.set_coeff(n, c * a.coeff(n));
  return out;
}

QSeries mul(const QSeries& a, const QSeries& b) {
  long va = a.valuation().value_or(a.prec() + 1);
  long vb = b.valuation().value_or(b.prec() + 1);
  long prec = std::min(a.prec() + vb, b.prec() + va);
  QSeries out(prec);
  // c_n = sum_{i+j=n} a_i b_j, i >= va, j >= vb
  for (long i = va; i <= std::min(a.prec(), prec - vb); ++i) {
    const Rat& ai = a.coeff(i);
    if (ai == 0) continue;
    long jmax = std::min(b.prec(), prec - i);
    for (long j = vb; j <= jmax; ++j) {
      const Rat& bj = b.coeff(j);
      if (bj == 0) continue;
      out.set_coeff(i + j, out.coeff(i + j) + ai * bj);
    }
  }
  return out;
}

QSeries monomial_pow(const QSeries& s, long e) {
  if (e < 1)
    throw std::invalid_argument(
        "monomial_pow: exponent 0 would be a constant, which QSeries cannot "
        "represent");
  QSeries result = s;
  QSeries base = s;
  --e;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace x0plane
