// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "x0plane/gamma0.hpp"
#include "x0plane/linalg.hpp"
#include "x0plane/qseries.hpp"

#include "json.hpp"

namespace x0plane {

using Exponent = std::array<int, 3>;  // (e0, e1, e2), exponents of x0, x1, x2

/// true when a > b in graded lex order with x0 > x1 > x2 (total degrees equal
/// compare lexicographically; otherwise higher total degree wins).
bool grlex_greater(const Exponent& a, const Exponent& b);

/// All exponent triples of total degree l, in descending graded-lex order.
std::vector<Exponent> monomials_of_degree(long l);

/// Reduced homogeneous integer equation of a plane curve.
///
/// Normalization: the coefficient vector is primitive and the coefficient of
/// the graded-lex greatest monomial present is positive.  Terms are stored in
/// descending graded-lex order.
struct PlaneCurveEq {
  long degree = 0;
  std::vector<std::pair<Exponent, Int>> terms;

  const Int* coeff(const Exponent& e) const;
  bool operator==(const PlaneCurveEq&) const = default;

  /// Equal as projective equations, i.e. up to one global sign.
  bool same_up_to_sign(const PlaneCurveEq& other) const;
};

nlohmann::json to_json(const PlaneCurveEq& eq);
PlaneCurveEq eq_from_json(const nlohmann::json& j);
std::string to_string(const PlaneCurveEq& eq);

/// Shared cache of the product series f^a g^b h^c.
class MonomialCache {
 public:
  MonomialCache(QSeries f, QSeries g, QSeries h);
  const QSeries& get(int a, int b, int c);
  const QSeries& f() const { return get_existing({1, 0, 0}); }

 private:
  const QSeries& get_existing(const Exponent& e) const;
  std::map<Exponent, QSeries> cache_;
};

/// Right-hand side of the degree-budget identity with the correction term
/// certified from q-valuations at the infinite cusp only:
///   cuspidal branch:  dim S_m + g - 1 - eps_m - (min val - 1)
///   general branch:   dim M_m + g - 1 - min val... (val = order at the cusp)
long degree_upper_bound(const Gamma0Invariants& inv, long m, const QSeries& f,
                        const QSeries& g, const QSeries& h,
                        bool cuspidal = true);

/// Uncorrected branch budget dim S_m + g - 1 - eps_m (or dim M_m + g - 1).
long degree_budget_uncorrected(const Gamma0Invariants& inv, long m,
                               bool cuspidal = true);

/// Certified infinity-part of the correction term.
long correction_at_infinity(long m, const QSeries& f, const QSeries& g,
                            const QSeries& h, bool cuspidal = true);

/// One row per q-coefficient n = 1..B, one column per degree-l monomial in
/// descending graded-lex order; entry (n, alpha) is the n-th coefficient of
/// f^a g^b h^c.  Rows with rational fixture entries are scaled integral.
IntMat assemble_system(MonomialCache& cache, long l, long B);

/// Scans l = 1, 2, ... for the smallest degree with a nonzero kernel of the
/// full truncated system at B = sturm_truncation(N, l*m); certifies that the
/// kernel there is one-dimensional and returns the normalized equation.
PlaneCurveEq equation(const QSeries& f, const QSeries& g, const QSeries& h,
                      const Gamma0Invariants& inv, long m);
PlaneCurveEq equation(MonomialCache& cache, const Gamma0Invariants& inv, long m);

/// sum_alpha a_alpha f^a g^b h^c to precision B (post-hoc zero certificate).
QSeries evaluate(const PlaneCurveEq& eq, const QSeries& f, const QSeries& g,
                 const QSeries& h, long B);
QSeries evaluate(const PlaneCurveEq& eq, MonomialCache& cache, long B);

}  // namespace x0plane
