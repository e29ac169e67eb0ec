// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <vector>

#include "x0plane/basis_store.hpp"
#include "x0plane/plane_model.hpp"

namespace x0plane {

/// Degree-budget bookkeeping for a triple of same-weight cusp forms.
///
/// The identity  d * deg C + (total correction) = rhs_uncorrected  always
/// holds with the implied total correction; only the infinity part of the
/// correction is certified from q-expansions, so budget = rhs_uncorrected -
/// correction_certified is an upper bound for d * deg C.
struct DegreeBudget {
  long rhs_uncorrected = 0;
  long correction_certified = 0;  ///< min-valuation contribution at infinity
  long budget = 0;                ///< rhs_uncorrected - correction_certified
  long deg_curve = 0;
  long d_min = 1, d_max = 0;  ///< concluded range for the map degree
  PlaneCurveEq eq;

  bool d_determined() const { return d_min == d_max; }
  /// Total correction forced by the identity (only when d is determined).
  long correction_implied() const { return rhs_uncorrected - d_min * deg_curve; }
  /// Whether the certified infinity-part accounts for the whole correction.
  bool correction_exact() const {
    return d_determined() && correction_implied() == correction_certified;
  }
};

/// Compute the plane-model equation and conclude the map degree where the
/// budget arithmetic determines it:
///  (a) deg C equal to the full budget forces d = 1;
///  (b) deg C > budget/2 forces d = 1;
///  (c) deg C <= 2 with genus >= 1 forces d >= 2 (a degree <= 2 image is
///      rational).
DegreeBudget certify_birational(const QSeries& f, const QSeries& g,
                                const QSeries& h, const Gamma0Invariants& inv,
                                long m);
DegreeBudget certify_birational_with_eq(const QSeries& f, const QSeries& g,
                                        const QSeries& h,
                                        const Gamma0Invariants& inv, long m,
                                        PlaneCurveEq eq);

/// Primitivity criterion: deg C equals the full uncorrected budget.
/// Precondition (caller asserted): the ambient space separates points.
bool primitivity_test(const QSeries& f, const QSeries& g, const QSeries& h,
                      const Gamma0Invariants& inv, long m);
bool primitivity_test(const PlaneCurveEq& eq, const Gamma0Invariants& inv,
                      long m);

struct TrialHit {
  std::vector<long> coeffs;  ///< (a_2, ..., a_{s-1})
  PlaneCurveEq eq;
};

/// Exhaustive trial search over h = sum a_i f_i, |a_i| <= M (i >= 2), up to
/// global sign and excluding zero, with f = f_0 and g = f_1.  Returns the
/// passing vectors in lexicographic order.  jobs > 1 fans candidates out over
/// threads; the result order is canonical regardless.
std::vector<TrialHit> trial_search(const BasisSet& basis, long M,
                                   int jobs = 1);

/// Echelon rows with the three largest valuations (g-2, g-1, g), in row
/// order, for weight-2 bases of genus >= 3 levels whose infinite cusp is not
/// a Weierstrass point; nullopt when the Weierstrass test fails.
std::optional<Triple> low_degree_triple(const BasisSet& basis);

/// Ogg's classification, as a guard: true when X0(N) is hyperelliptic.
/// Only meaningful for genus >= 2.
bool is_hyperelliptic(long level);

/// Sufficient separation criterion used before primitivity tests: for m >= 4,
/// dim S_m >= max(genus + 2, 3); for m = 2, genus >= 3 and not hyperelliptic.
bool ambient_separates_points(const Gamma0Invariants& inv, long m);

}  // namespace x0plane
