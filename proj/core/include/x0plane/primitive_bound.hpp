// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "x0plane/plane_model.hpp"
#include "x0plane/root_cloud.hpp"
#include "x0plane/zpoly.hpp"

namespace x0plane {

/// Smallest |lambda| (ties to the positive one) such that both leading
/// X-coefficients and disc_X(Q) are nonzero at T = lambda.  Throws when
/// disc_X(Q) vanishes identically (Q not X-squarefree).
long find_lambda(const BivarPoly& p, const BivarPoly& q);

struct RootBounds {
  Rat upper;  ///< 2 L(f): every pairwise root distance is below this
  Rat lower;  ///< sqrt(3) n^{-(n+2)/2} L(f)^{-(n-1)}, rounded down; requires squarefree
};

/// Exact pairwise-root-distance bounds from coefficient size alone.
RootBounds root_bounds_exact(const ZPoly& f);

/// Certified c0 data from root clouds of P(X,lambda), Q(X,lambda).
struct C0Result {
  long lambda = 0;
  Rat c0_upper;           ///< certified bound for max|a_i - a_j| / min|b_j1 - b_j|
  Int threshold;          ///< least integer strictly greater than c0_upper
  RootCloud alpha, beta;  ///< clouds of P(X,lambda) and Q(X,lambda)
  Rat alpha_max_upper;    ///< certified upper bound for max alpha separation
  Rat beta_min_lower;     ///< certified lower bound for min beta separation
};

C0Result c0_bound(const BivarPoly& p, const BivarPoly& q,
                  const RootCloudOptions& opt = {});

/// Coefficient-only pipeline at the same lambda: numerator 2 L(P(X,lambda)),
/// denominator the exact root-separation lower bound of Q(X,lambda).
struct MahlerResult {
  long lambda = 0;
  Rat c0_upper;
  Int threshold;
};

MahlerResult mahler_bound(const BivarPoly& p, const BivarPoly& q);

enum class DehomSelector {
  kThirdOverFirst,   ///< X = x2/x0, T = x1/x0
  kSecondOverFirst,  ///< X = x1/x0, T = x2/x0
};

/// Dehomogenize a reduced plane-model equation at x0 = 1 into the bivariate
/// minimal polynomial of the selected coordinate over C of the other ratio.
/// Degree-1 input is rejected.
BivarPoly minimal_poly_from_equation(const PlaneCurveEq& eq,
                                     DehomSelector which =
                                         DehomSelector::kThirdOverFirst);

}  // namespace x0plane
