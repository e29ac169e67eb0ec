// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/primitive_bound.hpp"

#include <stdexcept>

namespace x0plane {

long find_lambda(const BivarPoly& p, const BivarPoly& q) {
  if (p.degree_x() < 1 || q.degree_x() < 1)
    throw std::invalid_argument("find_lambda needs positive X-degrees");
  ZPoly disc = discriminant_x(q);
  if (disc.is_zero())
    throw std::invalid_argument(
        "Q is not squarefree in X: discriminant vanishes identically");
  const ZPoly& am = p.leading_x();
  const ZPoly& bn = q.leading_x();
  for (long abs_l = 1;; ++abs_l) {
    for (long lambda : {abs_l, -abs_l}) {
      Int v = evaluate(am, Int(lambda)) * evaluate(bn, Int(lambda)) *
              evaluate(disc, Int(lambda));
      if (v != 0) return lambda;
    }
  }
}

RootBounds root_bounds_exact(const ZPoly& f) {
  const long n = f.degree();
  if (n < 1) throw std::invalid_argument("root bounds need degree >= 1");
  RootBounds out;
  Int len = length(f);
  out.upper = Rat(2 * len);
  if (resultant(f, derivative(f)) == 0)
    throw std::invalid_argument(
        "separation lower bound requires a squarefree polynomial");
  // lower = sqrt(3 / (n^(n+2) L^(2n-2))), rounded down
  Int denom = 1;
  for (long i = 0; i < n + 2; ++i) denom *= n;
  for (long i = 0; i < 2 * n - 2; ++i) denom *= len;
  Rat inside(Int(3), denom);
  inside.canonicalize();
  out.lower = sqrt_lower(inside);
  return out;
}

C0Result c0_bound(const BivarPoly& p, const BivarPoly& q,
                  const RootCloudOptions& opt) {
  C0Result out;
  out.lambda = find_lambda(p, q);
  ZPoly pl = p.at(Int(out.lambda));
  ZPoly ql = q.at(Int(out.lambda));
  if (ql.degree() < 2)
    throw std::invalid_argument("Q(X, lambda) needs at least two roots");
  out.alpha = root_cloud(pl, opt);
  out.beta = root_cloud(ql, opt);
  if (!out.beta.certified)
    throw std::runtime_error(
        "beta root disks overlap after refinement; cannot certify c0");
  if (pl.degree() >= 2 && !out.alpha.certified)
    throw std::runtime_error(
        "alpha root disks overlap after refinement; cannot certify c0");

  if (pl.degree() < 2) {
    out.alpha_max_upper = 0;  // a single root: all differences are zero
  } else {
    out.alpha_max_upper = separations(out.alpha).max_upper;
  }
  auto bsep = separations(out.beta);
  out.beta_min_lower = bsep.min_lower;
  if (out.beta_min_lower <= 0)
    throw std::runtime_error("beta separation lower bound is not positive");
  out.c0_upper = out.alpha_max_upper / out.beta_min_lower;

  // least integer strictly greater than c0
  Int fl = floor_div(Int(out.c0_upper.get_num()), Int(out.c0_upper.get_den()));
  out.threshold = fl + 1;
  return out;
}

MahlerResult mahler_bound(const BivarPoly& p, const BivarPoly& q) {
  MahlerResult out;
  out.lambda = find_lambda(p, q);
  ZPoly pl = p.at(Int(out.lambda));
  ZPoly ql = q.at(Int(out.lambda));
  Rat upper = Rat(2 * length(pl));
  RootBounds qb = root_bounds_exact(ql);
  out.c0_upper = upper / qb.lower;
  Int fl = floor_div(Int(out.c0_upper.get_num()), Int(out.c0_upper.get_den()));
  out.threshold = fl + 1;
  return out;
}

BivarPoly minimal_poly_from_equation(const PlaneCurveEq& eq,
                                     DehomSelector which) {
  if (eq.degree < 2)
    throw std::invalid_argument(
        "a degree-1 equation is not a curve equation of a nonconstant "
        "function");
  BivarPoly out;
  for (const auto& [e, c] : eq.terms) {
    long ex, et;
    if (which == DehomSelector::kThirdOverFirst) {
      ex = e[2];
      et = e[1];
    } else {
      ex = e[1];
      et = e[2];
    }
    if (static_cast<long>(out.coeff_x.size()) <= ex)
      out.coeff_x.resize(static_cast<size_t>(ex + 1));
    ZPoly& a = out.coeff_x[static_cast<size_t>(ex)];
    if (static_cast<long>(a.c.size()) <= et)
      a.c.resize(static_cast<size_t>(et + 1));
    a.c[static_cast<size_t>(et)] += c;
  }
  for (auto& a : out.coeff_x) a.trim();
  out.trim();
  return out;
}

}  // namespace x0plane
