// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/birationality.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace x0plane {

DegreeBudget certify_birational_with_eq(const QSeries& f, const QSeries& g,
                                        const QSeries& h,
                                        const Gamma0Invariants& inv, long m,
                                        PlaneCurveEq eq) {
  DegreeBudget out;
  out.rhs_uncorrected = degree_budget_uncorrected(inv, m);
  out.correction_certified = correction_at_infinity(m, f, g, h);
  out.budget = out.rhs_uncorrected - out.correction_certified;
  out.deg_curve = eq.degree;
  out.eq = std::move(eq);
  if (out.deg_curve > out.budget)
    throw std::runtime_error(
        "curve degree exceeds the certified budget; fixture or precision bug");

  long dmax = out.budget / out.deg_curve;
  long dmin = 1;
  if (out.deg_curve <= 2 && inv.genus >= 1) {
    // a line or irreducible conic is rational, so the map cannot be birational
    dmin = 2;
  }
  if (out.deg_curve == out.budget || 2 * out.deg_curve > out.budget) {
    dmax = std::min(dmax, 1L);
  }
  if (dmin > dmax)
    throw std::runtime_error("inconsistent degree bounds; fixture bug");
  out.d_min = dmin;
  out.d_max = dmax;
  return out;
}

DegreeBudget certify_birational(const QSeries& f, const QSeries& g,
                                const QSeries& h, const Gamma0Invariants& inv,
                                long m) {
  return certify_birational_with_eq(f, g, h, inv, m, equation(f, g, h, inv, m));
}

bool primitivity_test(const PlaneCurveEq& eq, const Gamma0Invariants& inv,
                      long m) {
  return eq.degree == degree_budget_uncorrected(inv, m);
}

bool primitivity_test(const QSeries& f, const QSeries& g, const QSeries& h,
                      const Gamma0Invariants& inv, long m) {
  return primitivity_test(equation(f, g, h, inv, m), inv, m);
}

namespace {

std::vector<std::vector<long>> trial_vectors(long s, long M) {
  // all nonzero (a_2..a_{s-1}) with |a_i| <= M, up to global sign (first
  // nonzero entry positive), in lexicographic order
  std::vector<std::vector<long>> out;
  if (M < 1 || s < 3) return out;
  std::vector<long> v(static_cast<size_t>(s - 2), -M);
  while (true) {
    long first_nz = -1;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        first_nz = static_cast<long>(i);
        break;
      }
    }
    if (first_nz >= 0 && v[static_cast<size_t>(first_nz)] > 0) out.push_back(v);
    long i = static_cast<long>(v.size()) - 1;
    while (i >= 0 && v[static_cast<size_t>(i)] == M) {
      v[static_cast<size_t>(i)] = -M;
      --i;
    }
    if (i < 0) break;
    ++v[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TrialHit> trial_search(const BasisSet& basis, long M, int jobs) {
  if (!basis.echelonized)
    throw std::invalid_argument("trial_search requires an echelonized basis");
  if (basis.dim() < 3)
    throw std::invalid_argument("trial_search needs dimension >= 3");
  auto inv = invariants(basis.level);
  auto candidates = trial_vectors(basis.dim(), M);
  const QSeries& f = basis.forms[0];
  const QSeries& g = basis.forms[1];

  std::vector<std::optional<TrialHit>> results(candidates.size());
  auto run = [&](size_t begin, size_t end) {
    for (size_t idx = begin; idx < end; ++idx) {
      const auto& vec = candidates[idx];
      QSeries h(basis.prec);
      for (size_t i = 0; i < vec.size(); ++i) {
        if (vec[i] == 0) continue;
        h = add(h, scale(basis.forms[i + 2], Rat(static_cast<long>(vec[i]))));
      }
      if (h.is_zero()) continue;
      auto eq = equation(f, g, h, inv, basis.weight);
      if (primitivity_test(eq, inv, basis.weight)) {
        results[idx] = TrialHit{vec, std::move(eq)};
      }
    }
  };

  if (jobs <= 1 || candidates.size() < 2) {
    run(0, candidates.size());
  } else {
    size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs),
                                       candidates.size());
    std::vector<std::thread> pool;
    size_t chunk = (candidates.size() + nthreads - 1) / nthreads;
    for (size_t t = 0; t < nthreads; ++t) {
      size_t b = t * chunk;
      size_t e = std::min(candidates.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back(run, b, e);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<TrialHit> out;
  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

std::optional<Triple> low_degree_triple(const BasisSet& basis) {
  auto inv = invariants(basis.level);
  if (basis.weight != 2 || inv.genus < 3)
    throw std::invalid_argument(
        "low_degree_triple requires weight 2 and genus >= 3");
  auto w = weierstrass_at_infinity(basis);
  if (w.is_weierstrass) return std::nullopt;
  long s = basis.dim();
  return Triple{basis.forms[static_cast<size_t>(s - 3)],
                basis.forms[static_cast<size_t>(s - 2)],
                basis.forms[static_cast<size_t>(s - 1)]};
}

bool is_hyperelliptic(long level) {
  long g = invariants(level).genus;
  if (g < 2) return false;
  if (level >= 72) return false;
  static const long non_hyper[] = {34, 38, 42, 43, 44, 45, 51, 52, 53, 54,
                                   55, 56, 57, 58, 60, 61, 62, 63, 64, 65,
                                   66, 67, 68, 69, 70};
  for (long n : non_hyper)
    if (n == level) return false;
  return true;
}

bool ambient_separates_points(const Gamma0Invariants& inv, long m) {
  if (m >= 4) {
    long s = dim_cusp_forms(inv, m);
    return s >= std::max(inv.genus + 2, 3L);
  }
  return inv.genus >= 3 && !is_hyperelliptic(inv.level);
}

}  // namespace x0plane
