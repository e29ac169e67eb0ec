// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/plane_model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace x0plane {

bool grlex_greater(const Exponent& a, const Exponent& b) {
  int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
  if (da != db) return da > db;
  if (a[0] != b[0]) return a[0] > b[0];
  if (a[1] != b[1]) return a[1] > b[1];
  return a[2] > b[2];
}

std::vector<Exponent> monomials_of_degree(long l) {
  std::vector<Exponent> out;
  for (int a = static_cast<int>(l); a >= 0; --a)
    for (int b = static_cast<int>(l) - a; b >= 0; --b)
      out.push_back({a, b, static_cast<int>(l) - a - b});
  return out;
}

const Int* PlaneCurveEq::coeff(const Exponent& e) const {
  for (const auto& [ee, c] : terms)
    if (ee == e) return &c;
  return nullptr;
}

bool PlaneCurveEq::same_up_to_sign(const PlaneCurveEq& other) const {
  if (degree != other.degree || terms.size() != other.terms.size())
    return false;
  if (*this == other) return true;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].first != other.terms[i].first ||
        terms[i].second != -other.terms[i].second)
      return false;
  }
  return true;
}

nlohmann::json to_json(const PlaneCurveEq& eq) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : eq.terms) {
    terms.push_back({{"e", {e[0], e[1], e[2]}}, {"c", c.get_str()}});
  }
  return {{"degree", eq.degree}, {"terms", terms}};
}

PlaneCurveEq eq_from_json(const nlohmann::json& j) {
  PlaneCurveEq eq;
  eq.degree = j.at("degree").get<long>();
  for (const auto& t : j.at("terms")) {
    Exponent e{t.at("e").at(0).get<int>(), t.at("e").at(1).get<int>(),
               t.at("e").at(2).get<int>()};
    eq.terms.emplace_back(e, Int(t.at("c").get<std::string>()));
  }
  std::sort(eq.terms.begin(), eq.terms.end(),
            [](const auto& a, const auto& b) {
              return grlex_greater(a.first, b.first);
            });
  return eq;
}

std::string to_string(const PlaneCurveEq& eq) {
  if (eq.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : eq.terms) {
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = e[0] + e[1] + e[2] > 0;
    if (a != 1 || !has_vars) {
      os << a.get_str();
      if (has_vars) os << "*";
    }
    bool star = false;
    for (int v = 0; v < 3; ++v) {
      if (e[static_cast<size_t>(v)] == 0) continue;
      if (star) os << "*";
      os << "x" << v;
      if (e[static_cast<size_t>(v)] > 1) os << "^" << e[static_cast<size_t>(v)];
      star = true;
    }
  }
  return os.str();
}

MonomialCache::MonomialCache(QSeries f, QSeries g, QSeries h) {
  cache_.emplace(Exponent{1, 0, 0}, std::move(f));
  cache_.emplace(Exponent{0, 1, 0}, std::move(g));
  cache_.emplace(Exponent{0, 0, 1}, std::move(h));
}

const QSeries& MonomialCache::get_existing(const Exponent& e) const {
  return cache_.at(e);
}

const QSeries& MonomialCache::get(int a, int b, int c) {
  Exponent e{a, b, c};
  auto it = cache_.find(e);
  if (it != cache_.end()) return it->second;
  if (a + b + c < 1) throw std::invalid_argument("empty monomial");
  Exponent prev = e;
  Exponent unit{0, 0, 0};
  if (a > 0) {
    prev[0]--;
    unit = {1, 0, 0};
  } else if (b > 0) {
    prev[1]--;
    unit = {0, 1, 0};
  } else {
    prev[2]--;
    unit = {0, 0, 1};
  }
  const QSeries& p = get(prev[0], prev[1], prev[2]);
  const QSeries& u = get_existing(unit);
  auto [it2, ok] = cache_.emplace(e, mul(p, u));
  return it2->second;
}

long degree_budget_uncorrected(const Gamma0Invariants& inv, long m,
                               bool cuspidal) {
  if (cuspidal)
    return dim_cusp_forms(inv, m) + inv.genus - 1 - Gamma0Invariants::eps(m);
  return dim_modular_forms(inv, m) + inv.genus - 1;
}

long correction_at_infinity(long m, const QSeries& f, const QSeries& g,
                            const QSeries& h, bool cuspidal) {
  (void)m;
  auto vf = f.valuation(), vg = g.valuation(), vh = h.valuation();
  if (!vf || !vg || !vh)
    throw std::invalid_argument("zero series has no divisor");
  long minval = std::min({*vf, *vg, *vh});
  return cuspidal ? minval - 1 : minval;
}

long degree_upper_bound(const Gamma0Invariants& inv, long m, const QSeries& f,
                        const QSeries& g, const QSeries& h, bool cuspidal) {
  return degree_budget_uncorrected(inv, m, cuspidal) -
         correction_at_infinity(m, f, g, h, cuspidal);
}

IntMat assemble_system(MonomialCache& cache, long l, long B) {
  auto mons = monomials_of_degree(l);
  const long cols = static_cast<long>(mons.size());
  // hard error on insufficient precision: every product must reach B
  for (const auto& e : mons) {
    const QSeries& s = cache.get(e[0], e[1], e[2]);
    if (s.prec() < B)
      throw std::runtime_error(
          "insufficient fixture precision: monomial reaches " +
          std::to_string(s.prec()) + " < required " + std::to_string(B));
  }
  IntMat m(B, cols);
  for (long n = 1; n <= B; ++n) {
    Int den = 1;
    bool rational = false;
    for (long j = 0; j < cols; ++j) {
      const auto& e = mons[static_cast<size_t>(j)];
      const Rat& v = cache.get(e[0], e[1], e[2]).coeff(n);
      if (v.get_den() != 1) {
        rational = true;
        den = lcm(den, Int(v.get_den()));
      }
    }
    for (long j = 0; j < cols; ++j) {
      const auto& e = mons[static_cast<size_t>(j)];
      const Rat& v = cache.get(e[0], e[1], e[2]).coeff(n);
      if (!rational) {
        m.at(n - 1, j) = Int(v.get_num());
      } else {
        m.at(n - 1, j) = Int(v.get_num()) * exact_div(den, Int(v.get_den()));
      }
    }
  }
  return m;
}

namespace {

// Exact kernel of the full B x cols system, computed from a row prefix and
// verified (or refined) against the remaining rows.
std::vector<std::vector<Int>> kernel_of_full_system(const IntMat& full) {
  const long B = full.rows, cols = full.cols;
  long prefix = std::min(B, cols + 32);
  while (true) {
    IntMat sub(prefix, cols);
    for (long i = 0; i < prefix; ++i)
      for (long j = 0; j < cols; ++j) sub.at(i, j) = full.at(i, j);
    Echelon ech = bareiss_echelon(sub);
    if (ech.rank == cols) return {};  // trivial kernel, certified
    if (ech.rank < cols && prefix < B && prefix < cols + 512) {
      prefix = std::min(B, prefix * 2);
      continue;
    }
    // candidate kernel from the prefix rows
    auto cand = kernel_from_echelon(ech, cols);
    if (prefix == B) return cand;
    // impose the remaining rows exactly
    const long extra = B - prefix;
    IntMat c(extra, static_cast<long>(cand.size()));
    for (long r = 0; r < extra; ++r) {
      for (size_t t = 0; t < cand.size(); ++t) {
        Int dot = 0;
        for (long j = 0; j < cols; ++j)
          dot += full.at(prefix + r, j) * cand[t][static_cast<size_t>(j)];
        c.at(r, static_cast<long>(t)) = dot;
      }
    }
    auto combo = kernel(c);
    std::vector<std::vector<Int>> out;
    for (const auto& cb : combo) {
      std::vector<Int> v(static_cast<size_t>(cols), 0);
      for (size_t t = 0; t < cand.size(); ++t) {
        if (cb[t] == 0) continue;
        for (long j = 0; j < cols; ++j)
          v[static_cast<size_t>(j)] += cb[t] * cand[t][static_cast<size_t>(j)];
      }
      Int g = 0;
      for (const auto& x : v) g = gcd(g, x);
      if (g > 1)
        for (auto& x : v) x = exact_div(x, g);
      out.push_back(std::move(v));
    }
    return out;
  }
}

PlaneCurveEq normalize_equation(long l, const std::vector<Exponent>& mons,
                                const std::vector<Int>& vec) {
  PlaneCurveEq eq;
  eq.degree = l;
  // vec is primitive already; fix global sign so the graded-lex greatest
  // nonzero monomial has positive coefficient (monomials are sorted descending)
  int sign = 0;
  for (size_t j = 0; j < mons.size(); ++j) {
    if (vec[j] != 0) {
      sign = vec[j] > 0 ? 1 : -1;
      break;
    }
  }
  for (size_t j = 0; j < mons.size(); ++j) {
    if (vec[j] != 0) eq.terms.emplace_back(mons[j], sign * vec[j]);
  }
  return eq;
}

}  // namespace

PlaneCurveEq equation(MonomialCache& cache, const Gamma0Invariants& inv,
                      long m) {
  const QSeries& f = cache.get(1, 0, 0);
  const QSeries& g = cache.get(0, 1, 0);
  const QSeries& h = cache.get(0, 0, 1);
  long bound = degree_upper_bound(inv, m, f, g, h);
  if (bound < 1)
    throw std::runtime_error("degree budget is empty; inputs inconsistent");
  for (long l = 1; l <= bound; ++l) {
    long B = sturm_truncation(inv, l * m);
    IntMat sys = assemble_system(cache, l, B);
    auto ker = kernel_of_full_system(sys);
    if (ker.empty()) continue;
    if (ker.size() > 1)
      throw std::runtime_error(
          "kernel dimension " + std::to_string(ker.size()) +
          " > 1 at minimal degree " + std::to_string(l) +
          "; inputs reducible or fixture corrupt");
    return normalize_equation(l, monomials_of_degree(l), ker.front());
  }
  throw std::runtime_error(
      "no curve equation found up to the degree budget; fixture precision or "
      "inputs are inconsistent");
}

PlaneCurveEq equation(const QSeries& f, const QSeries& g, const QSeries& h,
                      const Gamma0Invariants& inv, long m) {
  MonomialCache cache(f, g, h);
  return equation(cache, inv, m);
}

QSeries evaluate(const PlaneCurveEq& eq, MonomialCache& cache, long B) {
  QSeries acc(B);
  for (const auto& [e, c] : eq.terms) {
    const QSeries& s = cache.get(e[0], e[1], e[2]);
    if (s.prec() < B)
      throw std::runtime_error("insufficient precision in evaluate");
    acc = add(acc, scale(s.truncated(B), Rat(c)));
  }
  return acc;
}

QSeries evaluate(const PlaneCurveEq& eq, const QSeries& f, const QSeries& g,
                 const QSeries& h, long B) {
  MonomialCache cache(f, g, h);
  return evaluate(eq, cache, B);
}

}  // namespace x0plane
