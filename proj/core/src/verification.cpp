// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/verification.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "x0plane/birationality.hpp"
#include "x0plane/primitive_bound.hpp"

namespace x0plane {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::filesystem::path fixture_path(const std::filesystem::path& root, long n,
                                   long k) {
  return root / "bases" /
         ("N" + std::to_string(n) + "_k" + std::to_string(k) + ".qexp");
}

PlaneCurveEq load_golden(const std::filesystem::path& root,
                         const std::string& name) {
  std::ifstream in(root / "equations" / (name + ".json"));
  if (!in) throw std::runtime_error("missing golden equation " + name);
  nlohmann::json j;
  in >> j;
  return eq_from_json(j.at("equation"));
}

struct Runner {
  std::vector<CheckResult> out;

  template <typename F>
  void check(const std::string& name, double budget_seconds, F&& body) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
      std::string detail = body();
      r.pass = true;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.seconds = since(t0);
    if (r.pass && budget_seconds > 0 && r.seconds > budget_seconds) {
      r.pass = false;
      r.detail = "exceeded runtime budget of " +
                 std::to_string(budget_seconds) + "s (" +
                 std::to_string(r.seconds) + "s)";
    }
    out.push_back(std::move(r));
  }
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

// --- criterion 1 -----------------------------------------------------------

void criterion1(Runner& r, const std::filesystem::path&) {
  r.check("invariants and dimensions", 1.0, [] {
    struct Row {
      long n, genus, dim_s4;  // dim_s4 < 0: not pinned
    };
    const Row rows[] = {
        {11, 1, 2},  {14, 1, 4},  {15, 1, 4},  {17, 1, 4},  {18, 0, 5},
        {19, 1, 4},  {20, 1, 6},  {21, 1, 6},  {23, 2, 5},  {25, 0, 5},
        {27, 1, 6},  {34, 3, -1}, {43, 3, -1}, {45, 3, -1}, {48, 3, -1},
        {63, 5, -1}, {93, 9, -1}, {110, 15, -1}};
    for (const auto& row : rows) {
      auto inv = invariants(row.n);
      expect(inv.genus == row.genus,
             "genus mismatch at level " + std::to_string(row.n));
      expect(dim_cusp_forms(inv, 2) == row.genus,
             "dim S_2 mismatch at level " + std::to_string(row.n));
      if (row.dim_s4 >= 0)
        expect(dim_cusp_forms(inv, 4) == row.dim_s4,
               "dim S_4 mismatch at level " + std::to_string(row.n));
    }
    return "18 levels";
  });
}

// --- criterion 2 -----------------------------------------------------------

struct EqTarget {
  std::string golden;
  long level, weight;
  long f_row, g_row;
  std::vector<long> h;  // full coefficient vector
  double budget;
};

std::vector<EqTarget> eq_targets() {
  std::vector<EqTarget> t = {
      {"n14_cubic", 14, 4, 1, 2, {0, 0, 0, 1}, 60},
      {"n14_quartic", 14, 4, 0, 1, {0, 0, 1, 0}, 60},
      {"p34", 34, 2, 0, 1, {0, 0, 1}, 60},
      {"p43", 43, 2, 0, 1, {0, 0, 1}, 60},
      {"p45", 45, 2, 0, 1, {0, 0, 1}, 60},
      {"n48_conic", 48, 2, 0, 1, {0, 0, 1}, 60},
  };
  const struct {
    long n;
    long dim;
  } table1[] = {{14, 4}, {15, 4}, {17, 4}, {18, 5}, {19, 4},
                {20, 6}, {21, 6}, {23, 5}, {25, 5}, {27, 6}};
  for (const auto& row : table1) {
    std::vector<long> h(static_cast<size_t>(row.dim), 1);
    h[0] = h[1] = 0;
    t.push_back({"table1_n" + std::to_string(row.n), row.n, 4, 0, 1, h, 60});
  }
  t.push_back({"n110_deg15", 110, 2, 12, 13,
               {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 600});
  return t;
}

Triple make_triple(const BasisSet& b, const EqTarget& t) {
  std::vector<Int> coeffs;
  for (long c : t.h) coeffs.emplace_back(c);
  return select_triple(b, t.f_row, t.g_row, coeffs);
}

void criterion2(Runner& r, const std::filesystem::path& root) {
  for (const auto& t : eq_targets()) {
    r.check("equation " + t.golden, t.budget, [&] {
      auto b = load_basis(fixture_path(root, t.level, t.weight));
      auto inv = invariants(t.level);
      auto triple = make_triple(b, t);
      auto eq = equation(triple.f, triple.g, triple.h, inv, t.weight);
      auto golden = load_golden(root, t.golden);
      expect(eq.same_up_to_sign(golden),
             "computed equation differs from the committed one");
      expect(eq == golden, "normalization drifted from the committed form");
      return "degree " + std::to_string(eq.degree) + ", " +
             std::to_string(eq.terms.size()) + " terms";
    });
  }
}

// --- criterion 3 -----------------------------------------------------------

void criterion3(Runner& r, const std::filesystem::path& root) {
  struct Verdict {
    std::string name;
    long level, weight;
    long f_row, g_row;
    std::vector<long> h;
    long deg, d;
    bool exact;  // whether the infinity part accounts for the whole correction
  };
  std::vector<Verdict> verdicts = {
      {"valuation-(2,3,4) cubic", 14, 4, 1, 2, {0, 0, 0, 1}, 3, 1, true},
      {"valuation-(1,2,3) quartic", 14, 4, 0, 1, {0, 0, 1, 0}, 4, 1, true},
      {"level 48 canonical conic", 48, 2, 0, 1, {0, 0, 1}, 2, 2, true},
      {"level 34 canonical", 34, 2, 0, 1, {0, 0, 1}, 4, 1, true},
      {"level 43 canonical", 43, 2, 0, 1, {0, 0, 1}, 4, 1, true},
      {"level 45 canonical", 45, 2, 0, 1, {0, 0, 1}, 4, 1, true},
      {"level 63 tail triple", 63, 2, 2, 3, {0, 0, 0, 0, 1}, 6, 1, true},
      {"level 93 tail triple", 93, 2, 6, 7,
       {0, 0, 0, 0, 0, 0, 0, 0, 1}, 10, 1, true},
      {"level 110 tail triple", 110, 2, 12, 13,
       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 15, 1, false},
  };
  const struct {
    long n, dim, deg;
  } table1[] = {{14, 4, 4}, {15, 4, 4}, {17, 4, 4}, {18, 5, 4}, {19, 4, 4},
                {20, 6, 6}, {21, 6, 6}, {23, 5, 6}, {25, 5, 4}, {27, 6, 6}};
  for (const auto& row : table1) {
    std::vector<long> h(static_cast<size_t>(row.dim), 1);
    h[0] = h[1] = 0;
    verdicts.push_back({"table 1 level " + std::to_string(row.n), row.n, 4, 0,
                        1, h, row.deg, 1, true});
  }

  for (const auto& v : verdicts) {
    r.check("verdict: " + v.name, 0, [&] {
      auto b = load_basis(fixture_path(root, v.level, v.weight));
      auto inv = invariants(v.level);
      EqTarget t{"", v.level, v.weight, v.f_row, v.g_row, v.h, 0};
      auto triple = make_triple(b, t);
      auto res = certify_birational(triple.f, triple.g, triple.h, inv,
                                    v.weight);
      expect(res.deg_curve == v.deg,
             "degree " + std::to_string(res.deg_curve) + " != expected " +
                 std::to_string(v.deg));
      expect(res.d_determined(), "map degree not determined");
      expect(res.d_min == v.d,
             "d = " + std::to_string(res.d_min) + " != expected " +
                 std::to_string(v.d));
      // the identity d*deg + correction = uncorrected budget, exactly
      expect(res.d_min * res.deg_curve + res.correction_implied() ==
                 res.rhs_uncorrected,
             "budget identity violated");
      expect(res.correction_implied() >= res.correction_certified,
             "implied correction below the certified infinity part");
      expect(res.correction_exact() == v.exact,
             "correction exactness flag unexpected");
      return "deg " + std::to_string(res.deg_curve) + ", d = " +
             std::to_string(res.d_min) + ", correction " +
             std::to_string(res.correction_implied()) + " (certified " +
             std::to_string(res.correction_certified) + ")";
    });
  }
}

// --- criterion 4 -----------------------------------------------------------

void criterion4(Runner& r, const std::filesystem::path& root) {
  r.check("primitive-element bound", 5.0, [&] {
    auto p = load_bivar(root / "bivar" / "n14_P.bivar");
    auto q = load_bivar(root / "bivar" / "n14_Q.bivar");
    auto res = c0_bound(p, q);
    expect(res.lambda == 1, "lambda != 1");
    expect(res.alpha_max_upper <= Rat(454, 100),
           "alpha separation bound exceeds 4.54");
    expect(res.beta_min_lower >= Rat(6869, 10000),
           "beta separation bound below 0.6869");
    expect(res.threshold == 7, "cloud threshold != 7");
    auto mb = mahler_bound(p, q);
    expect(mb.threshold >= 1000, "coefficient-bound threshold below 10^3");
    std::ostringstream os;
    os << "lambda 1, c0 < " << res.c0_upper.get_d()
       << ", threshold 7, coefficient-pipeline threshold "
       << mb.threshold.get_str();
    return os.str();
  });
}

// --- criterion 5 -----------------------------------------------------------

void criterion5(Runner& r, const std::filesystem::path& root) {
  r.check("cross-validation of the shift bound at level 14", 120.0, [&] {
    auto b = load_basis(fixture_path(root, 14, 4));
    auto inv = invariants(14);
    for (long c : {7L, -7L, 8L}) {
      auto t = select_triple(b, 0, 1, {Int(0), Int(0), Int(c), Int(1)});
      expect(primitivity_test(t.f, t.g, t.h, inv, 4),
             "h_c not primitive for c = " + std::to_string(c));
    }
    return "c in {7, -7, 8} all primitive";
  });
}

// --- criterion 6 -----------------------------------------------------------

void criterion6(Runner& r, const std::filesystem::path& root) {
  r.check("q-series ring axioms and product oracle", 0, [] {
    std::mt19937 rng(861);
    std::uniform_int_distribution<long> coeff(-9, 9);
    auto rand_series = [&](long prec) {
      QSeries s(prec);
      for (long n = 1; n <= prec; ++n) s.set_coeff(n, Rat(coeff(rng)));
      return s;
    };
    for (int trial = 0; trial < 60; ++trial) {
      auto a = rand_series(12), b = rand_series(12), c = rand_series(12);
      expect(mul(a, b) == mul(b, a), "commutativity");
      expect(mul(mul(a, b), c).truncated(13) ==
                 mul(a, mul(b, c)).truncated(13),
             "associativity");
      auto lhs = mul(a, add(b, c));
      auto rhs = add(mul(a, b), mul(a, c));
      long pc = std::min(lhs.prec(), rhs.prec());
      expect(lhs.truncated(pc) == rhs.truncated(pc), "distributivity");
      // reference product with reversed accumulation
      QSeries ref(13);
      for (long n = 2; n <= 13; ++n) {
        Rat acc = 0;
        for (long i = n - 1; i >= 1; --i)
          if (i <= 12 && n - i <= 12) acc += a.coeff(i) * b.coeff(n - i);
        ref.set_coeff(n, acc);
      }
      expect(mul(a, b).truncated(13) == ref, "oracle equivalence");
    }
    return "60 random triples";
  });

  r.check("kernel vs rational-elimination oracle", 0, [] {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> dim_r(2, 8), dim_c(2, 9),
        entry(-30, 30);
    for (int trial = 0; trial < 200; ++trial) {
      IntMat m(dim_r(rng), dim_c(rng));
      for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
      auto mine = kernel(m);
      // textbook rational RREF kernel
      RatMat a(m.rows, m.cols);
      for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) a.at(i, j) = Rat(m.at(i, j));
      auto pivots = rref(a);
      expect(static_cast<long>(mine.size()) ==
                 m.cols - static_cast<long>(pivots.size()),
             "kernel dimension");
      for (const auto& v : mine) {
        for (long i = 0; i < m.rows; ++i) {
          Int dot = 0;
          for (long j = 0; j < m.cols; ++j)
            dot += m.at(i, j) * v[static_cast<size_t>(j)];
          expect(dot == 0, "kernel vector not annihilated");
        }
      }
    }
    return "200 random matrices";
  });

  r.check("separation sandwich on random squarefree polynomials", 0, [] {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<long> deg(2, 6), coeff(-20, 20);
    int done = 0;
    while (done < 200) {
      std::vector<Int> c(static_cast<size_t>(deg(rng)) + 1);
      for (auto& x : c) x = coeff(rng);
      ZPoly f(std::move(c));
      if (f.degree() < 2) continue;
      if (resultant(f, derivative(f)) == 0) continue;
      auto bounds = root_bounds_exact(f);
      auto cloud = root_cloud(f);
      if (!cloud.certified) continue;
      auto sep = separations(cloud);
      expect(bounds.lower <= sep.min_upper, "lower bound above separation");
      expect(sep.max_lower <= bounds.upper, "2L bound below separation");
      ++done;
    }
    return "200 squarefree polynomials";
  });

  r.check("resultant specialization identity", 0, [] {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<long> deg(1, 3), tdeg(0, 2), coeff(-9, 9),
        pick(-3, 3);
    int done = 0;
    while (done < 100) {
      auto rand_bivar = [&]() {
        BivarPoly p;
        for (long i = 0; i <= deg(rng); ++i) {
          std::vector<Int> c;
          for (long j = 0; j <= tdeg(rng); ++j) c.emplace_back(coeff(rng));
          p.coeff_x.emplace_back(std::move(c));
        }
        p.trim();
        return p;
      };
      BivarPoly p = rand_bivar(), q = rand_bivar();
      if (p.degree_x() < 1 || q.degree_x() < 1) continue;
      long lambda = pick(rng);
      if (evaluate(p.leading_x(), Int(lambda)) == 0 ||
          evaluate(q.leading_x(), Int(lambda)) == 0)
        continue;
      expect(resultant(p.at(Int(lambda)), q.at(Int(lambda))) ==
                 evaluate(resultant_x(p, q), Int(lambda)),
             "specialization identity");
      ++done;
    }
    return "100 random pairs";
  });

  r.check("trial-search monotonicity at level 14", 0, [&] {
    auto b = load_basis(fixture_path(root, 14, 4));
    auto h1 = trial_search(b, 1);
    auto h2 = trial_search(b, 2);
    for (const auto& a : h1) {
      bool found = false;
      for (const auto& bb : h2)
        if (bb.coeffs == a.coeffs && bb.eq == a.eq) found = true;
      expect(found, "M = 1 hit missing at M = 2");
    }
    return std::to_string(h1.size()) + " hits at M=1, " +
           std::to_string(h2.size()) + " at M=2";
  });
}

// --- criterion 7 -----------------------------------------------------------

void criterion7(Runner& r, const std::filesystem::path& root) {
  const long expected_false[] = {38, 42, 48, 53, 63, 64, 75, 79,
                                 93, 101, 110, 198};
  for (long n : expected_false) {
    r.check("not a Weierstrass point at level " + std::to_string(n), 0, [&] {
      auto b = load_basis(fixture_path(root, n, 2));
      auto w = weierstrass_at_infinity(b);
      std::ostringstream os;
      os << "valuations";
      for (long v : w.valuations) os << ' ' << v;
      expect(!w.is_weierstrass, "computed Weierstrass = true; " + os.str());
      return os.str();
    });
  }
  r.check("Weierstrass point at level 168", 0, [&] {
    auto b = load_basis(fixture_path(root, 168, 2));
    auto w = weierstrass_at_infinity(b);
    expect(w.is_weierstrass, "computed Weierstrass = false");
    return "gap above genus found";
  });
}

}  // namespace

std::vector<CheckResult> run_criterion(int criterion,
                                       const std::filesystem::path& root) {
  Runner r;
  switch (criterion) {
    case 1: criterion1(r, root); break;
    case 2: criterion2(r, root); break;
    case 3: criterion3(r, root); break;
    case 4: criterion4(r, root); break;
    case 5: criterion5(r, root); break;
    case 6: criterion6(r, root); break;
    case 7: criterion7(r, root); break;
    default:
      throw std::invalid_argument("criterion must be 1..7");
  }
  return std::move(r.out);
}

std::vector<CheckResult> run_all(const std::filesystem::path& root) {
  std::vector<CheckResult> all;
  for (int c = 1; c <= 7; ++c) {
    auto part = run_criterion(c, root);
    for (auto& p : part) {
      p.name = "criterion " + std::to_string(c) + ": " + p.name;
      all.push_back(std::move(p));
    }
  }
  return all;
}

bool report(const std::vector<CheckResult>& results, std::ostream& os) {
  bool ok = true;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
    os << buf << "\n";
    ok = ok && r.pass;
  }
  return ok;
}

}  // namespace x0plane
