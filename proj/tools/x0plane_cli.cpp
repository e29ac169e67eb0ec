// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Command-line front end: plane models of X0(N) from committed q-expansion
// bases, birationality verdicts, trial search, the Weierstrass valuation
// test, and primitive-element shift bounds.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "x0plane/birationality.hpp"
#include "x0plane/primitive_bound.hpp"
#include "x0plane/verification.hpp"

namespace {

using namespace x0plane;
using nlohmann::json;

std::filesystem::path data_root() {
  if (const char* env = std::getenv("X0PLANE_DATA")) return env;
  return "data";
}

std::filesystem::path resolve_fixture(const std::string& fixture, long level,
                                      long weight) {
  if (!fixture.empty()) return fixture;
  if (level <= 0)
    throw CLI::ValidationError("either --fixture or --level is required");
  return data_root() / "bases" /
         ("N" + std::to_string(level) + "_k" + std::to_string(weight) +
          ".qexp");
}

std::vector<Int> parse_coeffs(const std::string& text, long dim) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.emplace_back(tok);
  }
  if (static_cast<long>(out.size()) != dim)
    throw CLI::ValidationError("--coeffs needs exactly " +
                               std::to_string(dim) + " comma-separated values");
  return out;
}

void emit(const json& payload, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << payload.dump(1) << "\n";
  } else {
    for (const auto& [key, value] : payload.items()) {
      if (value.is_string()) {
        os << key << ": " << value.get<std::string>() << "\n";
      } else {
        os << key << ": " << value.dump() << "\n";
      }
    }
  }
}

json budget_json(const DegreeBudget& r) {
  json j;
  j["rhs_uncorrected"] = r.rhs_uncorrected;
  j["correction_certified"] = r.correction_certified;
  j["budget"] = r.budget;
  j["deg_curve"] = r.deg_curve;
  j["d_min"] = r.d_min;
  j["d_max"] = r.d_max;
  if (r.d_determined()) {
    j["d"] = r.d_min;
    j["correction_implied"] = r.correction_implied();
    j["correction_exact"] = r.correction_exact();
  }
  return j;
}

int cmd_invariants(long level, std::vector<long> weights,
                   const std::string& format) {
  auto inv = invariants(level);
  json j;
  j["level"] = inv.level;
  j["psi"] = inv.psi;
  j["nu2"] = inv.nu2;
  j["nu3"] = inv.nu3;
  j["nu_inf"] = inv.nu_inf;
  j["genus"] = inv.genus;
  json dims = json::array();
  for (long m : weights) {
    dims.push_back({{"weight", m},
                    {"dim_cusp_forms", dim_cusp_forms(inv, m)},
                    {"dim_modular_forms", dim_modular_forms(inv, m)},
                    {"divisor_degree", to_string(divisor_degree(inv, m))},
                    {"sturm_truncation", sturm_truncation(inv, m)}});
  }
  j["weights"] = dims;
  emit(j, format, std::cout);
  return 0;
}

int cmd_equation(const std::string& fixture, long level, long weight, long i,
                 long j, const std::string& coeffs, const std::string& format,
                 const std::string& out_path) {
  auto b = load_basis(resolve_fixture(fixture, level, weight));
  auto inv = invariants(b.level);
  auto t = select_triple(b, i, j, parse_coeffs(coeffs, b.dim()));
  auto r = certify_birational(t.f, t.g, t.h, inv, b.weight);

  json payload;
  payload["level"] = b.level;
  payload["weight"] = b.weight;
  payload["equation"] = to_json(r.eq);
  payload["equation_text"] = to_string(r.eq);
  payload["verdict"] = budget_json(r);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << payload.dump(1) << "\n";
  }
  emit(payload, format, std::cout);
  return r.d_determined() ? 0 : 3;
}

int cmd_trial(const std::string& fixture, long level, long weight,
              long max_coeff, int jobs, const std::string& format) {
  auto b = load_basis(resolve_fixture(fixture, level, weight));
  auto hits = trial_search(b, max_coeff, jobs);
  json payload;
  payload["level"] = b.level;
  payload["weight"] = b.weight;
  payload["max_coeff"] = max_coeff;
  json arr = json::array();
  for (const auto& h : hits) {
    arr.push_back({{"coeffs", h.coeffs},
                   {"equation", to_json(h.eq)},
                   {"equation_text", to_string(h.eq)}});
  }
  payload["primitive"] = arr;
  emit(payload, format, std::cout);
  return 0;
}

int cmd_weierstrass(const std::string& fixture, long level,
                    const std::string& format) {
  auto b = load_basis(resolve_fixture(fixture, level, 2));
  auto w = weierstrass_at_infinity(b);
  json payload;
  payload["level"] = b.level;
  payload["weierstrass"] = w.is_weierstrass;
  payload["valuations"] = w.valuations;
  emit(payload, format, std::cout);
  return 0;
}

int cmd_primitive_bound(const std::string& p_file, const std::string& q_file,
                        const std::string& from_equation,
                        const std::string& which, const std::string& target,
                        int max_iter, unsigned seed,
                        const std::string& format) {
  BivarPoly p, q;
  if (!from_equation.empty()) {
    std::ifstream in(from_equation);
    if (!in) throw std::runtime_error("cannot open " + from_equation);
    json j;
    in >> j;
    auto eq = eq_from_json(j.contains("equation") ? j.at("equation") : j);
    auto sel = which == "second" ? DehomSelector::kSecondOverFirst
                                 : DehomSelector::kThirdOverFirst;
    q = minimal_poly_from_equation(eq, sel);
    if (p_file.empty())
      throw CLI::ValidationError(
          "--from-equation provides Q; also pass --p-file (or a second "
          "--from-equation is not supported)");
    p = load_bivar(p_file);
  } else {
    if (p_file.empty() || q_file.empty())
      throw CLI::ValidationError("need --p-file and --q-file");
    p = load_bivar(p_file);
    q = load_bivar(q_file);
  }

  RootCloudOptions opt;
  opt.max_iter = max_iter;
  opt.seed = seed;
  if (!target.empty()) {
    Rat t;
    if (t.set_str(target, 10) != 0 || t <= 0)
      throw CLI::ValidationError("--target-radius must be a positive rational");
    t.canonicalize();
    opt.target_radius = t;
  }

  auto res = c0_bound(p, q, opt);
  auto mb = mahler_bound(p, q);
  json payload;
  payload["P"] = to_string(p);
  payload["Q"] = to_string(q);
  payload["lambda"] = res.lambda;
  payload["c0_upper"] = to_string(res.c0_upper);
  // mpq -> double truncates toward zero; nudge up so the decimal rendering
  // stays an upper bound
  double c0d = res.c0_upper.get_d();
  while (Rat(c0d) < res.c0_upper)
    c0d = std::nextafter(c0d, std::numeric_limits<double>::infinity());
  payload["c0_upper_decimal_rounded_up"] = c0d;
  payload["threshold"] = res.threshold.get_str();
  payload["alpha_max_upper"] = to_string(res.alpha_max_upper);
  payload["beta_min_lower"] = to_string(res.beta_min_lower);
  payload["met_target_radius"] = res.alpha.met_target && res.beta.met_target;
  payload["mahler"] = {{"lambda", mb.lambda},
                       {"c0_upper", to_string(mb.c0_upper)},
                       {"threshold", mb.threshold.get_str()}};
  emit(payload, format, std::cout);
  return 0;
}

int cmd_verify(const std::string& data, int criterion) {
  std::filesystem::path root =
      data.empty() ? data_root() : std::filesystem::path(data);
  auto results = criterion > 0 ? run_criterion(criterion, root)
                               : run_all(root);
  bool ok = report(results, std::cout);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane models of the modular curves X0(N)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  long level = 0;
  std::vector<long> weights{2, 4};
  auto* inv = app.add_subcommand("invariants", "arithmetic invariants of Gamma0(N)");
  inv->add_option("--level", level, "level N")->required();
  inv->add_option("--weight", weights, "weights to report");

  std::string fixture, coeffs = "", out_path = "";
  long fi = 0, fj = 1, fweight = 2;
  auto* eq = app.add_subcommand("equation",
                                "plane-model equation and map-degree verdict");
  eq->add_option("--fixture", fixture, "q-expansion basis file");
  eq->add_option("--level", level, "level (resolved under the data root)");
  eq->add_option("--weight", fweight, "weight for --level resolution");
  eq->add_option("--i", fi, "row index of f");
  eq->add_option("--j", fj, "row index of g");
  eq->add_option("--coeffs", coeffs, "comma-separated h coefficients")
      ->required();
  eq->add_option("--out", out_path, "also write the JSON report here");

  long max_coeff = 1, tweight = 4;
  int jobs = 1;
  auto* tr = app.add_subcommand("trial", "search shift vectors up to a bound");
  tr->add_option("--fixture", fixture, "q-expansion basis file");
  tr->add_option("--level", level, "level (resolved under the data root)");
  tr->add_option("--weight", tweight, "weight for --level resolution");
  tr->add_option("--max-coeff", max_coeff, "bound M on |a_i|")->required();
  tr->add_option("--jobs", jobs, "worker threads");

  auto* wp = app.add_subcommand("weierstrass",
                                "valuation test at the infinite cusp");
  wp->add_option("--fixture", fixture, "q-expansion basis file");
  wp->add_option("--level", level, "level (resolved under the data root)");

  std::string p_file, q_file, from_equation, which = "third", target;
  int max_iter = 200;
  unsigned seed = 0x5eed;
  auto* pb = app.add_subcommand("primitive-bound",
                                "certified shift bound from two relations");
  pb->add_option("--p-file", p_file, "bivariate relation of the fixed ratio");
  pb->add_option("--q-file", q_file, "bivariate relation of the shifted ratio");
  pb->add_option("--from-equation", from_equation,
                 "derive Q by dehomogenizing an equation JSON");
  pb->add_option("--which", which, "dehomogenization selector")
      ->check(CLI::IsMember({"third", "second"}));
  pb->add_option("--target-radius", target, "root disk radius target");
  pb->add_option("--max-iter", max_iter, "iteration cap");
  pb->add_option("--seed", seed, "start-point seed");

  std::string data;
  int criterion = 0;
  auto* vf = app.add_subcommand("verify", "run the committed-data checks");
  vf->add_option("--data", data, "data root (default $X0PLANE_DATA or ./data)");
  vf->add_option("--criterion", criterion, "run a single criterion (1..7)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (inv->parsed()) return cmd_invariants(level, weights, format);
    if (eq->parsed())
      return cmd_equation(fixture, level, fweight, fi, fj, coeffs, format,
                          out_path);
    if (tr->parsed())
      return cmd_trial(fixture, level, tweight, max_coeff, jobs, format);
    if (wp->parsed()) return cmd_weierstrass(fixture, level, format);
    if (pb->parsed())
      return cmd_primitive_bound(p_file, q_file, from_equation, which, target,
                                 max_iter, seed, format);
    if (vf->parsed()) return cmd_verify(data, criterion);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 1;
}
