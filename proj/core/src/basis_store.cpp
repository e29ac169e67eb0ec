// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/basis_store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "x0plane/linalg.hpp"

namespace x0plane {

BasisSet load_basis(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture: " + path.string());
  std::string line;
  BasisSet b;
  long dim = -1;
  // header
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    std::string kn, kw, kd, kp;
    if (!(hs >> kn >> b.level >> kw >> b.weight >> kd >> dim >> kp >> b.prec) ||
        kn != "N" || kw != "weight" || kd != "dim" || kp != "prec")
      throw std::runtime_error("malformed fixture header: " + line);
    break;
  }
  if (dim < 0) throw std::runtime_error("empty fixture file: " + path.string());
  if (b.level < 1 || b.weight < 2 || b.weight % 2 != 0 || b.prec < 1)
    throw std::runtime_error("invalid fixture header values");

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<size_t>(b.prec));
    std::string tok;
    while (ls >> tok) {
      Rat v;
      if (v.set_str(tok, 10) != 0)
        throw std::runtime_error("bad coefficient '" + tok + "' in fixture");
      v.canonicalize();
      coeffs.push_back(v);
    }
    if (static_cast<long>(coeffs.size()) != b.prec)
      throw std::runtime_error("fixture row has wrong coefficient count");
    b.forms.emplace_back(std::move(coeffs));
  }
  if (b.dim() != dim)
    throw std::runtime_error("fixture declares dim " + std::to_string(dim) +
                             " but has " + std::to_string(b.dim()) + " rows");
  long expected = dim_cusp_forms(invariants(b.level), b.weight);
  if (b.dim() != expected)
    throw std::runtime_error(
        "fixture dimension " + std::to_string(b.dim()) +
        " does not match dim S_" + std::to_string(b.weight) + "(Gamma0(" +
        std::to_string(b.level) + ")) = " + std::to_string(expected));
  // recognize echelon form: strictly increasing valuations
  b.echelonized = true;
  long last = 0;
  for (const auto& f : b.forms) {
    auto v = f.valuation();
    if (!v || *v <= last) {
      b.echelonized = false;
      break;
    }
    last = *v;
  }
  return b;
}

void save_basis(const BasisSet& basis, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write fixture: " + path.string());
  out << "N " << basis.level << " weight " << basis.weight << " dim "
      << basis.dim() << " prec " << basis.prec << "\n";
  for (const auto& f : basis.forms) {
    for (long n = 1; n <= basis.prec; ++n) {
      if (n > 1) out << ' ';
      out << f.coeff(n).get_str();
    }
    out << "\n";
  }
}

BasisSet echelonize(const BasisSet& basis) {
  if (basis.forms.empty()) throw std::invalid_argument("empty basis");
  std::vector<std::vector<Rat>> rows;
  rows.reserve(static_cast<size_t>(basis.dim()));
  for (const auto& f : basis.forms) {
    std::vector<Rat> row(static_cast<size_t>(basis.prec));
    for (long n = 1; n <= basis.prec; ++n)
      row[static_cast<size_t>(n - 1)] = f.coeff(n);
    rows.push_back(std::move(row));
  }
  auto lattice = saturated_hnf(rows);
  if (static_cast<long>(lattice.size()) != basis.dim())
    throw std::runtime_error(
        "echelonize: rows are linearly dependent to working precision");
  BasisSet out;
  out.level = basis.level;
  out.weight = basis.weight;
  out.prec = basis.prec;
  out.echelonized = true;
  for (const auto& row : lattice) {
    std::vector<Rat> coeffs(row.begin(), row.end());
    out.forms.emplace_back(std::move(coeffs));
  }
  // HNF rows are ordered by pivot column, i.e. by valuation
  return out;
}

WeierstrassResult weierstrassat_infinity_impl(const BasisSet& b) {
  WeierstrassResult res;
  for (const auto& f : b.forms) {
    auto v = f.valuation();
    if (!v) throw std::runtime_error("zero form in echelonized basis");
    res.valuations.push_back(*v);
  }
  long g = static_cast<long>(b.forms.size());
  res.is_weierstrass = false;
  for (long i = 0; i < g; ++i) {
    if (res.valuations[static_cast<size_t>(i)] != i + 1) {
      res.is_weierstrass = true;
      break;
    }
  }
  return res;
}

WeierstrassResult weierstrass_at_infinity(const BasisSet& basis) {
  if (basis.weight != 2)
    throw std::invalid_argument("Weierstrass valuation test requires weight 2");
  auto inv = invariants(basis.level);
  if (inv.genus < 2)
    throw std::invalid_argument("Weierstrass test requires genus >= 2");
  if (!basis.echelonized)
    throw std::invalid_argument("Weierstrass test requires an echelonized basis");
  return weierstrassat_infinity_impl(basis);
}

Triple select_triple(const BasisSet& basis, long i, long j,
                     const std::vector<Int>& coeffs) {
  if (i == j) throw std::invalid_argument("select_triple: i and j must differ");
  if (i < 0 || i >= basis.dim() || j < 0 || j >= basis.dim())
    throw std::invalid_argument("select_triple: index out of range");
  if (static_cast<long>(coeffs.size()) != basis.dim())
    throw std::invalid_argument("select_triple: coefficient vector has wrong length");
  bool any = std::any_of(coeffs.begin(), coeffs.end(),
                         [](const Int& c) { return c != 0; });
  if (!any) throw std::invalid_argument("select_triple: zero combination");

  QSeries h(basis.prec);
  for (long k = 0; k < basis.dim(); ++k) {
    if (coeffs[static_cast<size_t>(k)] == 0) continue;
    h = add(h, scale(basis.forms[static_cast<size_t>(k)],
                     Rat(coeffs[static_cast<size_t>(k)])));
  }
  Triple t{basis.forms[static_cast<size_t>(i)],
           basis.forms[static_cast<size_t>(j)], h};

  // rank-3 check of the coefficient rows to working precision
  RatMat m(3, basis.prec);
  for (long n = 1; n <= basis.prec; ++n) {
    m.at(0, n - 1) = t.f.coeff(n);
    m.at(1, n - 1) = t.g.coeff(n);
    m.at(2, n - 1) = t.h.coeff(n);
  }
  if (rref(m).size() != 3)
    throw std::runtime_error("select_triple: forms are linearly dependent");
  return t;
}

}  // namespace x0plane
