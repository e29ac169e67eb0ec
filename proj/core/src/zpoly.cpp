// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/zpoly.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace x0plane {

ZPoly add(const ZPoly& a, const ZPoly& b) {
  std::vector<Int> c(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c.size()) c[i] += a.c[i];
    if (i < b.c.size()) c[i] += b.c[i];
  }
  return ZPoly(std::move(c));
}

ZPoly sub(const ZPoly& a, const ZPoly& b) { return add(a, neg(b)); }

ZPoly neg(const ZPoly& a) {
  ZPoly out = a;
  for (auto& x : out.c) x = -x;
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      c[i + j] += a.c[i] * b.c[j];
    }
  }
  return ZPoly(std::move(c));
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::logic_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw std::logic_error("inexact polynomial division");
  std::vector<Int> rem = a.c;
  std::vector<Int> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  for (long d = a.degree(); d >= b.degree();) {
    const Int& lead = rem[static_cast<size_t>(d)];
    if (lead == 0) {
      --d;
      continue;
    }
    Int q = exact_div(lead, b.leading());
    long shift = d - b.degree();
    quo[static_cast<size_t>(shift)] = q;
    for (long i = 0; i <= b.degree(); ++i)
      rem[static_cast<size_t>(i + shift)] -= q * b.c[static_cast<size_t>(i)];
    --d;
  }
  for (const auto& x : rem)
    if (x != 0) throw std::logic_error("inexact polynomial division");
  return ZPoly(std::move(quo));
}

ZPoly derivative(const ZPoly& a) {
  if (a.degree() < 1) return {};
  std::vector<Int> c(static_cast<size_t>(a.degree()));
  for (long i = 1; i <= a.degree(); ++i)
    c[static_cast<size_t>(i - 1)] = Int(i) * a.c[static_cast<size_t>(i)];
  return ZPoly(std::move(c));
}

Int evaluate(const ZPoly& a, const Int& x) {
  Int acc = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat evaluate(const ZPoly& a, const Rat& x) {
  Rat acc = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Int length(const ZPoly& a) {
  Int s = 0;
  for (const auto& x : a.c) s += abs(x);
  return s;
}

ZPoly BivarPoly::at(const Int& lambda) const {
  std::vector<Int> c(coeff_x.size());
  for (size_t i = 0; i < coeff_x.size(); ++i)
    c[i] = evaluate(coeff_x[i], lambda);
  return ZPoly(std::move(c));
}

BivarPoly load_bivar(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  BivarPoly p;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long ex, et;
    std::string coeff;
    if (!(ls >> ex >> et >> coeff))
      throw std::runtime_error("malformed bivariate term: " + line);
    if (ex < 0 || et < 0) throw std::runtime_error("negative exponent");
    if (static_cast<long>(p.coeff_x.size()) <= ex)
      p.coeff_x.resize(static_cast<size_t>(ex + 1));
    ZPoly& a = p.coeff_x[static_cast<size_t>(ex)];
    if (static_cast<long>(a.c.size()) <= et)
      a.c.resize(static_cast<size_t>(et + 1));
    a.c[static_cast<size_t>(et)] += Int(coeff);
    a.trim();
  }
  p.trim();
  return p;
}

void save_bivar(const BivarPoly& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (long i = static_cast<long>(p.coeff_x.size()) - 1; i >= 0; --i) {
    const ZPoly& a = p.coeff_x[static_cast<size_t>(i)];
    for (long j = 0; j <= a.degree(); ++j) {
      if (a.coeff(j) == 0) continue;
      out << i << ' ' << j << ' ' << a.coeff(j).get_str() << "\n";
    }
  }
}

std::string to_string(const BivarPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree_x(); i >= 0; --i) {
    const ZPoly& a = p.coeff_x[static_cast<size_t>(i)];
    for (long j = a.degree(); j >= 0; --j) {
      Int c = a.coeff(j);
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int v = abs(c);
      bool vars = i > 0 || j > 0;
      if (v != 1 || !vars) {
        os << v.get_str();
        if (vars) os << "*";
      }
      if (i > 0) {
        os << "X";
        if (i > 1) os << "^" << i;
        if (j > 0) os << "*";
      }
      if (j > 0) {
        os << "T";
        if (j > 1) os << "^" << j;
      }
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Fraction-free determinant over Z[T]; entries are consumed.
ZPoly bareiss_det(std::vector<std::vector<ZPoly>> m) {
  const long n = static_cast<long>(m.size());
  if (n == 0) return ZPoly::constant(1);
  ZPoly prev = ZPoly::constant(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
      long sw = -1;
      for (long i = k + 1; i < n; ++i) {
        if (!m[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
          sw = i;
          break;
        }
      }
      if (sw < 0) return {};  // singular
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(sw)]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        ZPoly v = sub(mul(m[static_cast<size_t>(i)][static_cast<size_t>(j)],
                          m[static_cast<size_t>(k)][static_cast<size_t>(k)]),
                      mul(m[static_cast<size_t>(i)][static_cast<size_t>(k)],
                          m[static_cast<size_t>(k)][static_cast<size_t>(j)]));
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            v.is_zero() ? ZPoly{} : exact_div(v, prev);
      }
      m[static_cast<size_t>(i)][static_cast<size_t>(k)] = {};
    }
    prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  ZPoly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  if (sign < 0) det = neg(det);
  return det;
}

}  // namespace

ZPoly resultant_x(const BivarPoly& p, const BivarPoly& q) {
  const long m = p.degree_x();
  const long n = q.degree_x();
  if (m < 1 || n < 1)
    throw std::invalid_argument("resultant_x needs positive X-degrees");
  const long size = m + n;
  std::vector<std::vector<ZPoly>> syl(
      static_cast<size_t>(size),
      std::vector<ZPoly>(static_cast<size_t>(size)));
  // n rows of p's coefficients, then m rows of q's, X-degree descending
  for (long r = 0; r < n; ++r)
    for (long i = 0; i <= m; ++i)
      syl[static_cast<size_t>(r)][static_cast<size_t>(r + i)] =
          p.coeff_x[static_cast<size_t>(m - i)];
  for (long r = 0; r < m; ++r)
    for (long i = 0; i <= n; ++i)
      syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] =
          q.coeff_x[static_cast<size_t>(n - i)];
  return bareiss_det(std::move(syl));
}

ZPoly discriminant_x(const BivarPoly& q) {
  BivarPoly dq;
  for (long i = 1; i <= q.degree_x(); ++i) {
    ZPoly s = q.coeff_x[static_cast<size_t>(i)];
    for (auto& x : s.c) x *= i;
    dq.coeff_x.push_back(std::move(s));
  }
  dq.trim();
  if (dq.degree_x() < 1)
    throw std::invalid_argument("discriminant of an X-linear polynomial");
  return resultant_x(q, dq);
}

Int resultant(const ZPoly& a, const ZPoly& b) {
  BivarPoly pa, pb;
  for (const auto& c : a.c) pa.coeff_x.push_back(ZPoly::constant(c));
  for (const auto& c : b.c) pb.coeff_x.push_back(ZPoly::constant(c));
  pa.trim();
  pb.trim();
  ZPoly r = resultant_x(pa, pb);
  return r.is_zero() ? Int(0) : r.coeff(0);
}

}  // namespace x0plane
