// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace x0plane {

Echelon bareiss_echelon(IntMat m) {
  Echelon out;
  const long rows = m.rows, cols = m.cols;
  Int prev = 1;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i) {
      if (m.at(i, c) == 0) continue;
      if (piv < 0 || cmp(abs(m.at(i, c)), abs(m.at(piv, c))) < 0) piv = i;
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (long j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    }
    const Int& pivot = m.at(r, c);
    for (long i = r + 1; i < rows; ++i) {
      const Int factor = m.at(i, c);
      for (long j = c + 1; j < cols; ++j) {
        Int v = m.at(i, j) * pivot - factor * m.at(r, j);
        m.at(i, j) = exact_div(v, prev);
      }
      m.at(i, c) = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

long rank(IntMat m) { return bareiss_echelon(std::move(m)).rank; }

std::vector<std::vector<Int>> kernel(const IntMat& m) {
  return kernel_from_echelon(bareiss_echelon(m), m.cols);
}

std::vector<std::vector<Int>> kernel_from_echelon(const Echelon& ech,
                                                  long cols) {
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (long c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<Int>> basis;
  for (long f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    // back-substitute over Q with v[f] = 1, other free columns 0
    std::vector<Rat> v(static_cast<size_t>(cols));
    v[static_cast<size_t>(f)] = 1;
    for (long i = ech.rank - 1; i >= 0; --i) {
      long pc = ech.pivot_cols[static_cast<size_t>(i)];
      if (pc > f) {
        continue;  // v[pc] stays 0: all later columns involved are 0 or pivots below f
      }
      Rat acc = 0;
      for (long j = pc + 1; j <= f; ++j) {
        if (ech.mat.at(i, j) != 0 && v[static_cast<size_t>(j)] != 0)
          acc += Rat(ech.mat.at(i, j)) * v[static_cast<size_t>(j)];
      }
      v[static_cast<size_t>(pc)] = -acc / Rat(ech.mat.at(i, pc));
    }
    // clear denominators, make primitive, sign fixed by v[f] > 0
    Int den = 1;
    for (const Rat& x : v) den = lcm(den, Int(x.get_den()));
    std::vector<Int> w(static_cast<size_t>(cols));
    Int g = 0;
    for (long j = 0; j < cols; ++j) {
      w[static_cast<size_t>(j)] =
          Int(v[static_cast<size_t>(j)].get_num()) *
          exact_div(den, Int(v[static_cast<size_t>(j)].get_den()));
      g = gcd(g, w[static_cast<size_t>(j)]);
    }
    if (g > 1) {
      for (auto& x : w) x = exact_div(x, g);
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<long> rref(RatMat& m) {
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < m.cols && r < m.rows; ++c) {
    long piv = -1;
    for (long i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    }
    Rat inv = 1 / m.at(r, c);
    for (long j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (long i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (long j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> h) {
  if (h.empty()) return h;
  const long m = static_cast<long>(h.size());
  const long n = static_cast<long>(h[0].size());
  long r = 0;
  for (long c = 0; c < n && r < m; ++c) {
    while (true) {
      long best = -1;
      long count = 0;
      for (long i = r; i < m; ++i) {
        if (h[i][c] != 0) {
          ++count;
          if (best < 0 || cmp(abs(h[i][c]), abs(h[best][c])) < 0) best = i;
        }
      }
      if (count <= 1) break;
      for (long i = r; i < m; ++i) {
        if (i == best || h[i][c] == 0) continue;
        Int q = floor_div(h[i][c], h[best][c]);
        if (q != 0) {
          for (long j = 0; j < n; ++j) h[i][j] -= q * h[best][j];
        }
        if (h[i][c] != 0) {
          // remainder smaller than pivot; continue reducing in next pass
        }
      }
    }
    long nz = -1;
    for (long i = r; i < m; ++i) {
      if (h[i][c] != 0) {
        nz = i;
        break;
      }
    }
    if (nz < 0) continue;
    std::swap(h[r], h[nz]);
    if (h[r][c] < 0) {
      for (auto& x : h[r]) x = -x;
    }
    for (long i = 0; i < r; ++i) {
      Int q = floor_div(h[i][c], h[r][c]);
      if (q != 0) {
        for (long j = 0; j < n; ++j) h[i][j] -= q * h[r][j];
      }
    }
    ++r;
  }
  h.erase(std::remove_if(h.begin(), h.end(),
                         [](const std::vector<Int>& row) {
                           return std::all_of(row.begin(), row.end(),
                                              [](const Int& x) { return x == 0; });
                         }),
          h.end());
  return h;
}

namespace {

// Left-nullspace vectors of the integer row matrix over GF(p).
std::vector<std::vector<long>> nullspace_mod_p(
    const std::vector<std::vector<Int>>& rows, long p) {
  const long m = static_cast<long>(rows.size());
  const long n = static_cast<long>(rows[0].size());
  // augmented [A mod p | I]
  std::vector<std::vector<long>> a(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    a[static_cast<size_t>(i)].resize(static_cast<size_t>(n + m), 0);
    for (long j = 0; j < n; ++j) {
      Int v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)] % p;
      long vv = v.get_si();
      if (vv < 0) vv += p;
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = vv;
    }
    a[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
  }
  auto inv_mod = [p](long x) {
    long t = 0, newt = 1, r = p, newr = x % p;
    while (newr) {
      long q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    return ((t % p) + p) % p;
  };
  long r = 0;
  for (long c = 0; c < n && r < m; ++c) {
    long piv = -1;
    for (long i = r; i < m; ++i) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] % p) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(piv)]);
    long inv = inv_mod(a[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    for (auto& x : a[static_cast<size_t>(r)]) x = x * inv % p;
    for (long i = 0; i < m; ++i) {
      if (i == r) continue;
      long f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (!f) continue;
      for (long j = 0; j < n + m; ++j) {
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            ((a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
              f * a[static_cast<size_t>(r)][static_cast<size_t>(j)]) % p + p) % p;
      }
    }
    ++r;
  }
  std::vector<std::vector<long>> out;
  for (long i = r; i < m; ++i) {
    bool zero = true;
    for (long j = 0; j < n; ++j) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] % p) {
        zero = false;
        break;
      }
    }
    if (!zero) continue;
    std::vector<long> v(static_cast<size_t>(m));
    bool any = false;
    for (long t = 0; t < m; ++t) {
      v[static_cast<size_t>(t)] = a[static_cast<size_t>(i)][static_cast<size_t>(n + t)];
      any |= v[static_cast<size_t>(t)] != 0;
    }
    if (any) out.push_back(std::move(v));
  }
  return out;
}

std::set<long> small_prime_divisors(const Int& v) {
  std::set<long> out;
  Int x = abs(v);
  for (long d = 2; Int(d) * d <= x; ++d) {
    if (x % d == 0) {
      out.insert(d);
      while (x % d == 0) x = exact_div(x, d);
    }
  }
  if (x > 1) {
    if (!x.fits_slong_p())
      throw std::runtime_error("saturation: pivot has a huge prime factor");
    out.insert(x.get_si());
  }
  return out;
}

}  // namespace

std::vector<std::vector<Int>> saturated_hnf(
    const std::vector<std::vector<Rat>>& rat_rows) {
  if (rat_rows.empty()) return {};
  const long n = static_cast<long>(rat_rows[0].size());
  // RREF basis of the row space, then per-row primitive integer vectors
  RatMat m(static_cast<long>(rat_rows.size()), n);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < n; ++j)
      m.at(i, j) = rat_rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  rref(m);
  std::vector<std::vector<Int>> rows;
  for (long i = 0; i < m.rows; ++i) {
    Int den = 1;
    bool nonzero = false;
    for (long j = 0; j < n; ++j) {
      if (m.at(i, j) != 0) nonzero = true;
      den = lcm(den, Int(m.at(i, j).get_den()));
    }
    if (!nonzero) continue;
    std::vector<Int> row(static_cast<size_t>(n));
    Int g = 0;
    for (long j = 0; j < n; ++j) {
      row[static_cast<size_t>(j)] =
          Int(m.at(i, j).get_num()) * exact_div(den, Int(m.at(i, j).get_den()));
      g = gcd(g, row[static_cast<size_t>(j)]);
    }
    if (g > 1)
      for (auto& x : row) x = exact_div(x, g);
    rows.push_back(std::move(row));
  }
  // p-saturate until the lattice is its own saturation
  while (true) {
    rows = hnf_rows(std::move(rows));
    if (rows.empty()) return rows;
    std::set<long> primes;
    for (const auto& row : rows) {
      const Int& piv = *std::find_if(row.begin(), row.end(),
                                     [](const Int& x) { return x != 0; });
      if (piv != 1) {
        auto ps = small_prime_divisors(piv);
        primes.insert(ps.begin(), ps.end());
      }
    }
    bool progressed = false;
    for (long p : primes) {
      while (true) {
        auto ker = nullspace_mod_p(rows, p);
        if (ker.empty()) break;
        const auto& v = ker.front();
        std::vector<Int> neww(static_cast<size_t>(n), 0);
        long rep = -1;
        for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
          if (v[static_cast<size_t>(i)] % p != 0) rep = i;
          if (v[static_cast<size_t>(i)] == 0) continue;
          for (long j = 0; j < n; ++j)
            neww[static_cast<size_t>(j)] +=
                v[static_cast<size_t>(i)] * rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        for (auto& x : neww) x = exact_div(x, p);
        rows[static_cast<size_t>(rep)] = std::move(neww);
        rows = hnf_rows(std::move(rows));
        progressed = true;
      }
    }
    if (!progressed) return rows;
  }
}

}  // namespace x0plane
