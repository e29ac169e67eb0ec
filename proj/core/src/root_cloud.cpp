// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "x0plane/root_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace x0plane {

namespace {

// exact complex rational arithmetic
struct QC {
  Rat re, im;
};

QC qc_sub(const QC& a, const QC& b) { return {a.re - b.re, a.im - b.im}; }
QC qc_mul(const QC& a, const QC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rat qc_norm2(const QC& a) { return a.re * a.re + a.im * a.im; }

QC eval_poly(const ZPoly& f, const QC& z) {
  QC acc{Rat(0), Rat(0)};
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) {
    acc = qc_mul(acc, z);
    acc.re += Rat(*it);
  }
  return acc;
}

std::complex<double> eval_poly_d(const std::vector<std::complex<double>>& c,
                                 std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

Rat sqrt_lower(const Rat& x) {
  if (x < 0) throw std::invalid_argument("sqrt of negative rational");
  if (x == 0) return Rat(0);
  // floor(sqrt(num * den * S^2)) / (den * S) <= sqrt(num/den)
  const Int scale = Int("100000000000000000000");  // 1e20
  Int num(x.get_num()), den(x.get_den());
  Int t = num * den * scale * scale;
  Int r;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  Rat out(r, den * scale);
  out.canonicalize();
  return out;
}

Rat sqrt_upper(const Rat& x) {
  if (x < 0) throw std::invalid_argument("sqrt of negative rational");
  if (x == 0) return Rat(0);
  const Int scale = Int("100000000000000000000");
  Int num(x.get_num()), den(x.get_den());
  Int t = num * den * scale * scale;
  Int r;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  if (r * r != t) r += 1;
  Rat out(r, den * scale);
  out.canonicalize();
  return out;
}

RootCloud root_cloud(const ZPoly& f, const RootCloudOptions& opt) {
  const long n = f.degree();
  if (n < 1) throw std::invalid_argument("root_cloud needs degree >= 1");

  std::vector<std::complex<double>> cd(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) cd[i] = f.c[i].get_d();
  std::vector<std::complex<double>> dd(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i)
    dd[static_cast<size_t>(i - 1)] = static_cast<double>(i) * cd[static_cast<size_t>(i)];

  // Cauchy-style inclusion radius for start points
  double lead = std::abs(cd.back());
  double radius = 0;
  for (size_t i = 0; i + 1 < cd.size(); ++i)
    radius = std::max(radius, std::abs(cd[i]) / lead);
  radius = 1.0 + radius;

  std::mt19937 rng(opt.seed);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  const double two_pi = 2 * std::numbers::pi;
  double phase0 = jitter(rng) * two_pi;
  for (long i = 0; i < n; ++i) {
    double ang = phase0 + two_pi * (static_cast<double>(i) + 0.354) /
                              static_cast<double>(n);
    z[static_cast<size_t>(i)] = std::polar(0.5 + radius, ang);
  }

  // Aberth-Ehrlich iterations
  for (int it = 0; it < opt.max_iter; ++it) {
    double worst = 0;
    for (long i = 0; i < n; ++i) {
      auto zi = z[static_cast<size_t>(i)];
      auto fv = eval_poly_d(cd, zi);
      auto dv = eval_poly_d(dd, zi);
      std::complex<double> newton = (dv == 0.0) ? 0.0 : fv / dv;
      std::complex<double> rep = 0;
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        auto diff = zi - z[static_cast<size_t>(j)];
        if (diff == 0.0) diff = 1e-300;
        rep += 1.0 / diff;
      }
      std::complex<double> denom = 1.0 - newton * rep;
      std::complex<double> step = (denom == 0.0) ? newton : newton / denom;
      z[static_cast<size_t>(i)] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-16 * (1.0 + radius)) break;
  }

  // exact a-posteriori radii at the rounded centers (Weierstrass/Smith disks):
  // all roots lie in the union of disks |z - z_i| <= n * |f(z_i) / (lc *
  // prod_{j != i} (z_i - z_j))|, and disjointness makes each disk contain
  // exactly one root.
  RootCloud cloud;
  std::vector<QC> zq(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    zq[static_cast<size_t>(i)] = {Rat(z[static_cast<size_t>(i)].real()),
                                  Rat(z[static_cast<size_t>(i)].imag())};
  }
  for (long i = 0; i < n; ++i) {
    QC num = eval_poly(f, zq[static_cast<size_t>(i)]);
    QC den{Rat(f.leading()), Rat(0)};
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      den = qc_mul(den, qc_sub(zq[static_cast<size_t>(i)], zq[static_cast<size_t>(j)]));
    }
    Rat n2 = qc_norm2(num);
    Rat d2 = qc_norm2(den);
    Rat r;
    if (d2 == 0) {
      r = Rat(Int(1) << 60);  // coincident centers: no useful bound
    } else {
      r = Rat(n) * sqrt_upper(n2 / d2);
    }
    cloud.roots.push_back(
        {zq[static_cast<size_t>(i)].re, zq[static_cast<size_t>(i)].im, r});
  }

  cloud.met_target = std::all_of(
      cloud.roots.begin(), cloud.roots.end(),
      [&](const RootDisk& d) { return d.radius <= opt.target_radius; });
  cloud.certified = true;
  for (long i = 0; i < n && cloud.certified; ++i) {
    for (long j = i + 1; j < n; ++j) {
      const auto& a = cloud.roots[static_cast<size_t>(i)];
      const auto& b = cloud.roots[static_cast<size_t>(j)];
      Rat dx = a.re - b.re, dy = a.im - b.im;
      Rat rr = a.radius + b.radius;
      if (dx * dx + dy * dy <= rr * rr) {
        cloud.certified = false;
        break;
      }
    }
  }
  return cloud;
}

SeparationBounds separations(const RootCloud& cloud) {
  const size_t n = cloud.roots.size();
  if (n < 2) throw std::invalid_argument("separations needs >= 2 roots");
  SeparationBounds out;
  bool first = true;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const auto& a = cloud.roots[i];
      const auto& b = cloud.roots[j];
      Rat dx = a.re - b.re, dy = a.im - b.im;
      Rat dist2 = dx * dx + dy * dy;
      Rat lo = sqrt_lower(dist2) - a.radius - b.radius;
      if (lo < 0) lo = 0;
      Rat hi = sqrt_upper(dist2) + a.radius + b.radius;
      if (first) {
        out.min_lower = out.max_lower = lo;
        out.min_upper = out.max_upper = hi;
        first = false;
      } else {
        if (hi < out.min_upper) out.min_upper = hi;
        if (lo < out.min_lower) out.min_lower = lo;
        if (hi > out.max_upper) out.max_upper = hi;
        if (lo > out.max_lower) out.max_lower = lo;
      }
    }
  }
  return out;
}

}  // namespace x0plane
