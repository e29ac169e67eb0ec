// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <complex>
#include <vector>

#include "x0plane/zpoly.hpp"

namespace x0plane {

/// Rational lower/upper bounds for sqrt(x), x >= 0, with directed rounding.
Rat sqrt_lower(const Rat& x);
Rat sqrt_upper(const Rat& x);

/// One approximated root: an exact rational center with a certified radius.
/// The closed disk |z - center| <= radius contains at least one root; when
/// the whole cloud is certified, exactly one.
struct RootDisk {
  Rat re, im;
  Rat radius;
  std::complex<double> center_d() const {
    return {re.get_d(), im.get_d()};
  }
};

struct RootCloud {
  std::vector<RootDisk> roots;
  bool certified = false;   ///< all disks pairwise disjoint (simple roots)
  bool met_target = false;  ///< every radius <= target
};

struct RootCloudOptions {
  Rat target_radius = Rat(1, 10000000000L);  // 1e-10
  int max_iter = 200;
  unsigned seed = 0x5eed;
};

/// Simultaneous (Aberth) iteration with exact a-posteriori radii: the
/// Weierstrass correction is evaluated in rational arithmetic at the rounded
/// centers, so every radius is a true bound regardless of float rounding.
RootCloud root_cloud(const ZPoly& f, const RootCloudOptions& opt = {});

struct SeparationBounds {
  Rat min_lower, min_upper;  ///< bounds for the minimal pairwise root distance
  Rat max_lower, max_upper;  ///< bounds for the maximal pairwise root distance
};

/// Certified pairwise separation bounds; requires >= 2 roots and a certified
/// cloud for the lower bounds to be meaningful.
SeparationBounds separations(const RootCloud& cloud);

}  // namespace x0plane
