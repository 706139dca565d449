// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <string>

#include "wavinv/error.hpp"

namespace wavinv {

/// r(s,t,d) = 2s / (2s + 2t + d).
inline double rate_exponent_dense(double s, double t, int d = 1) {
  detail::require(s > 0.0 && t > 0.0, "rate_exponent_dense", "s and t must be positive");
  detail::require(d >= 1, "rate_exponent_dense", "d must be >= 1");
  return 2.0 * s / (2.0 * s + 2.0 * t + d);
}

/// r̃(s,p,t,d) = (s + d/2 - d/p) / (s + t + d/2 - d/p), defined when B^s_{p,p} ⊂ L².
inline double rate_exponent_sparse(double s, double p, double t, int d = 1) {
  detail::require(p > 0.0 && t > 0.0 && d >= 1, "rate_exponent_sparse", "invalid parameters");
  const double eff = s + d / 2.0 - d / p;
  detail::require(eff >= 0.0, "rate_exponent_sparse",
                  "Sobolev embedding violated: s - d/p + d/2 = " + std::to_string(eff));
  return eff / (eff + t);
}

enum class SmoothnessRegion { Dense, Sparse };

/// Dense iff 1/p < 1/2 + s/(2t+d); the critical line itself is sparse.
inline SmoothnessRegion classify_region(double s, double p, double t, int d = 1) {
  detail::require(p > 0.0 && t > 0.0 && d >= 1, "classify_region", "invalid parameters");
  return (1.0 / p < 0.5 + s / (2.0 * t + d)) ? SmoothnessRegion::Dense : SmoothnessRegion::Sparse;
}

}  // namespace wavinv
