// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cmath>
#include <string>

#include "wavinv/error.hpp"
#include "wavinv/wavelet/coeff_vector.hpp"

namespace wavinv {

/// Sequence-space norming of B^s_{p,p}:
///   ( Σ_j 2^{j(s + d/2 - d/p) p} Σ_k |c_{jk}|^p )^{1/p},
/// with the level -1 coefficient weighted 1. Only defined up to norm
/// equivalence, so compare ratios and slopes, not absolute values.
inline double besov_norm(const CoeffVector& coeffs, double s, double p, int d = 1) {
  detail::require(p >= 1.0, "besov_norm", "p must be >= 1 (got " + std::to_string(p) + ")");
  detail::require(d >= 1, "besov_norm", "dimension must be >= 1");
  const double exponent = s + d / 2.0 - d / p;
  double total = std::pow(std::abs(coeffs[0]), p);
  for (int j = 0; j <= coeffs.max_level(); ++j) {
    double level_sum = 0.0;
    for (double c : coeffs.level(j)) level_sum += std::pow(std::abs(c), p);
    if (level_sum > 0.0) total += std::exp2(j * exponent * p) * level_sum;
  }
  return std::pow(total, 1.0 / p);
}

inline double sobolev_norm(const CoeffVector& coeffs, double s) {
  return besov_norm(coeffs, s, 2.0, 1);
}

}  // namespace wavinv
