// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cmath>
#include <optional>
#include <span>

#include "wavinv/wavelet/coeff_vector.hpp"

namespace wavinv {

/// ‖f̂ - f‖_{L²}, via Parseval on the coefficient vectors.
inline double rmse(const CoeffVector& estimate, const CoeffVector& truth) {
  detail::require(estimate.max_level() == truth.max_level(), "rmse", "dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = estimate[i] - truth[i];
    s += d * d;
  }
  return std::sqrt(s);
}

/// Root of the mean squared error over replications, skipping failures.
/// NaN when every replication failed.
inline double root_mean_square(std::span<const std::optional<double>> errors) {
  double s = 0.0;
  std::size_t n = 0;
  for (const auto& e : errors) {
    if (!e) continue;
    s += *e * *e;
    ++n;
  }
  return n ? std::sqrt(s / static_cast<double>(n)) : NAN;
}

}  // namespace wavinv
