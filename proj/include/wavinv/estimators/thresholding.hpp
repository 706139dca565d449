// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "wavinv/operators/galerkin_matrix.hpp"
#include "wavinv/wavelet/coeff_vector.hpp"

namespace wavinv {

/// 𝒯(x) = κ x √|ln x|; 𝒯(0) = 0 by continuity.
inline double noise_threshold(double x, double kappa) {
  detail::require(x >= 0.0, "noise_threshold", "noise level must be >= 0");
  if (x == 0.0) return 0.0;
  return kappa * x * std::sqrt(std::abs(std::log(x)));
}

/// Level-dependent hard thresholding 𝒮_x: keep c_λ iff
/// |c_λ| >= κ 2^{|λ|t} x √((|λ|-j0)_+), drop all levels above j1.
inline CoeffVector threshold_level_dependent(const CoeffVector& coeffs, double x, double kappa,
                                             double t, int j0, int j1) {
  detail::require(j0 >= -1 && j0 < j1 && j1 <= coeffs.max_level(), "threshold_level_dependent",
                  "need -1 <= j0 < j1 <= max level");
  CoeffVector out(coeffs.max_level());
  for (std::size_t i = 0; i < space_dim(j1); ++i) {
    const int lev = level_of(i);
    const double excess = std::max(lev - j0, 0);
    const double thr = kappa * std::exp2(lev * t) * x * std::sqrt(excess);
    if (std::abs(coeffs[i]) >= thr) out[i] = coeffs[i];
  }
  return out;
}

/// Hard thresholding with an arbitrary per-level factor: levels <= j0 kept,
/// level l in (j0, j1] kept iff |c| >= κ x factors[l + 1], levels > j1 dropped.
inline CoeffVector threshold_with_level_factors(const CoeffVector& coeffs, double x, double kappa,
                                                std::span<const double> factors, int j0, int j1) {
  detail::require(j0 >= -1 && j0 < j1 && j1 <= coeffs.max_level(), "threshold_with_level_factors",
                  "need -1 <= j0 < j1 <= max level");
  detail::require(factors.size() >= static_cast<std::size_t>(j1 + 2),
                  "threshold_with_level_factors", "one factor per level -1..j1 required");
  CoeffVector out(coeffs.max_level());
  for (std::size_t i = 0; i < space_dim(j1); ++i) {
    const int lev = level_of(i);
    const double thr = lev <= j0 ? 0.0 : kappa * x * factors[static_cast<std::size_t>(lev + 1)];
    if (std::abs(coeffs[i]) >= thr) out[i] = coeffs[i];
  }
  return out;
}

struct ThresholdedOperator {
  GalerkinMatrix matrix;
  std::size_t kept = 0;
};

namespace detail {

inline ThresholdedOperator threshold_entries_at(const GalerkinMatrix& Kd, double thr) {
  ThresholdedOperator out{Kd, 0};
  double* p = out.matrix.entries.data();
  for (Eigen::Index i = 0; i < out.matrix.entries.size(); ++i) {
    if (std::abs(p[i]) >= thr) ++out.kept;
    else p[i] = 0.0;
  }
  return out;
}

inline CoeffVector threshold_data_at(const CoeffVector& g, double thr, int J) {
  detail::require(J >= -1 && J <= g.max_level(), "threshold_data", "level out of range");
  CoeffVector out(g.max_level());
  for (std::size_t i = 0; i < space_dim(J); ++i)
    if (std::abs(g[i]) >= thr) out[i] = g[i];
  return out;
}

}  // namespace detail

/// Entrywise hard thresholding of the operator at 𝒯(δ).
inline ThresholdedOperator threshold_operator_entries(const GalerkinMatrix& Kd, double delta,
                                                      double kappa) {
  detail::require(delta > 0.0 && delta < 1.0, "threshold_operator_entries",
                  "delta must lie in (0, 1)");
  detail::require(kappa > 0.0, "threshold_operator_entries", "kappa must be positive");
  return detail::threshold_entries_at(Kd, noise_threshold(delta, kappa));
}

/// Classical hard thresholding of the data at 𝒯(ε), restricted to |λ| <= J.
inline CoeffVector threshold_data(const CoeffVector& g, double epsilon, double kappa, int J) {
  detail::require(epsilon > 0.0 && epsilon < 1.0, "threshold_data", "epsilon must lie in (0, 1)");
  detail::require(kappa > 0.0, "threshold_data", "kappa must be positive");
  return detail::threshold_data_at(g, noise_threshold(epsilon, kappa), J);
}

}  // namespace wavinv
