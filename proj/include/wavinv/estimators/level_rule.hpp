// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "wavinv/operators/galerkin_matrix.hpp"
#include "wavinv/operators/norms.hpp"

namespace wavinv {

/// Right-hand side of the level rule: c δ dim(V_{j+1}) or c δ √dim(V_{j+1}).
enum class LevelRuleScale { Dim, SqrtDim };

/// J = min{ j >= 0 : λ_min(K_{δ,j+1}) < c δ dim(V_{j+1}) }, λ_min taken on the
/// symmetric part. Returns j_cap when no j < j_cap triggers.
inline int select_level(const std::function<GalerkinMatrix(int)>& submatrix_at, double delta,
                        double c, int j_cap, LevelRuleScale scale = LevelRuleScale::Dim) {
  detail::require(delta > 0.0 && c > 0.0, "select_level", "delta and c must be positive");
  detail::require(j_cap >= 0, "select_level", "j_cap must be >= 0");
  for (int j = 0; j < j_cap; ++j) {
    const double dim = static_cast<double>(space_dim(j + 1));
    const double rhs = c * delta * (scale == LevelRuleScale::Dim ? dim : std::sqrt(dim));
    if (min_symmetric_eigenvalue(submatrix_at(j + 1).entries) < rhs) return j;
  }
  return j_cap;
}

/// Rule on the leading blocks of an observed matrix; the cap defaults to J_max - 1.
inline int select_level(const GalerkinMatrix& Kd, double delta, double c,
                        LevelRuleScale scale = LevelRuleScale::Dim, int j_cap = -1) {
  Kd.validate("select_level");
  const int cap = j_cap < 0 ? Kd.max_level - 1 : std::min(j_cap, Kd.max_level - 1);
  return select_level([&](int j) { return galerkin_submatrix(Kd, j); }, delta, c, cap, scale);
}

/// Level balancing bias and variance for smoothness s: 2^j ≈ x^{-2/(2s+2t+d)}.
inline int oracle_level(double s, double t, int d, double noise, int max_level) {
  detail::require(noise > 0.0 && noise < 1.0, "oracle_level", "noise must lie in (0, 1)");
  const double j = 2.0 / (2.0 * s + 2.0 * t + d) * std::log2(1.0 / noise);
  return std::clamp(static_cast<int>(std::lround(j)), 0, max_level);
}

/// NL-II level of the adaptive result: 2^J ≈ C min{ε^{-1/t}, (δ√|log δ|)^{-1/(t+d)}}.
/// A zero noise level drops its term.
inline int adaptive_level(double epsilon, double delta, double t, int d, int max_level,
                          double constant = 1.0) {
  detail::require(t > 0.0 && d >= 1 && constant > 0.0, "adaptive_level", "invalid parameters");
  detail::require(epsilon >= 0.0 && epsilon < 1.0 && delta >= 0.0 && delta < 1.0,
                  "adaptive_level", "noise levels must lie in [0, 1)");
  double bound = std::numeric_limits<double>::infinity();
  if (epsilon > 0.0) bound = std::min(bound, std::pow(epsilon, -1.0 / t));
  if (delta > 0.0)
    bound = std::min(bound, std::pow(delta * std::sqrt(std::abs(std::log(delta))), -1.0 / (t + d)));
  if (!std::isfinite(bound)) return max_level;
  const double j = std::log2(constant * bound);
  return std::clamp(static_cast<int>(std::floor(j)), 0, max_level);
}

}  // namespace wavinv
