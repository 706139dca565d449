// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavinv/error.hpp"
#include "wavinv/wavelet/multi_index.hpp"

namespace wavinv {

/// Wavelet coefficients of an L²([0,1)) function up to `max_level`, in
/// flattened level-major order. The basis is orthonormal, so the L² norm of
/// the function is the Euclidean norm of `values`.
class CoeffVector {
 public:
  CoeffVector() = default;

  explicit CoeffVector(int max_level)
      : max_level_(check_level(max_level)), values_(space_dim(max_level), 0.0) {}

  CoeffVector(int max_level, std::vector<double> values)
      : max_level_(check_level(max_level)), values_(std::move(values)) {
    detail::require(values_.size() == space_dim(max_level_), "CoeffVector",
                    "expected " + std::to_string(space_dim(max_level_)) + " values, got " +
                        std::to_string(values_.size()));
  }

  int max_level() const noexcept { return max_level_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  const std::vector<double>& vector() const noexcept { return values_; }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  double at(const MultiIndex& mi) const { return values_.at(flatten(mi)); }
  double& at(const MultiIndex& mi) { return values_.at(flatten(mi)); }

  /// Coefficients of one level.
  std::span<const double> level(int j) const {
    detail::require(j >= -1 && j <= max_level_, "CoeffVector::level", "level out of range");
    return std::span<const double>(values_).subspan(level_begin(j), level_size(j));
  }

  double norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
  }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  static int check_level(int j) {
    detail::require(j >= -1 && j <= kMaxSupportedLevel, "CoeffVector",
                    "max level out of range: " + std::to_string(j));
    return j;
  }

  int max_level_ = -1;
  std::vector<double> values_ = std::vector<double>(1, 0.0);
};

/// Orthogonal projection P_j: keeps |λ| <= j, zeroes the rest.
inline CoeffVector project_level(const CoeffVector& coeffs, int j) {
  detail::require(j >= -1 && j <= coeffs.max_level(), "project_level",
                  "level " + std::to_string(j) + " outside [-1, " +
                      std::to_string(coeffs.max_level()) + "]");
  CoeffVector out = coeffs;
  for (std::size_t i = space_dim(j); i < out.size(); ++i) out[i] = 0.0;
  return out;
}

/// Restriction to V_j as a shorter vector (max level j).
inline CoeffVector truncate(const CoeffVector& coeffs, int j) {
  detail::require(j >= -1 && j <= coeffs.max_level(), "truncate", "level out of range");
  const auto v = coeffs.values();
  return CoeffVector(j, std::vector<double>(v.begin(), v.begin() + space_dim(j)));
}

/// Zero-padding of a V_j vector into a larger max level.
inline CoeffVector embed(const CoeffVector& coeffs, int max_level) {
  detail::require(max_level >= coeffs.max_level(), "embed", "target level too small");
  CoeffVector out(max_level);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i];
  return out;
}

}  // namespace wavinv
