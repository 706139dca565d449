// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <Eigen/Dense>
#include <string>

#include "wavinv/error.hpp"
#include "wavinv/wavelet/multi_index.hpp"

namespace wavinv {

/// Operator T on V_J in wavelet coordinates: entry (λ, λ') = <Tψ_λ, ψ_λ'>,
/// rows and columns in flattened level-major order. Because the order is
/// level-major, T_j is the leading 2^{j+1} block.
struct GalerkinMatrix {
  int max_level = -1;
  Eigen::MatrixXd entries;
  double illposedness = 0.0;  // degree t, metadata only
  std::string kernel = "custom";

  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }

  void validate(const char* where) const {
    detail::require(max_level >= -1 && max_level <= kMaxSupportedLevel, where,
                    "max level out of range");
    detail::require(entries.rows() == entries.cols(), where, "matrix must be square");
    detail::require(static_cast<std::size_t>(entries.rows()) == space_dim(max_level), where,
                    "matrix size does not match 2^{J+1}");
  }

  friend bool operator==(const GalerkinMatrix& a, const GalerkinMatrix& b) {
    return a.max_level == b.max_level && a.illposedness == b.illposedness &&
           a.kernel == b.kernel && a.entries.rows() == b.entries.rows() &&
           a.entries.cols() == b.entries.cols() && a.entries == b.entries;
  }
};

/// T_j = P_j T|_{V_j}.
inline GalerkinMatrix galerkin_submatrix(const GalerkinMatrix& K, int j) {
  K.validate("galerkin_submatrix");
  detail::require(j >= -1 && j <= K.max_level, "galerkin_submatrix",
                  "level " + std::to_string(j) + " outside [-1, " + std::to_string(K.max_level) +
                      "]");
  const auto n = static_cast<Eigen::Index>(space_dim(j));
  return GalerkinMatrix{j, K.entries.topLeftCorner(n, n), K.illposedness, K.kernel};
}

/// max |K - Kᵀ|.
inline double asymmetry(const GalerkinMatrix& K) {
  return (K.entries - K.entries.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace wavinv
