// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "wavinv/operators/galerkin_matrix.hpp"
#include "wavinv/operators/kernel.hpp"
#include "wavinv/wavelet/dwt.hpp"

namespace wavinv {

/// A <- W A Wᵀ with W the periodized DWT: columns first, then rows.
inline void wavelet_transform_2d(Eigen::MatrixXd& A, const WaveletFilter& filter) {
  const Eigen::Index n = A.rows();
  detail::require(A.cols() == n, "wavelet_transform_2d", "matrix must be square");
  std::vector<double> work;
  for (Eigen::Index c = 0; c < n; ++c)
    dwt_inplace(std::span<double>(A.col(c).data(), static_cast<std::size_t>(n)), filter, work);
  A.transposeInPlace();
  for (Eigen::Index c = 0; c < n; ++c)
    dwt_inplace(std::span<double>(A.col(c).data(), static_cast<std::size_t>(n)), filter, work);
  A.transposeInPlace();
}

namespace detail {

inline void check_build_level(int max_level, const WaveletFilter& filter, const char* where) {
  require(max_level >= 0 && max_level <= 13, where, "J_max must be in [0, 13]");
  require(space_dim(max_level) >= filter.support(), where,
          "J_max too small for filter support " + std::to_string(filter.support()));
}

}  // namespace detail

/// Stiffness matrix of the log potential on V_{J_max}.
///
/// Scaling-basis entries use the midpoint rule h·k(x_m, x_n) off the
/// diagonal. On diagonal cells the kernel is replaced by -log(π|x-y|/2),
/// whose cell integral is exact: h^{-1}∫∫ = h(3/2 - log(πh/2)).
inline GalerkinMatrix build_log_potential(int max_level, const WaveletFilter& filter) {
  detail::require(max_level >= 3, "build_log_potential", "J_max must be >= 3");
  detail::check_build_level(max_level, filter, "build_log_potential");
  const auto n = static_cast<Eigen::Index>(space_dim(max_level));
  const double h = 1.0 / static_cast<double>(n);

  // Translation invariant: a circulant in the scaling basis.
  std::vector<double> row(static_cast<std::size_t>(n));
  row[0] = h * (1.5 - std::log(std::numbers::pi * h / 2.0));
  for (Eigen::Index m = 1; m < n; ++m)
    row[static_cast<std::size_t>(m)] = h * LogPotential::value(static_cast<double>(m) * h, 0.0);

  Eigen::MatrixXd A(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      A(r, c) = row[static_cast<std::size_t>((r - c + n) % n)];
  wavelet_transform_2d(A, filter);
  return GalerkinMatrix{max_level, std::move(A), 1.0, "log-potential"};
}

/// K⁰ = diag(2^{-(|λ|+1)t}).
inline GalerkinMatrix build_diagonal(double t, int max_level) {
  detail::require(t > 0.0, "build_diagonal", "t must be positive");
  detail::require(max_level >= -1 && max_level <= 13, "build_diagonal", "J_max out of range");
  const auto n = static_cast<Eigen::Index>(space_dim(max_level));
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i)
    d(i) = std::exp2(-(level_of(static_cast<std::size_t>(i)) + 1) * t);
  return GalerkinMatrix{max_level, d.asDiagonal().toDenseMatrix(), t, "diagonal"};
}

/// Midpoint-rule Galerkin matrix of an arbitrary continuous kernel.
inline GalerkinMatrix build_from_kernel(const CustomKernel& spec, int max_level,
                                        const WaveletFilter& filter) {
  detail::check_build_level(max_level, filter, "build_from_kernel");
  detail::require(static_cast<bool>(spec.kernel), "build_from_kernel", "empty kernel");
  const auto x = grid_midpoints(max_level);
  const auto n = static_cast<Eigen::Index>(x.size());
  const double h = 1.0 / static_cast<double>(n);
  Eigen::MatrixXd A(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      A(r, c) = h * spec.kernel(x[static_cast<std::size_t>(r)], x[static_cast<std::size_t>(c)]);
  wavelet_transform_2d(A, filter);
  return GalerkinMatrix{max_level, std::move(A), spec.t, spec.label};
}

inline GalerkinMatrix build_operator(const KernelSpec& spec, int max_level,
                                     const WaveletFilter& filter) {
  return std::visit(
      [&](const auto& k) -> GalerkinMatrix {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LogPotential>) return build_log_potential(max_level, filter);
        else if constexpr (std::is_same_v<K, DiagonalKernel>) return build_diagonal(k.t, max_level);
        else return build_from_kernel(k, max_level, filter);
      },
      spec);
}

}  // namespace wavinv
