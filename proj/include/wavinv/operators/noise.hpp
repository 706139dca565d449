// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cstdint>
#include <random>

#include "wavinv/operators/galerkin_matrix.hpp"
#include "wavinv/random.hpp"

namespace wavinv {

/// K_δ = K + δ Ξ with Ξ i.i.d. N(0,1) entries. Ξ is not symmetrized.
/// Entries are drawn in column-major order from a generator seeded by `seed`.
inline GalerkinMatrix add_operator_noise(const GalerkinMatrix& K, double delta,
                                         std::uint64_t seed) {
  K.validate("add_operator_noise");
  detail::require(delta >= 0.0, "add_operator_noise", "delta must be >= 0");
  GalerkinMatrix out = K;
  if (delta == 0.0) return out;
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double* p = out.entries.data();
  const Eigen::Index count = out.entries.size();
  for (Eigen::Index i = 0; i < count; ++i) p[i] += delta * normal(rng);
  return out;
}

/// n×n standard Gaussian matrix (the operator white noise on V_j).
inline Eigen::MatrixXd gaussian_matrix(Eigen::Index n, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd M(n, n);
  double* p = M.data();
  for (Eigen::Index i = 0; i < M.size(); ++i) p[i] = normal(rng);
  return M;
}

}  // namespace wavinv
