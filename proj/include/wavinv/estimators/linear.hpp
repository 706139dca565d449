// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cmath>

#include "wavinv/estimators/estimate.hpp"
#include "wavinv/operators/norms.hpp"
#include "wavinv/simulate/observation.hpp"

namespace wavinv {

namespace detail {

inline Eigen::VectorXd leading(const CoeffVector& c, int j) {
  const auto n = static_cast<Eigen::Index>(space_dim(j));
  return Eigen::Map<const Eigen::VectorXd>(c.values().data(), n);
}

inline CoeffVector embed_solution(const Eigen::VectorXd& u, int max_level) {
  CoeffVector out(max_level);
  for (Eigen::Index i = 0; i < u.size(); ++i) out[static_cast<std::size_t>(i)] = u(i);
  return out;
}

}  // namespace detail

/// Galerkin estimator: solve K_{δ,j} u = P_j g on V_j. With a cutoff τ the
/// estimate is zero whenever ‖K_{δ,j}^{-1}‖ > τ 2^{jt} (or K_{δ,j} is singular).
inline Estimate linear_galerkin(const Observation& obs, const LinearSpec& spec) {
  detail::require(spec.j >= -1 && spec.j <= obs.max_level(), "linear_galerkin",
                  "level j outside the observation");
  detail::require(!spec.tau || *spec.tau > 0.0, "linear_galerkin", "tau must be positive");
  const auto n = static_cast<Eigen::Index>(space_dim(spec.j));
  const Eigen::MatrixXd block = obs.kdelta.entries.topLeftCorner(n, n);
  const Eigen::VectorXd sv = singular_values(block);
  const bool singular = numerically_singular(sv);

  Estimate est;
  est.diagnostics.used_level = spec.j;
  est.diagnostics.inv_norm = singular ? INFINITY : 1.0 / sv(sv.size() - 1);
  if (spec.tau && (singular || est.diagnostics.inv_norm > *spec.tau * std::exp2(spec.j * spec.t))) {
    est.f = CoeffVector(obs.max_level());
    est.cutoff_triggered = true;
    return est;
  }
  if (singular) detail::throw_singular("linear_galerkin", sv);

  const Eigen::VectorXd u = block.partialPivLu().solve(detail::leading(obs.g, spec.j));
  est.f = detail::embed_solution(u, obs.max_level());
  est.diagnostics.kept_coefficients = count_nonzero(est.f);
  est.diagnostics.kept_operator_entries = static_cast<std::size_t>(block.size());
  return est;
}

}  // namespace wavinv
