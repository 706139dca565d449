// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "wavinv/estimators/linear.hpp"
#include "wavinv/estimators/thresholding.hpp"

namespace wavinv {

/// Per-level threshold factors from the observed singular values of K_{δ,j1}.
///
/// Singular values are sorted descending and split into level bands of the
/// same sizes as the wavelet levels (1, 1, 2, 4, ...). The factor of level l
/// is gm(j0) / gm(l), gm the geometric mean of the band, so level j0 has
/// factor 1. Index l + 1 holds level l.
inline std::vector<double> empirical_level_factors(const Eigen::MatrixXd& block, int j0, int j1) {
  detail::require(block.rows() == static_cast<Eigen::Index>(space_dim(j1)),
                  "empirical_level_factors", "block must span V_{j1}");
  detail::require(j0 >= -1 && j0 < j1, "empirical_level_factors", "need -1 <= j0 < j1");
  const Eigen::VectorXd sv = singular_values(block);
  std::vector<double> log_gm(static_cast<std::size_t>(j1 + 2));
  for (int l = -1; l <= j1; ++l) {
    double acc = 0.0;
    for (std::size_t i = level_begin(l); i < level_end(l); ++i)
      acc += std::log(sv(static_cast<Eigen::Index>(i)));
    log_gm[static_cast<std::size_t>(l + 1)] = acc / static_cast<double>(level_size(l));
  }
  std::vector<double> factors(log_gm.size());
  const double ref = log_gm[static_cast<std::size_t>(j0 + 1)];
  for (std::size_t i = 0; i < factors.size(); ++i) factors[i] = std::exp(ref - log_gm[i]);
  return factors;
}

/// Nonlinear Estimation I: Galerkin inversion on V_{j1}, then level-dependent
/// hard thresholding at x = max{δ, ε}.
inline Estimate nl1_estimate(const Observation& obs, const NL1Spec& spec) {
  detail::require(spec.j0 >= -1 && spec.j0 < spec.j1 && spec.j1 <= obs.max_level(),
                  "nl1_estimate", "need -1 <= j0 < j1 <= max level");
  detail::require(spec.kappa > 0.0, "nl1_estimate", "kappa must be positive");
  Estimate est = linear_galerkin(obs, LinearSpec{spec.j1, spec.t, spec.tau});
  if (est.cutoff_triggered) return est;

  const double x = std::max(obs.delta, obs.epsilon);
  if (spec.mode == ThresholdMode::Theoretical) {
    est.f = threshold_level_dependent(est.f, x, spec.kappa, spec.t, spec.j0, spec.j1);
  } else {
    const auto n = static_cast<Eigen::Index>(space_dim(spec.j1));
    const auto factors =
        empirical_level_factors(obs.kdelta.entries.topLeftCorner(n, n), spec.j0, spec.j1);
    est.f = threshold_with_level_factors(est.f, x, spec.kappa, factors, spec.j0, spec.j1);
  }
  est.diagnostics.kept_coefficients = count_nonzero(est.f);
  return est;
}

/// Nonlinear Estimation II: threshold the entries of K_{δ,J} at 𝒯(δ) and the
/// data at 𝒯(ε), then invert on V_J. With a cutoff τ the estimate is zero when
/// ‖K̂^{-1}‖_{H^t→L²} > τ or K̂ is singular.
inline Estimate nl2_estimate(const Observation& obs, const NL2Spec& spec) {
  detail::require(spec.J >= 0 && spec.J <= obs.max_level(), "nl2_estimate",
                  "level J outside the observation");
  detail::require(spec.kappa_op > 0.0 && spec.kappa_data > 0.0, "nl2_estimate",
                  "kappas must be positive");
  detail::require(!spec.tau || *spec.tau > 0.0, "nl2_estimate", "tau must be positive");

  const GalerkinMatrix block = galerkin_submatrix(obs.kdelta, spec.J);
  const ThresholdedOperator khat =
      obs.delta > 0.0 ? threshold_operator_entries(block, obs.delta, spec.kappa_op)
                      : detail::threshold_entries_at(block, 0.0);
  const CoeffVector ghat = obs.epsilon > 0.0
                               ? threshold_data(obs.g, obs.epsilon, spec.kappa_data, spec.J)
                               : project_level(obs.g, spec.J);

  Estimate est;
  est.diagnostics.used_level = spec.J;
  est.diagnostics.kept_operator_entries = khat.kept;
  est.diagnostics.kept_coefficients = count_nonzero(ghat);

  if (spec.tau) {
    double inv_ht = INFINITY;
    try {
      inv_ht = inverse_ht_norm(khat.matrix.entries, spec.t);
    } catch (const SingularMatrixError&) {
    }
    est.diagnostics.inv_norm = inv_ht;
    if (!(inv_ht <= *spec.tau)) {
      est.f = CoeffVector(obs.max_level());
      est.cutoff_triggered = true;
      return est;
    }
  }
  const DenseSolve sol =
      solve_dense(khat.matrix.entries, detail::leading(ghat, spec.J), "nl2_estimate");
  if (!spec.tau) est.diagnostics.inv_norm = sol.inv_norm;
  est.f = detail::embed_solution(sol.x, obs.max_level());
  return est;
}

}  // namespace wavinv
