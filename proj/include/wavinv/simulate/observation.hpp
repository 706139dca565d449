// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cstdint>
#include <random>

#include "wavinv/operators/galerkin_matrix.hpp"
#include "wavinv/operators/noise.hpp"
#include "wavinv/random.hpp"
#include "wavinv/wavelet/coeff_vector.hpp"

namespace wavinv {

/// The observable pair (g_ε, K_δ) with its noise levels. `truth` is kept
/// for scoring only and is never read by the estimators.
struct Observation {
  CoeffVector g;
  GalerkinMatrix kdelta;
  double delta = 0.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  CoeffVector truth;

  int max_level() const { return g.max_level(); }

  friend bool operator==(const Observation&, const Observation&) = default;
};

inline constexpr std::uint64_t kOperatorNoiseStream = 1;
inline constexpr std::uint64_t kDataNoiseStream = 2;

/// K f in coefficient space.
inline CoeffVector apply(const GalerkinMatrix& K, const CoeffVector& f) {
  detail::require(f.max_level() == K.max_level, "apply", "dimension mismatch");
  const Eigen::Map<const Eigen::VectorXd> fv(f.values().data(),
                                             static_cast<Eigen::Index>(f.size()));
  const Eigen::VectorXd y = K.entries * fv;
  return CoeffVector(f.max_level(), std::vector<double>(y.data(), y.data() + y.size()));
}

/// g = K f + ε z and K_δ = K + δ Ξ, with z and Ξ drawn from two independent
/// sub-streams of `seed`.
inline Observation observe(const CoeffVector& f, const GalerkinMatrix& K, double delta,
                           double epsilon, std::uint64_t seed) {
  K.validate("observe");
  detail::require(f.max_level() == K.max_level, "observe",
                  "signal level " + std::to_string(f.max_level()) + " != operator level " +
                      std::to_string(K.max_level));
  detail::require(delta >= 0.0 && epsilon >= 0.0, "observe", "noise levels must be >= 0");

  Observation obs;
  obs.kdelta = add_operator_noise(K, delta, derive_seed(seed, kOperatorNoiseStream));
  obs.g = apply(K, f);
  if (epsilon > 0.0) {
    Rng rng = make_rng(derive_seed(seed, kDataNoiseStream));
    std::normal_distribution<double> normal(0.0, 1.0);
    for (double& v : obs.g.values()) v += epsilon * normal(rng);
  }
  obs.delta = delta;
  obs.epsilon = epsilon;
  obs.seed = seed;
  obs.truth = f;
  return obs;
}

}  // namespace wavinv
