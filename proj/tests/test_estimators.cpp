// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "wavinv/estimators/level_rule.hpp"
#include "wavinv/estimators/linear.hpp"
#include "wavinv/estimators/nonlinear.hpp"
#include "wavinv/estimators/rates.hpp"
#include "wavinv/operators/build.hpp"
#include "wavinv/operators/noise.hpp"
#include "wavinv/simulate/observation.hpp"
#include "wavinv/simulate/signal.hpp"

namespace wavinv {
namespace {

const WaveletFilter& db8() {
  static const WaveletFilter f = WaveletFilter::daubechies(8);
  return f;
}

double distance(const CoeffVector& a, const CoeffVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

TEST(Rates, DenseExponent) {
  EXPECT_DOUBLE_EQ(rate_exponent_dense(1.0, 1.0, 1), 0.4);
  EXPECT_DOUBLE_EQ(rate_exponent_dense(1.5, 1.0, 1), 0.5);
  EXPECT_NEAR(rate_exponent_dense(1000.0, 1.0, 1), 0.9985, 1e-4);
  double prev = 0.0;
  for (double s = 0.1; s < 50.0; s *= 1.5) {
    const double r = rate_exponent_dense(s, 1.0, 1);
    EXPECT_GT(r, prev);
    EXPECT_LT(r, 1.0);
    prev = r;
  }
  EXPECT_THROW(rate_exponent_dense(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(rate_exponent_dense(1.0, -1.0), std::invalid_argument);
}

TEST(Rates, SparseExponentAndRegions) {
  EXPECT_DOUBLE_EQ(rate_exponent_sparse(1.0, 1.0, 1.0, 1), 1.0 / 3.0);
  EXPECT_THROW(rate_exponent_sparse(0.2, 1.0, 1.0, 1), std::invalid_argument);
  for (double s : {0.01, 0.5, 1.0, 3.0})
    EXPECT_EQ(classify_region(s, 2.0, 1.0, 1), SmoothnessRegion::Dense);
  // 1/p = 1/2 + s/(2t+d) exactly: s = 1.5, t = 1, d = 1 gives p = 1.
  EXPECT_EQ(classify_region(1.5, 1.0, 1.0, 1), SmoothnessRegion::Sparse);
  EXPECT_EQ(classify_region(1.5, 0.9, 1.0, 1), SmoothnessRegion::Sparse);
  EXPECT_EQ(classify_region(1.5, 1.1, 1.0, 1), SmoothnessRegion::Dense);
}

TEST(Threshold, NoiseThresholdValues) {
  EXPECT_EQ(noise_threshold(0.0, 1.5), 0.0);
  EXPECT_NEAR(noise_threshold(1e-3, 1.5), 3.942e-3, 1e-6);
  EXPECT_NEAR(noise_threshold(1e-5, 1.5), 5.09e-5, 1e-7);
  EXPECT_THROW(noise_threshold(-1.0, 1.0), std::invalid_argument);
}

TEST(Threshold, LevelDependentExample) {
  CoeffVector c(7);
  c.at({6, 0}) = 0.03;
  c.at({6, 1}) = 0.04;
  c.at({4, 2}) = 1e-9;  // |λ| <= j0 always survives
  c.at({7, 0}) = 5.0;   // above j1: dropped
  const auto out = threshold_level_dependent(c, 1e-3, 0.4, 1.0, 4, 6);
  EXPECT_NEAR(0.4 * 64 * 1e-3 * std::sqrt(2.0), 0.0362, 1e-4);
  EXPECT_EQ(out.at({6, 0}), 0.0);
  EXPECT_EQ(out.at({6, 1}), 0.04);
  EXPECT_EQ(out.at({4, 2}), 1e-9);
  EXPECT_EQ(out.at({7, 0}), 0.0);
  EXPECT_THROW(threshold_level_dependent(c, 1e-3, 0.4, 1.0, 6, 6), std::invalid_argument);
  EXPECT_THROW(threshold_level_dependent(c, 1e-3, 0.4, 1.0, 2, 8), std::invalid_argument);
}

TEST(Threshold, OperatorAndDataExamples) {
  GalerkinMatrix K{0, Eigen::MatrixXd::Zero(2, 2), 1.0, "test"};
  K.entries << 3.9e-3, 4.0e-3, -4.0e-3, -3.9e-3;
  const auto T = threshold_operator_entries(K, 1e-3, 1.5);
  EXPECT_EQ(T.kept, 2u);
  EXPECT_EQ(T.matrix.entries(0, 0), 0.0);
  EXPECT_EQ(T.matrix.entries(0, 1), 4.0e-3);
  EXPECT_EQ(T.matrix.entries(1, 0), -4.0e-3);
  EXPECT_THROW(threshold_operator_entries(K, 0.0, 1.5), std::invalid_argument);
  EXPECT_THROW(threshold_operator_entries(K, 1.0, 1.5), std::invalid_argument);

  CoeffVector g(3, std::vector<double>(16, 4e-5));
  EXPECT_EQ(count_nonzero(threshold_data(g, 1e-5, 1.5, 3)), 0u);
  g[5] = 6e-5, g[12] = -6e-5;
  const auto kept = threshold_data(g, 1e-5, 1.5, 2);  // index 12 is level 3
  EXPECT_EQ(count_nonzero(kept), 1u);
  EXPECT_EQ(kept[5], 6e-5);
  EXPECT_THROW(threshold_data(g, 1.5, 1.5, 2), std::invalid_argument);
}

TEST(Threshold, SmallDeltaKeepsEveryNonzeroEntry) {
  const auto K = build_log_potential(5, db8());
  double smallest = INFINITY;
  std::size_t nonzero = 0;
  for (Eigen::Index i = 0; i < K.entries.size(); ++i)
    if (const double v = std::abs(K.entries.data()[i]); v > 0.0) smallest = std::min(smallest, v), ++nonzero;
  ASSERT_TRUE(std::isfinite(smallest));
  double delta = 1e-3;
  while (noise_threshold(delta, 1.5) >= smallest) delta /= 10.0;
  const auto T = threshold_operator_entries(K, delta, 1.5);
  EXPECT_EQ(T.kept, nonzero);
  EXPECT_EQ(T.matrix, K);
}

// Property suite over 1000 random inputs: brute-force scalar oracles,
// idempotence, and nested kept sets in κ.
TEST(Threshold, RandomizedProperties) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int J = 3 + trial % 4;
    const auto c = testing::random_coeffs(J, 10000 + trial, 0.05);
    const double x = std::pow(10.0, -1.0 - 4.0 * uni(rng));
    const double kappa = 0.1 + 2.0 * uni(rng);
    const double t = 0.5 + uni(rng);
    const int j1 = 1 + trial % J;
    const int j0 = -1 + trial % (j1 + 1);

    const auto a = threshold_level_dependent(c, x, kappa, t, j0, j1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const MultiIndex mi = unflatten(i);
      const double thr = kappa * std::pow(2.0, mi.level * t) * x *
                         std::sqrt(mi.level > j0 ? static_cast<double>(mi.level - j0) : 0.0);
      const double expected = (mi.level <= j1 && std::abs(c[i]) >= thr) ? c[i] : 0.0;
      ASSERT_EQ(a[i], expected) << "trial " << trial << " index " << i;
    }
    EXPECT_EQ(threshold_level_dependent(a, x, kappa, t, j0, j1), a);

    const double eps = std::min(x, 0.5);
    const auto d = threshold_data(c, eps, kappa, j1);
    const double tdata = kappa * eps * std::sqrt(-std::log(eps));
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double expected = (level_of(i) <= j1 && std::abs(c[i]) >= tdata) ? c[i] : 0.0;
      ASSERT_EQ(d[i], expected);
    }
    EXPECT_EQ(threshold_data(d, eps, kappa, j1), d);

    const auto wider = threshold_level_dependent(c, x, 2.0 * kappa, t, j0, j1);
    const auto wider_d = threshold_data(c, eps, 2.0 * kappa, j1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (wider[i] != 0.0) EXPECT_NE(a[i], 0.0);
      if (wider_d[i] != 0.0) EXPECT_NE(d[i], 0.0);
    }

    if (trial % 10 == 0) {
      GalerkinMatrix M{J, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(space_dim(J)),
                                                static_cast<Eigen::Index>(space_dim(J))),
                       1.0, "random"};
      const auto vals = testing::random_vector(static_cast<std::size_t>(M.entries.size()),
                                               20000 + trial, 0.05);
      std::copy(vals.begin(), vals.end(), M.entries.data());
      const auto T = threshold_operator_entries(M, eps, kappa);
      std::size_t kept = 0;
      for (Eigen::Index r = 0; r < M.entries.rows(); ++r)
        for (Eigen::Index col = 0; col < M.entries.cols(); ++col) {
          const double v = M.entries(r, col);
          const bool keep = std::abs(v) >= tdata;
          kept += keep;
          ASSERT_EQ(T.matrix.entries(r, col), keep ? v : 0.0);
        }
      EXPECT_EQ(T.kept, kept);
      EXPECT_EQ(threshold_operator_entries(T.matrix, eps, kappa).matrix, T.matrix);
      const auto T2 = threshold_operator_entries(M, eps, 2.0 * kappa);
      EXPECT_LE(T2.kept, T.kept);
    }
  }
}

TEST(Threshold, EmpiricalFactorsOfDiagonalFixture) {
  // Singular values 2^{-(l+1)} per level: factors 2^{l - j0}.
  const auto K = build_diagonal(1.0, 6);
  const auto f = empirical_level_factors(K.entries, 1, 6);
  ASSERT_EQ(f.size(), 8u);
  for (int l = -1; l <= 6; ++l) EXPECT_NEAR(f[static_cast<std::size_t>(l + 1)], std::exp2(l - 1), 1e-12);
}

TEST(Linear, ExactRecoveryOnDiagonalFixture) {
  const auto K = build_diagonal(1.0, 7);
  for (const MultiIndex mi : {MultiIndex{-1, 0}, MultiIndex{0, 0}, MultiIndex{3, 5}, MultiIndex{7, 100}}) {
    const auto f = synthesize_signal(SingleWaveletSignal{mi}, 7, db8());
    const auto obs = observe(f, K, 0.0, 0.0, 1);
    for (int j = std::max(mi.level, 0); j <= 7; ++j) {
      const auto est = linear_galerkin(obs, {j, 1.0, std::nullopt});
      EXPECT_LT(distance(est.f, f), 1e-12);
      EXPECT_FALSE(est.cutoff_triggered);
      EXPECT_EQ(est.diagnostics.used_level, j);
    }
  }
}

TEST(Linear, TinyTauTriggersCutoff) {
  const auto K = build_log_potential(6, db8());
  const auto obs = observe(synthesize_signal(TentSignal{}, 6, db8()), K, 1e-3, 1e-5, 3);
  const auto est = linear_galerkin(obs, {4, 1.0, 1e-9});
  EXPECT_TRUE(est.cutoff_triggered);
  EXPECT_EQ(count_nonzero(est.f), 0u);
  EXPECT_FALSE(linear_galerkin(obs, {4, 1.0, 1e3}).cutoff_triggered);
  EXPECT_THROW(linear_galerkin(obs, {4, 1.0, -1.0}), std::invalid_argument);
  EXPECT_THROW(linear_galerkin(obs, {7, 1.0, std::nullopt}), std::invalid_argument);
}

TEST(Linear, ResidualIsSmall) {
  const auto K = build_log_potential(7, db8());
  const auto f = synthesize_signal(TentSignal{}, 7, db8());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto obs = observe(f, K, 1e-3, 1e-5, seed);
    for (int j = 0; j <= 7; ++j) {
      const auto est = linear_galerkin(obs, {j, 1.0, std::nullopt});
      const auto n = static_cast<Eigen::Index>(space_dim(j));
      const Eigen::VectorXd u = detail::leading(est.f, j);
      const Eigen::VectorXd g = detail::leading(obs.g, j);
      EXPECT_LE((obs.kdelta.entries.topLeftCorner(n, n) * u - g).norm(), 1e-8 * g.norm());
      for (std::size_t i = space_dim(j); i < est.f.size(); ++i) ASSERT_EQ(est.f[i], 0.0);
    }
  }
}

TEST(Linear, SingularBlockIsAnError) {
  Observation obs;
  obs.kdelta = build_diagonal(1.0, 3);
  obs.kdelta.entries(3, 3) = 0.0;
  obs.g = CoeffVector(3, std::vector<double>(16, 1.0));
  obs.truth = CoeffVector(3);
  EXPECT_THROW(linear_galerkin(obs, {2, 1.0, std::nullopt}), SingularMatrixError);
  EXPECT_TRUE(linear_galerkin(obs, {2, 1.0, 1e6}).cutoff_triggered);
  EXPECT_NO_THROW(linear_galerkin(obs, {0, 1.0, std::nullopt}));
}

TEST(NL1, ZeroNoiseEqualsLinear) {
  const auto K = build_log_potential(7, db8());
  const auto obs = observe(synthesize_signal(TentSignal{}, 7, db8()), K, 0.0, 0.0, 1);
  const auto lin = linear_galerkin(obs, {6, 1.0, std::nullopt});
  for (auto mode : {ThresholdMode::Theoretical, ThresholdMode::EmpiricalDecay}) {
    NL1Spec spec;
    spec.j0 = 2, spec.j1 = 6, spec.mode = mode;
    EXPECT_EQ(nl1_estimate(obs, spec).f, lin.f);
  }
}

TEST(NL1, HugeKappaKeepsOnlyCoarseLevels) {
  const auto K = build_log_potential(7, db8());
  const auto obs = observe(synthesize_signal(TentSignal{}, 7, db8()), K, 1e-3, 1e-5, 2);
  const auto lin = linear_galerkin(obs, {6, 1.0, std::nullopt});
  for (auto mode : {ThresholdMode::Theoretical, ThresholdMode::EmpiricalDecay}) {
    NL1Spec spec;
    spec.j0 = 2, spec.j1 = 6, spec.kappa = 1e12, spec.mode = mode;
    const auto est = nl1_estimate(obs, spec);
    for (std::size_t i = 0; i < est.f.size(); ++i)
      EXPECT_EQ(est.f[i], i < space_dim(2) ? lin.f[i] : 0.0);
    EXPECT_EQ(est.diagnostics.kept_coefficients, space_dim(2));
  }
}

TEST(NL1, CutoffPropagates) {
  const auto K = build_log_potential(6, db8());
  const auto obs = observe(synthesize_signal(TentSignal{}, 6, db8()), K, 1e-3, 1e-5, 2);
  NL1Spec spec;
  spec.j0 = 1, spec.j1 = 5, spec.tau = 1e-9;
  EXPECT_TRUE(nl1_estimate(obs, spec).cutoff_triggered);
  spec.j0 = 5;
  EXPECT_THROW(nl1_estimate(obs, spec), std::invalid_argument);
}

TEST(NL2, TinyNoiseRecoversProjection) {
  const auto K = build_diagonal(1.0, 8);
  const auto f = synthesize_signal(SmoothSignal{3}, 8, db8());
  const auto obs = observe(f, K, 1e-12, 1e-12, 5);
  for (int J : {4, 6, 8}) {
    const auto est = nl2_estimate(obs, {J, 1.5, 1.5, 1.0, std::nullopt});
    EXPECT_LT(distance(est.f, project_level(f, J)), 1e-6) << J;
    EXPECT_EQ(est.diagnostics.used_level, J);
  }
}

TEST(NL2, CutoffBelowInverseNorm) {
  const auto K = build_diagonal(1.0, 6);
  const auto obs = observe(synthesize_signal(TentSignal{}, 6, db8()), K, 1e-4, 1e-5, 5);
  const auto est = nl2_estimate(obs, {5, 1.5, 1.5, 1.0, 1.5});  // invHtNorm of K⁰ is 2
  EXPECT_TRUE(est.cutoff_triggered);
  EXPECT_EQ(count_nonzero(est.f), 0u);
  const auto ok = nl2_estimate(obs, {5, 1.5, 1.5, 1.0, 3.0});
  EXPECT_FALSE(ok.cutoff_triggered);
  EXPECT_NEAR(ok.diagnostics.inv_norm, 2.0, 0.05);
}

TEST(NL2, SingularThresholdedOperatorIsAnError) {
  const auto K = build_diagonal(1.0, 6);
  const auto obs = observe(synthesize_signal(TentSignal{}, 6, db8()), K, 1e-2, 1e-5, 5);
  // 𝒯(0.01) ≈ 0.032 removes the finest diagonal entries 2^{-7}.
  EXPECT_THROW(nl2_estimate(obs, {6, 1.5, 1.5, 1.0, std::nullopt}), SingularMatrixError);
  EXPECT_TRUE(nl2_estimate(obs, {6, 1.5, 1.5, 1.0, 10.0}).cutoff_triggered);
}

TEST(ZeroNoise, AllEstimatorsRecoverSignalsInVj) {
  const auto K = build_log_potential(7, db8());
  auto f = testing::random_coeffs(7, 77);
  f = project_level(f, 4);
  const auto obs = observe(f, K, 0.0, 0.0, 0);
  EXPECT_LT(distance(linear_galerkin(obs, {5, 1.0, std::nullopt}).f, f), 1e-8);
  NL1Spec s1;
  s1.j0 = 1, s1.j1 = 6;
  EXPECT_LT(distance(nl1_estimate(obs, s1).f, f), 1e-8);
  EXPECT_LT(distance(nl2_estimate(obs, {7, 1.5, 1.5, 1.0, std::nullopt}).f, f), 1e-8);
}

TEST(LevelRule, DiagonalHandSolved) {
  // λ_min(K_{j+1}) = 2^{-(j+2)} < 5e-3 · 2^{j+2} first at j = 2.
  EXPECT_EQ(select_level(build_diagonal(1.0, 8), 1e-3, 5.0), 2);
  // √dim variant: 2^{-3(j+2)/2} < cδ, first at j = 4 for δ = 1e-3 and j = 6 for δ = 1e-4.
  EXPECT_EQ(select_level(build_diagonal(1.0, 8), 1e-3, 5.0, LevelRuleScale::SqrtDim), 4);
  EXPECT_EQ(select_level(build_diagonal(1.0, 8), 1e-4, 5.0, LevelRuleScale::SqrtDim), 6);
}

TEST(LevelRule, HugeDeltaGivesZeroAndCapApplies) {
  const auto K = build_diagonal(1.0, 8);
  EXPECT_EQ(select_level(K, 0.9, 5.0), 0);
  EXPECT_EQ(select_level(K, 1e-300, 1.0), 7);
  EXPECT_EQ(select_level(K, 1e-300, 1.0, LevelRuleScale::Dim, 4), 4);
  EXPECT_THROW(select_level(K, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(select_level(K, 1e-3, -1.0), std::invalid_argument);
}

TEST(LevelRule, NonIncreasingInDelta) {
  const auto K = build_log_potential(8, db8());
  const auto xi = gaussian_matrix(static_cast<Eigen::Index>(K.dim()), 99);
  int prev = 1 << 20;
  for (double delta = 1e-8; delta < 0.5; delta *= 3.0) {
    GalerkinMatrix Kd = K;
    Kd.entries += delta * xi;
    const int j = select_level(Kd, delta, 5.0);
    EXPECT_LE(j, prev) << "delta " << delta;
    prev = j;
  }
  EXPECT_EQ(prev, 0);
}

TEST(LevelChoice, OracleAndAdaptive) {
  EXPECT_EQ(oracle_level(1.5, 1.0, 1, 1e-3, 10), 3);  // log2(1000) / 3 ≈ 3.32
  EXPECT_EQ(oracle_level(1.5, 1.0, 1, std::exp2(-12), 10), 4);
  EXPECT_EQ(oracle_level(0.5, 1.0, 1, 1e-300, 10), 10);
  EXPECT_EQ(adaptive_level(std::exp2(-6), 0.0, 1.0, 1, 10), 6);
  EXPECT_EQ(adaptive_level(0.0, 0.0, 1.0, 1, 10), 10);
  EXPECT_EQ(adaptive_level(1e-5, 1e-3, 1.0, 1, 10), 4);  // (δ√|ln δ|)^{-1/2} ≈ 19.5
  EXPECT_THROW(oracle_level(1.5, 1.0, 1, 0.0, 10), std::invalid_argument);
}

}  // namespace
}  // namespace wavinv
