// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "test_support.hpp"
#include "wavinv/operators/build.hpp"
#include "wavinv/simulate/bundle.hpp"
#include "wavinv/simulate/observation.hpp"
#include "wavinv/simulate/signal.hpp"
#include "wavinv/wavelet/besov.hpp"

namespace wavinv {
namespace {

const WaveletFilter& db8() {
  static const WaveletFilter f = WaveletFilter::daubechies(8);
  return f;
}

TEST(Signal, TentNormMatchesClosedForm) {
  const auto c = synthesize_signal(TentSignal{}, 10, db8());
  EXPECT_NEAR(c.norm(), std::sqrt(1.0 / 45.0), 1e-3);
  EXPECT_NEAR(c[0], 1.0 / 30.0, 1e-6);
  EXPECT_THROW(synthesize_signal(TentSignal{}, 4, db8()), std::invalid_argument);
}

TEST(Signal, TentValues) {
  EXPECT_EQ(TentSignal::value(0.5), 1.0);
  EXPECT_EQ(TentSignal::value(0.0), 0.0);
  EXPECT_NEAR(TentSignal::value(0.5 + 1.0 / 60.0), 0.5, 1e-14);
  EXPECT_EQ(TentSignal::value(0.6), 0.0);
}

TEST(Signal, SingleWavelet) {
  const auto c = synthesize_signal(SingleWaveletSignal{{4, 3}}, 7, db8());
  EXPECT_EQ(c.norm(), 1.0);
  EXPECT_EQ(c.at({4, 3}), 1.0);
  EXPECT_EQ(signal_name(SingleWaveletSignal{{4, 3}}), "wavelet:4,3");
  EXPECT_THROW(synthesize_signal(SingleWaveletSignal{{8, 0}}, 7, db8()), std::invalid_argument);
  EXPECT_THROW(synthesize_signal(SingleWaveletSignal{{2, 4}}, 7, db8()), std::invalid_argument);
}

double besov_slope(const CoeffVector& c) {
  return (std::log2(besov_norm(c, 2.0, 2.0)) - std::log2(besov_norm(c, 0.0, 2.0))) / 2.0;
}

// Oracle: cos(2πnx) concentrates on the one or two levels whose band holds
// frequency n, so log2 ‖·‖_{B^s_{2,2}} grows in s with slope near log2 n, and
// doubling n adds one.
TEST(Signal, SmoothConcentratesOnOneScale) {
  EXPECT_NEAR(synthesize_signal(SmoothSignal{4}, 8, db8()).norm(), std::sqrt(0.5), 1e-10);
  double prev = 0.0;
  for (int n = 3; n <= 96; n *= 2) {
    const double slope = besov_slope(synthesize_signal(SmoothSignal{n}, 10, db8()));
    EXPECT_GE(slope, std::log2(n) - 0.3) << n;
    EXPECT_LE(slope, std::log2(n) + 1.0) << n;
    if (n > 3) EXPECT_NEAR(slope - prev, 1.0, 0.3) << n;
    prev = slope;
  }
  EXPECT_THROW(synthesize_signal(SmoothSignal{1024}, 9, db8()), std::invalid_argument);
}

TEST(Signal, CustomSamplesMatchSampledFunction) {
  const auto x = grid_midpoints(7);
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = TentSignal::value(x[i]);
  const auto a = synthesize_signal(CustomSignal{v}, 7, db8());
  const auto b = synthesize_signal(TentSignal{}, 7, db8());
  EXPECT_LT(testing::max_abs_diff(a.values(), b.values()), 1e-15);
  EXPECT_THROW(synthesize_signal(CustomSignal{{1.0, 2.0}}, 7, db8()), std::invalid_argument);
}

TEST(Observe, ZeroNoiseIsExact) {
  const auto K = build_log_potential(7, db8());
  const auto f = synthesize_signal(TentSignal{}, 7, db8());
  const auto obs = observe(f, K, 0.0, 0.0, 11);
  EXPECT_EQ(obs.kdelta, K);
  EXPECT_EQ(obs.g, apply(K, f));
  EXPECT_EQ(obs.truth, f);
}

TEST(Observe, DeterministicPerSeed) {
  const auto K = build_diagonal(1.0, 5);
  const auto f = testing::random_coeffs(5, 1);
  EXPECT_EQ(observe(f, K, 1e-3, 1e-4, 9), observe(f, K, 1e-3, 1e-4, 9));
  EXPECT_FALSE(observe(f, K, 1e-3, 1e-4, 9) == observe(f, K, 1e-3, 1e-4, 10));
}

TEST(Observe, DataNoiseVariance) {
  const double eps = 0.05;
  const auto K = build_diagonal(1.0, 1);  // 4 coefficients
  const auto f = testing::random_coeffs(1, 2);
  const auto clean = apply(K, f);
  double sum = 0.0, sum2 = 0.0;
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < 2500; ++s) {
    const auto obs = observe(f, K, 0.0, eps, s);
    for (std::size_t i = 0; i < clean.size(); ++i) {
      const double r = obs.g[i] - clean[i];
      sum += r, sum2 += r * r, ++count;
    }
  }
  const double mean = sum / count;
  EXPECT_EQ(count, 10000u);
  EXPECT_LT(std::abs(mean), 3.0 * eps / 100.0);
  EXPECT_NEAR(sum2 / count - mean * mean, eps * eps, 0.05 * eps * eps);
}

TEST(Observe, OperatorAndDataNoiseAreUncorrelated) {
  const auto K = build_diagonal(1.0, 2);  // 8 coefficients
  const auto f = CoeffVector(2);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::uint64_t s = 0; s < 1250; ++s) {
    const auto obs = observe(f, K, 1.0, 1.0, s);
    for (Eigen::Index i = 0; i < 8; ++i) {
      const double x = obs.g[static_cast<std::size_t>(i)];
      const double y = obs.kdelta.entries(i, i) - K.entries(i, i);
      sxy += x * y, sxx += x * x, syy += y * y;
    }
  }
  EXPECT_NEAR(sxy / std::sqrt(sxx * syy), 0.0, 0.03);
}

TEST(Observe, LinearInSignal) {
  const auto K = build_log_potential(6, db8());
  const auto a = testing::random_coeffs(6, 3);
  const auto b = testing::random_coeffs(6, 4);
  CoeffVector mix(6);
  for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = 2.0 * a[i] - 0.5 * b[i];
  const auto ga = apply(K, a), gb = apply(K, b), gm = apply(K, mix);
  for (std::size_t i = 0; i < mix.size(); ++i) EXPECT_NEAR(gm[i], 2.0 * ga[i] - 0.5 * gb[i], 1e-12);
}

TEST(Observe, RejectsBadInput) {
  const auto K = build_diagonal(1.0, 5);
  EXPECT_THROW(observe(CoeffVector(4), K, 0.0, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(observe(CoeffVector(5), K, -1.0, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(observe(CoeffVector(5), K, 0.0, -1.0, 1), std::invalid_argument);
  EXPECT_THROW(apply(K, CoeffVector(6)), std::invalid_argument);
}

TEST(Bundle, RoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "wavinv_test_bundle";
  std::filesystem::remove_all(dir);
  const auto K = build_log_potential(6, db8());
  const auto f = synthesize_signal(TentSignal{}, 6, db8());
  const auto obs = observe(f, K, 1e-3, 1e-5, 123);
  write_bundle(dir, obs, {"log-potential", "tent", "db8"});
  const auto back = read_bundle(dir);
  EXPECT_TRUE(back.has_truth);
  EXPECT_EQ(back.obs, obs);
  EXPECT_EQ(back.info.signal, "tent");
  EXPECT_EQ(back.info.filter, "db8");

  std::filesystem::remove(dir / "truth.csv");
  const auto blind = read_bundle(dir);
  EXPECT_FALSE(blind.has_truth);
  EXPECT_EQ(blind.obs.g, obs.g);
}

TEST(Bundle, MalformedCoefficientsRejected) {
  const auto p = std::filesystem::temp_directory_path() / "wavinv_bad_coeffs.csv";
  std::ofstream(p) << "i,value\n0,1\n";
  EXPECT_THROW(read_coefficients(p), std::runtime_error);
  std::ofstream(p) << "index,level,position,value\n0,-1,0,1\n1,0,0,2\n2,1,0,3\n";
  EXPECT_THROW(read_coefficients(p), std::runtime_error);
  std::ofstream(p) << "index,level,position,value\n1,-1,0,1\n";
  EXPECT_THROW(read_coefficients(p), std::runtime_error);
  EXPECT_THROW(read_bundle(std::filesystem::temp_directory_path() / "wavinv_no_bundle"),
               std::runtime_error);
}

}  // namespace
}  // namespace wavinv
