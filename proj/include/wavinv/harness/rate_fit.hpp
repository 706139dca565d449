// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "wavinv/estimators/rates.hpp"
#include "wavinv/harness/monte_carlo.hpp"

namespace wavinv {

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double theoretical_exponent = 0.0;
  std::size_t points = 0;
};

inline constexpr std::size_t kMinRatePoints = 4;

/// Least squares y = intercept + slope x. r² is 1 for a perfect fit and 0
/// when x explains nothing (including a constant y).
inline RateFit fit_line(std::span<const double> x, std::span<const double> y) {
  detail::require(x.size() == y.size(), "fit_line", "size mismatch");
  detail::require(x.size() >= kMinRatePoints, "fit_line",
                  "need at least " + std::to_string(kMinRatePoints) + " points, got " +
                      std::to_string(x.size()));
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  detail::require(sxx > 0.0, "fit_line", "abscissae are all equal");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 0.0;
  fit.points = x.size();
  return fit;
}

/// Slope of log(rmse_mean) against log(max{δ, ε}) over the method's cells.
/// The theoretical exponent is r(s,t,d) on the RMSE scale.
inline RateFit fit_rate(const ExperimentResult& results, const std::string& method, double s,
                        double t, int d = 1) {
  std::vector<double> x, y;
  for (const CellResult* c : results.cells_for(method)) {
    const double noise = std::max(c->delta, c->epsilon);
    if (noise > 0.0 && std::isfinite(c->rmse_mean) && c->rmse_mean > 0.0) {
      x.push_back(std::log(noise));
      y.push_back(std::log(c->rmse_mean));
    }
  }
  RateFit fit = fit_line(x, y);
  fit.theoretical_exponent = rate_exponent_dense(s, t, d);
  return fit;
}

}  // namespace wavinv
