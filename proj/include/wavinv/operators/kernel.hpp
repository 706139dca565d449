// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <variant>

namespace wavinv {

/// k(x,y) = -log(½|sin(π(x-y))|): the single-layer logarithmic potential on a
/// circle of radius 1/4, parametrized by x in [0,1).
struct LogPotential {
  static double value(double x, double y) {
    return -std::log(0.5 * std::abs(std::sin(std::numbers::pi * (x - y))));
  }
};

/// Operator that is diagonal in the wavelet basis, entries 2^{-(|λ|+1)t}.
struct DiagonalKernel {
  double t = 1.0;
};

/// Kernel supplied by the caller; must be finite on the diagonal (midpoint rule).
struct CustomKernel {
  std::function<double(double, double)> kernel;
  double t = 0.0;
  std::string label = "custom";
};

using KernelSpec = std::variant<LogPotential, DiagonalKernel, CustomKernel>;

inline std::string kernel_name(const KernelSpec& spec) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LogPotential>) return "log-potential";
        else if constexpr (std::is_same_v<K, DiagonalKernel>) return "diagonal";
        else return k.label;
      },
      spec);
}

}  // namespace wavinv
