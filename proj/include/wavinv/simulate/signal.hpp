// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "wavinv/wavelet/dwt.hpp"

namespace wavinv {

/// f(x) = max{1 - 30|x - 1/2|, 0}.
struct TentSignal {
  static double value(double x) { return std::max(1.0 - 30.0 * std::abs(x - 0.5), 0.0); }
};

struct SingleWaveletSignal {
  MultiIndex index;
};

/// f(x) = cos(2π n x).
struct SmoothSignal {
  int frequency = 1;
};

/// Function values at the grid midpoints (m + 1/2) 2^{-(J+1)}.
struct CustomSignal {
  std::vector<double> samples;
};

using SignalSpec = std::variant<TentSignal, SingleWaveletSignal, SmoothSignal, CustomSignal>;

inline std::string signal_name(const SignalSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, TentSignal>) return "tent";
        else if constexpr (std::is_same_v<S, SingleWaveletSignal>)
          return "wavelet:" + std::to_string(s.index.level) + "," + std::to_string(s.index.position);
        else if constexpr (std::is_same_v<S, SmoothSignal>)
          return "smooth:" + std::to_string(s.frequency);
        else return "custom";
      },
      spec);
}

/// L²-normalized wavelet coefficients of the signal on V_{J_max}.
inline CoeffVector synthesize_signal(const SignalSpec& spec, int max_level,
                                     const WaveletFilter& filter) {
  return std::visit(
      [&](const auto& s) -> CoeffVector {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, TentSignal>) {
          detail::require(max_level >= 5, "synthesize_signal", "tent needs J_max >= 5");
          return dwt(sample_function(TentSignal::value, max_level), filter);
        } else if constexpr (std::is_same_v<S, SingleWaveletSignal>) {
          detail::require(is_valid(s.index) && s.index.level <= max_level, "synthesize_signal",
                          "wavelet index not representable at J_max");
          CoeffVector c(max_level);
          c.at(s.index) = 1.0;
          return c;
        } else if constexpr (std::is_same_v<S, SmoothSignal>) {
          detail::require(s.frequency >= 0 &&
                              2 * static_cast<std::size_t>(s.frequency) < space_dim(max_level),
                          "synthesize_signal", "frequency not resolvable at J_max");
          const double n = s.frequency;
          return dwt(sample_function(
                         [n](double x) { return std::cos(2.0 * std::numbers::pi * n * x); },
                         max_level),
                     filter);
        } else {
          detail::require(s.samples.size() == space_dim(max_level), "synthesize_signal",
                          "custom samples must have length 2^{J_max+1}");
          std::vector<double> scaled = s.samples;
          const double root_h = std::sqrt(1.0 / static_cast<double>(scaled.size()));
          for (double& v : scaled) v *= root_h;
          return dwt(scaled, filter);
        }
      },
      spec);
}

}  // namespace wavinv
