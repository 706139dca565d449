// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cstddef>
#include <optional>

#include "wavinv/wavelet/coeff_vector.hpp"

namespace wavinv {

struct LinearSpec {
  int j = 0;
  double t = 1.0;
  std::optional<double> tau;  // absent: no cutoff
};

enum class ThresholdMode { Theoretical, EmpiricalDecay };

struct NL1Spec {
  int j0 = 0;
  int j1 = 1;
  double kappa = 0.4;
  double t = 1.0;
  std::optional<double> tau;
  ThresholdMode mode = ThresholdMode::EmpiricalDecay;
};

struct NL2Spec {
  int J = 0;
  double kappa_op = 1.5;
  double kappa_data = 1.5;
  double t = 1.0;
  std::optional<double> tau;
};

struct EstimateDiagnostics {
  int used_level = -1;
  std::size_t kept_coefficients = 0;
  std::size_t kept_operator_entries = 0;
  double inv_norm = 0.0;  // L² inverse norm for linear/NL-I, H^t→L² for NL-II
};

/// f lives at the observation's max level; cutoff_triggered implies f == 0.
struct Estimate {
  CoeffVector f;
  bool cutoff_triggered = false;
  EstimateDiagnostics diagnostics;
};

inline std::size_t count_nonzero(const CoeffVector& c) {
  std::size_t n = 0;
  for (double v : c.values()) n += (v != 0.0);
  return n;
}

}  // namespace wavinv
