// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavinv/error.hpp"
#include "wavinv/wavelet/coeff_vector.hpp"
#include "wavinv/wavelet/filter.hpp"

namespace wavinv {

// Periodized Mallat pyramid on [0,1). Circular convolution at every scale,
// so the transform is orthogonal for any power-of-two length >= support.

namespace detail {

inline int checked_levels(std::size_t n, const WaveletFilter& filter, const char* where) {
  const int lg = exact_log2(n);
  require(lg >= 1, where, "length " + std::to_string(n) + " is not a power of two >= 2");
  require(n >= filter.support(), where,
          "length " + std::to_string(n) + " is smaller than the filter support " +
              std::to_string(filter.support()));
  return lg;
}

/// One analysis step on x[0..n): lowpass to [0, n/2), highpass to [n/2, n).
inline void analysis_step(std::span<double> x, std::size_t n, const WaveletFilter& filter,
                          std::vector<double>& work) {
  const auto h = filter.lowpass();
  const auto g = filter.highpass();
  const std::size_t half = n / 2;
  const std::size_t len = h.size();
  work.assign(n, 0.0);
  for (std::size_t k = 0; k < half; ++k) {
    double a = 0.0;
    double d = 0.0;
    std::size_t idx = 2 * k;
    for (std::size_t i = 0; i < len; ++i) {
      const double v = x[idx];
      a += h[i] * v;
      d += g[i] * v;
      if (++idx == n) idx = 0;  // coarse levels may wrap several times
    }
    work[k] = a;
    work[half + k] = d;
  }
  std::copy(work.begin(), work.end(), x.begin());
}

inline void synthesis_step(std::span<double> x, std::size_t n, const WaveletFilter& filter,
                           std::vector<double>& work) {
  const auto h = filter.lowpass();
  const auto g = filter.highpass();
  const std::size_t half = n / 2;
  const std::size_t len = h.size();
  work.assign(n, 0.0);
  for (std::size_t k = 0; k < half; ++k) {
    const double a = x[k];
    const double d = x[half + k];
    std::size_t idx = 2 * k;
    for (std::size_t i = 0; i < len; ++i) {
      work[idx] += h[i] * a + g[i] * d;
      if (++idx == n) idx = 0;
    }
  }
  std::copy(work.begin(), work.end(), x.begin());
}

}  // namespace detail

/// In-place forward transform of a length-2^{J+1} buffer into flattened
/// coefficient order. The pyramid runs down to the single scaling coefficient.
inline void dwt_inplace(std::span<double> x, const WaveletFilter& filter,
                        std::vector<double>& work) {
  detail::checked_levels(x.size(), filter, "dwt");
  for (std::size_t n = x.size(); n >= 2; n /= 2) detail::analysis_step(x, n, filter, work);
}

inline void idwt_inplace(std::span<double> x, const WaveletFilter& filter,
                         std::vector<double>& work) {
  detail::checked_levels(x.size(), filter, "idwt");
  for (std::size_t n = 2; n <= x.size(); n *= 2) detail::synthesis_step(x, n, filter, work);
}

/// Forward transform. `samples` must already carry the √h scaling so the
/// result is L²-normalized (see `sample_function`).
inline CoeffVector dwt(std::span<const double> samples, const WaveletFilter& filter) {
  const int lg = detail::checked_levels(samples.size(), filter, "dwt");
  std::vector<double> buf(samples.begin(), samples.end());
  std::vector<double> work;
  dwt_inplace(buf, filter, work);
  return CoeffVector(lg - 1, std::move(buf));
}

inline std::vector<double> idwt(const CoeffVector& coeffs, const WaveletFilter& filter) {
  std::vector<double> buf(coeffs.values().begin(), coeffs.values().end());
  std::vector<double> work;
  idwt_inplace(buf, filter, work);
  return buf;
}

/// Cell midpoints (m + 1/2) h, h = 2^{-(J+1)}.
inline std::vector<double> grid_midpoints(int max_level) {
  const std::size_t n = space_dim(max_level);
  const double h = 1.0 / static_cast<double>(n);
  std::vector<double> x(n);
  for (std::size_t m = 0; m < n; ++m) x[m] = (static_cast<double>(m) + 0.5) * h;
  return x;
}

/// f at the midpoints, scaled by √h: the input convention of `dwt`.
template <class F>
std::vector<double> sample_function(F&& f, int max_level) {
  auto x = grid_midpoints(max_level);
  const double root_h = std::sqrt(1.0 / static_cast<double>(x.size()));
  for (double& v : x) v = f(v) * root_h;
  return x;
}

/// Inverse of `sample_function`: grid values of the function with these coefficients.
inline std::vector<double> function_values(const CoeffVector& coeffs, const WaveletFilter& filter) {
  auto s = idwt(coeffs, filter);
  const double inv_root_h = std::sqrt(static_cast<double>(s.size()));
  for (double& v : s) v *= inv_root_h;
  return s;
}

}  // namespace wavinv
