// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <bit>
#include <cstddef>
#include <string>

#include "wavinv/error.hpp"

namespace wavinv {

/// Wavelet label (level, position). Level -1 is the single scaling
/// coefficient; level j >= 0 has positions 0 .. 2^j - 1.
///
/// Flattened (level-major) order: index 0 is level -1, level j occupies
/// [2^j, 2^{j+1}). Indices with level <= J therefore fill 0 .. 2^{J+1}-1.
struct MultiIndex {
  int level = -1;
  int position = 0;

  friend constexpr bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

inline constexpr int kMaxSupportedLevel = 28;

constexpr std::size_t level_size(int level) {
  return level < 0 ? std::size_t{1} : (std::size_t{1} << level);
}

/// First flattened index of a level.
constexpr std::size_t level_begin(int level) {
  return level < 0 ? std::size_t{0} : (std::size_t{1} << level);
}

constexpr std::size_t level_end(int level) { return std::size_t{1} << (level + 1); }

/// Number of coefficients with level <= j, i.e. dim V_j.
constexpr std::size_t space_dim(int j) { return std::size_t{1} << (j + 1); }

constexpr int level_of(std::size_t index) {
  return index == 0 ? -1 : static_cast<int>(std::bit_width(index)) - 1;
}

constexpr bool is_valid(const MultiIndex& mi) {
  if (mi.level < -1 || mi.level > kMaxSupportedLevel) return false;
  if (mi.level == -1) return mi.position == 0;
  return mi.position >= 0 && static_cast<std::size_t>(mi.position) < level_size(mi.level);
}

inline std::size_t flatten(const MultiIndex& mi) {
  detail::require(is_valid(mi), "flatten",
                  "invalid multi-index (" + std::to_string(mi.level) + "," +
                      std::to_string(mi.position) + ")");
  return level_begin(mi.level) + static_cast<std::size_t>(mi.position);
}

constexpr MultiIndex unflatten(std::size_t index) {
  const int lev = level_of(index);
  return {lev, static_cast<int>(index - level_begin(lev))};
}

/// max(|λ|, 0), the level used for Sobolev-type weights.
constexpr int weight_level(int level) { return level < 0 ? 0 : level; }

/// log2 of a power of two, or -1 when n is not a power of two.
constexpr int exact_log2(std::size_t n) {
  return (n != 0 && std::has_single_bit(n)) ? static_cast<int>(std::bit_width(n)) - 1 : -1;
}

}  // namespace wavinv
