// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <stdexcept>
#include <string>

namespace wavinv {

/// Raised when a dense system is numerically singular
/// (smallest singular value below 1e-12 times the largest).
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double min_sv, double max_sv)
      : std::runtime_error(what), min_sv_(min_sv), max_sv_(max_sv) {}

  double min_singular_value() const noexcept { return min_sv_; }
  double max_singular_value() const noexcept { return max_sv_; }

 private:
  double min_sv_;
  double max_sv_;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& msg) {
  throw std::invalid_argument(where + ": " + msg);
}

inline void require(bool cond, const char* where, const std::string& msg) {
  if (!cond) fail(where, msg);
}

}  // namespace detail
}  // namespace wavinv
