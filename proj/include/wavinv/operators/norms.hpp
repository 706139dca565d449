// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "wavinv/error.hpp"
#include "wavinv/operators/galerkin_matrix.hpp"

namespace wavinv {

/// Relative singular-value floor below which a matrix counts as singular.
inline constexpr double kSingularTolerance = 1e-12;

/// Singular values, descending.
inline Eigen::VectorXd singular_values(const Eigen::MatrixXd& A) {
  if (A.size() == 0) return Eigen::VectorXd();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  return svd.singularValues();
}

/// Smallest eigenvalue of the symmetric part (A + Aᵀ)/2.
inline double min_symmetric_eigenvalue(const Eigen::MatrixXd& A) {
  const Eigen::MatrixXd sym = 0.5 * (A + A.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

inline bool numerically_singular(const Eigen::VectorXd& sv) {
  return sv.size() == 0 || !(sv(sv.size() - 1) > kSingularTolerance * sv(0));
}

namespace detail {

[[noreturn]] inline void throw_singular(const char* where, const Eigen::VectorXd& sv) {
  const double lo = sv.size() ? sv(sv.size() - 1) : 0.0;
  const double hi = sv.size() ? sv(0) : 0.0;
  throw SingularMatrixError(std::string(where) + ": matrix is numerically singular (min sv " +
                                std::to_string(lo) + ", max sv " + std::to_string(hi) + ")",
                            lo, hi);
}

/// D_t = diag(2^{max(|λ|,0) t}) realizes the H^t norm on V_J.
inline Eigen::VectorXd sobolev_weights(Eigen::Index n, double t) {
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i)
    w(i) = std::exp2(weight_level(level_of(static_cast<std::size_t>(i))) * t);
  return w;
}

}  // namespace detail

struct OperatorNorms {
  double spec = 0.0;        // largest singular value
  double min_sv = 0.0;      // smallest singular value
  double min_eig = 0.0;     // smallest eigenvalue of the symmetric part
  double inv_norm = 0.0;    // ‖K^{-1}‖_{L²→L²}
  double inv_ht_norm = 0.0; // ‖K^{-1}‖_{H^t→L²}
};

/// ‖K^{-1}‖_{H^t→L²} = ‖K^{-1} D_{-t}‖ = 1/σ_min(D_t K), a row scaling of K.
/// Throws SingularMatrixError when K is numerically singular.
inline double inverse_ht_norm(const Eigen::MatrixXd& K, double t) {
  const Eigen::VectorXd sv = singular_values(K);
  if (numerically_singular(sv)) detail::throw_singular("inverse_ht_norm", sv);
  const Eigen::MatrixXd weighted = detail::sobolev_weights(K.rows(), t).asDiagonal() * K;
  const Eigen::VectorXd wsv = singular_values(weighted);
  return 1.0 / wsv(wsv.size() - 1);
}

inline OperatorNorms operator_norms(const GalerkinMatrix& K, double t) {
  K.validate("operator_norms");
  const Eigen::VectorXd sv = singular_values(K.entries);
  if (numerically_singular(sv)) detail::throw_singular("operator_norms", sv);
  OperatorNorms out;
  out.spec = sv(0);
  out.min_sv = sv(sv.size() - 1);
  out.min_eig = min_symmetric_eigenvalue(K.entries);
  out.inv_norm = 1.0 / out.min_sv;
  out.inv_ht_norm = inverse_ht_norm(K.entries, t);
  return out;
}

/// max_{0<=j<=J} 2^{-jt} ‖K_j^{-1}‖, the finite-level mapping constant.
inline double mapping_constant(const GalerkinMatrix& K, double t) {
  K.validate("mapping_constant");
  detail::require(K.max_level >= 0, "mapping_constant", "needs at least level 0");
  double best = 0.0;
  for (int j = 0; j <= K.max_level; ++j) {
    const auto n = static_cast<Eigen::Index>(space_dim(j));
    const Eigen::VectorXd sv = singular_values(K.entries.topLeftCorner(n, n));
    if (numerically_singular(sv)) detail::throw_singular("mapping_constant", sv);
    best = std::max(best, std::exp2(-j * t) / sv(sv.size() - 1));
  }
  return best;
}

struct DenseSolve {
  Eigen::VectorXd x;
  double inv_norm = 0.0;  // 1/σ_min of the system matrix
};

/// LU with partial pivoting, guarded by the singular-value test.
inline DenseSolve solve_dense(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                              const char* where = "solve_dense") {
  detail::require(A.rows() == A.cols() && A.rows() == b.size(), where, "dimension mismatch");
  const Eigen::VectorXd sv = singular_values(A);
  if (numerically_singular(sv)) detail::throw_singular(where, sv);
  return {A.partialPivLu().solve(b), 1.0 / sv(sv.size() - 1)};
}

}  // namespace wavinv
