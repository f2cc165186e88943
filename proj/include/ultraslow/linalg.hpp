// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "ultraslow/errors.hpp"

namespace ultraslow {

/// Dense linear solve through partial-pivot LU.  Throws SolverError when the
/// factorization exposes a (numerically) singular matrix, and
/// std::invalid_argument for shape mismatches or oversized systems.
Eigen::VectorXd dense_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                            Eigen::Index max_dim = 4096);

/// Solves T x = b where T is the symmetric positive definite Toeplitz matrix
/// with first column \p t, by the Levinson recursion in O(m^2) time and O(m)
/// memory.  Throws SolverError on recursion breakdown.
Eigen::VectorXd levinson_solve(const Eigen::VectorXd& t, const Eigen::VectorXd& b);

struct CgOptions {
  /// Relative residual target.
  double tolerance = 1e-13;
  /// Iteration cap; 0 selects 10 * dim.
  Eigen::Index max_iterations = 0;
  /// Optional upper bound on the operator condition number.  When set, the
  /// effective tolerance is floored at 50 * eps * bound, the smallest
  /// relative residual reliably attainable in double precision.
  double condition_bound = 0.0;
};

struct CgResult {
  Eigen::Index iterations = 0;
  double relative_residual = 0.0;
  double tolerance_used = 0.0;
  bool converged = false;
};

/// Conjugate gradients for a symmetric positive definite operator given as a
/// callable y = apply(x).  The solution starts from the incoming value of
/// \p x (zeros if empty).  Throws SolverError if the operator exposes a
/// non-positive curvature direction.
template <typename Operator>
CgResult cg_solve(const Operator& apply, const Eigen::VectorXd& rhs, Eigen::VectorXd& x,
                  const CgOptions& opts = {}) {
  CgResult result;
  double tol = opts.tolerance;
  if (opts.condition_bound > 0.0) {
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * opts.condition_bound;
    tol = std::max(tol, floor);
  }
  result.tolerance_used = tol;
  const double rhs_norm = rhs.norm();
  if (x.size() != rhs.size()) x = Eigen::VectorXd::Zero(rhs.size());
  if (rhs_norm == 0.0) {
    x.setZero();
    result.converged = true;
    return result;
  }
  Eigen::VectorXd r = rhs - apply(x);
  Eigen::VectorXd p = r;
  Eigen::VectorXd ap(rhs.size());
  double rs = r.squaredNorm();
  const Eigen::Index max_it = opts.max_iterations > 0 ? opts.max_iterations : 10 * rhs.size();
  while (std::sqrt(rs) > tol * rhs_norm && result.iterations < max_it) {
    ap.noalias() = apply(p);
    const double curvature = p.dot(ap);
    if (!(curvature > 0.0)) throw SolverError("cg_solve: operator is not positive definite");
    const double step = rs / curvature;
    x += step * p;
    r -= step * ap;
    const double rs_next = r.squaredNorm();
    p = r + (rs_next / rs) * p;
    rs = rs_next;
    ++result.iterations;
  }
  result.relative_residual = std::sqrt(rs) / rhs_norm;
  result.converged = result.relative_residual <= tol;
  return result;
}

/// Symmetric Toeplitz operator held by its first column.  Products use a
/// cached circulant embedding (O(m log m)); shifted solves use the Levinson
/// recursion with a residual-checked refinement pass.
class SymmetricToeplitz {
public:
  explicit SymmetricToeplitz(Eigen::VectorXd first_column);

  Eigen::Index dim() const { return col_.size(); }
  const Eigen::VectorXd& first_column() const { return col_; }

  /// y = T x.
  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;

  /// y = (shift I + scale T) x.
  Eigen::VectorXd multiply_shifted(double shift, double scale, const Eigen::VectorXd& x) const;

  /// Solves (shift I + scale T) x = b.  The shifted matrix must be
  /// positive definite.
  Eigen::VectorXd solve_shifted(double shift, double scale, const Eigen::VectorXd& b) const;

  /// Gershgorin bound on the spectral radius of T.
  double spectral_bound() const { return spectral_bound_; }

private:
  Eigen::VectorXd col_;
  Eigen::ArrayXd spectrum_;
  double spectral_bound_ = 0.0;
};

/// Block-Toeplitz-Toeplitz-block operator on an n-by-n grid of unknowns.
/// Entry ((j,k),(j',k')) equals table(|j-j'|, |k-k'|); vectors are laid out
/// as x[j*n + k].  Products use a cached two-dimensional circulant embedding.
class BttbOperator {
public:
  BttbOperator(const Eigen::MatrixXd& offset_table, Eigen::Index grid_dim);

  Eigen::Index grid_dim() const { return n_; }
  Eigen::Index dim() const { return n_ * n_; }

  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd multiply_shifted(double shift, double scale, const Eigen::VectorXd& x) const;

  /// Largest circulant-embedding eigenvalue; upper bound proxy for ||A||_2.
  double spectral_bound() const { return spectral_bound_; }

private:
  Eigen::Index n_;
  Eigen::Index padded_;
  Eigen::MatrixXd spectrum_;
  double spectral_bound_ = 0.0;
  mutable Eigen::MatrixXcd work_;
};

}  // namespace ultraslow
