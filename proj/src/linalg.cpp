// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/linalg.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/LU>

#include "ultraslow/fft.hpp"

namespace ultraslow {

Eigen::VectorXd dense_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                            Eigen::Index max_dim) {
  if (a.rows() != a.cols()) throw std::invalid_argument("dense_solve: matrix must be square");
  if (a.rows() != b.size()) throw std::invalid_argument("dense_solve: shape mismatch");
  if (a.rows() > max_dim) throw std::invalid_argument("dense_solve: system exceeds size cap");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
  const double scale = a.cwiseAbs().maxCoeff();
  if (diag.minCoeff() <= scale * a.rows() * std::numeric_limits<double>::epsilon())
    throw SolverError("dense_solve: matrix is numerically singular");
  return lu.solve(b);
}

Eigen::VectorXd levinson_solve(const Eigen::VectorXd& t, const Eigen::VectorXd& b) {
  const Eigen::Index m = t.size();
  if (m == 0 || b.size() != m) throw std::invalid_argument("levinson_solve: shape mismatch");
  if (t[0] <= 0.0) throw SolverError("levinson_solve: leading entry must be positive");
  Eigen::VectorXd x(m);
  x[0] = b[0] / t[0];
  if (m == 1) return x;

  const Eigen::VectorXd r = t.tail(m - 1) / t[0];
  const Eigen::VectorXd bn = b / t[0];
  Eigen::VectorXd y(m - 1);
  Eigen::VectorXd scratch(m - 1);
  y[0] = -r[0];
  double alpha = -r[0];
  double beta = 1.0;
  for (Eigen::Index k = 0; k + 1 < m; ++k) {
    beta *= (1.0 - alpha * alpha);
    if (!(beta > 0.0)) throw SolverError("levinson_solve: recursion breakdown");
    const double mu =
        (bn[k + 1] - r.head(k + 1).dot(x.head(k + 1).reverse())) / beta;
    x.head(k + 1) += mu * y.head(k + 1).reverse();
    x[k + 1] = mu;
    if (k + 2 < m) {
      alpha = -(r[k + 1] + r.head(k + 1).dot(y.head(k + 1).reverse())) / beta;
      scratch.head(k + 1) = y.head(k + 1).reverse();
      y.head(k + 1) += alpha * scratch.head(k + 1);
      y[k + 1] = alpha;
    }
  }
  return x;
}

SymmetricToeplitz::SymmetricToeplitz(Eigen::VectorXd first_column) : col_(std::move(first_column)) {
  if (col_.size() == 0) throw std::invalid_argument("SymmetricToeplitz: empty column");
  const Eigen::Index m = col_.size();
  const std::size_t padded = next_pow2(static_cast<std::size_t>(2 * m - 1));
  Eigen::VectorXcd embedding = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(padded));
  embedding[0] = col_[0];
  for (Eigen::Index j = 1; j < m; ++j) {
    embedding[j] = col_[j];
    embedding[static_cast<Eigen::Index>(padded) - j] = col_[j];
  }
  const Fft& plan = Fft::plan(padded);
  plan.forward(embedding.data());
  spectrum_ = embedding.real();
  spectral_bound_ = 2.0 * col_.cwiseAbs().sum() - std::abs(col_[0]);
}

Eigen::VectorXd SymmetricToeplitz::multiply(const Eigen::VectorXd& x) const {
  const Eigen::Index m = col_.size();
  if (x.size() != m) throw std::invalid_argument("SymmetricToeplitz::multiply: shape mismatch");
  const Eigen::Index padded = spectrum_.size();
  Eigen::VectorXcd work = Eigen::VectorXcd::Zero(padded);
  work.head(m) = x.cast<std::complex<double>>();
  const Fft& plan = Fft::plan(static_cast<std::size_t>(padded));
  plan.forward(work.data());
  work.array() *= spectrum_;
  plan.inverse(work.data());
  return work.head(m).real();
}

Eigen::VectorXd SymmetricToeplitz::multiply_shifted(double shift, double scale,
                                                    const Eigen::VectorXd& x) const {
  return shift * x + scale * multiply(x);
}

Eigen::VectorXd SymmetricToeplitz::solve_shifted(double shift, double scale,
                                                 const Eigen::VectorXd& b) const {
  Eigen::VectorXd shifted = scale * col_;
  shifted[0] += shift;
  Eigen::VectorXd x = levinson_solve(shifted, b);
  const double b_norm = b.norm();
  if (b_norm == 0.0) return x;
  Eigen::VectorXd residual = b - multiply_shifted(shift, scale, x);
  if (residual.norm() > 1e-13 * b_norm) {
    x += levinson_solve(shifted, residual);
    residual = b - multiply_shifted(shift, scale, x);
    if (residual.norm() > 1e-10 * b_norm)
      throw SolverError("SymmetricToeplitz::solve_shifted: refinement stalled");
  }
  return x;
}

BttbOperator::BttbOperator(const Eigen::MatrixXd& offset_table, Eigen::Index grid_dim)
    : n_(grid_dim) {
  if (n_ <= 0) throw std::invalid_argument("BttbOperator: grid dimension must be positive");
  if (offset_table.rows() < n_ || offset_table.cols() < n_)
    throw std::invalid_argument("BttbOperator: offset table too small for grid");
  padded_ = static_cast<Eigen::Index>(next_pow2(static_cast<std::size_t>(2 * n_ - 1)));
  Eigen::MatrixXcd kernel = Eigen::MatrixXcd::Zero(padded_, padded_);
  for (Eigen::Index j = 0; j < padded_; ++j) {
    const Eigen::Index oj = j < n_ ? j : padded_ - j;
    if (oj >= n_) continue;
    for (Eigen::Index k = 0; k < padded_; ++k) {
      const Eigen::Index ok = k < n_ ? k : padded_ - k;
      if (ok >= n_) continue;
      kernel(j, k) = offset_table(oj, ok);
    }
  }
  fft2(kernel);
  spectrum_ = kernel.real();
  spectral_bound_ = spectrum_.maxCoeff();
  work_.resize(padded_, padded_);
}

Eigen::VectorXd BttbOperator::multiply(const Eigen::VectorXd& x) const {
  if (x.size() != dim()) throw std::invalid_argument("BttbOperator::multiply: shape mismatch");
  work_.setZero();
  for (Eigen::Index j = 0; j < n_; ++j)
    for (Eigen::Index k = 0; k < n_; ++k) work_(j, k) = x[j * n_ + k];
  fft2(work_);
  work_.array() *= spectrum_.array();
  ifft2(work_);
  Eigen::VectorXd y(dim());
  for (Eigen::Index j = 0; j < n_; ++j)
    for (Eigen::Index k = 0; k < n_; ++k) y[j * n_ + k] = work_(j, k).real();
  return y;
}

Eigen::VectorXd BttbOperator::multiply_shifted(double shift, double scale,
                                               const Eigen::VectorXd& x) const {
  return shift * x + scale * multiply(x);
}

}  // namespace ultraslow
