// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <Eigen/Core>

namespace ultraslow {

/// Finite-difference coefficients of the integral fractional Laplacian of
/// order beta/2 (beta in (0,2]) on a square mesh, indexed by absolute
/// offsets: entry (dj, dk) is the weight coupling nodes whose indices differ
/// by (dj, dk).  The discrete operator on a mesh of width h is
///   ((-Delta_h)^{beta/2} psi)_{j,k} = h^{-beta} sum a_{|j-j'|,|k-k'|} psi_{j',k'}.
/// Coefficients are Fourier coefficients of the generating symbol
/// (4 sin^2(eta1/2) + 4 sin^2(eta2/2))^{beta/2}, computed by sampling the
/// symbol on a samples-by-samples grid and transforming.  With \p samples = 0
/// the sampling density defaults to next_pow2(max(1024, 32*(offsets+1))),
/// which keeps the aliasing error in the coefficients far below the
/// second-order mesh error of the solvers that consume them.
Eigen::MatrixXd fcd_table(double beta, Eigen::Index offsets, Eigen::Index samples = 0);

/// Maximum of the generating symbol, 8^{beta/2}; spectral upper bound for
/// the coefficient operator (without the h^{-beta} factor).
double fcd_symbol_max(double beta);

/// Applies the discrete fractional Laplacian (without the h^{-beta} factor)
/// to interior values of an n-by-n grid stored row-major, with zero exterior
/// data.
Eigen::VectorXd frac_laplacian_apply(double beta, const Eigen::VectorXd& v, Eigen::Index grid_dim);

}  // namespace ultraslow
