// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <Eigen/Core>

namespace ultraslow {

/// Grünwald-Letnikov expansion weights of order \p beta:
/// g_0 = 1, g_k = (1 - (beta+1)/k) g_{k-1}.  Returns g_0..g_{count-1}.
Eigen::VectorXd gl_weights(double beta, Eigen::Index count);

/// First column r_0..r_{count-1} of the symmetric second-order stencil of
/// the Riesz derivative of order beta in (1,2).  The discrete operator on a
/// mesh of width h with zero boundary data is
///   (D^beta psi)_j ~ -h^{-beta} sum_k r_{|j-k|} psi_k.
/// The center weight r_0 is positive, all off-center weights are negative,
/// and every symmetric partial sum of the column is positive.
Eigen::VectorXd riesz_kernel(double beta, Eigen::Index count);

/// Prefactor 1 / (2 cos(pi beta / 2)) of the stencil; negative on (1,2).
double riesz_prefactor(double beta);

/// Positive constant c such that sum_{|k|<m} r_k > c / m^beta for all m >= 1.
double riesz_sum_lower_constant(double beta);

/// y_j = sum_k r_{|j-k|} v_k, the stencil applied to interior values with
/// zero boundary data (without the -h^{-beta} factor).
Eigen::VectorXd riesz_apply(double beta, const Eigen::VectorXd& v);

}  // namespace ultraslow
