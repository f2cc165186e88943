// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/fractional_laplacian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ultraslow/fft.hpp"
#include "ultraslow/linalg.hpp"

namespace ultraslow {

Eigen::MatrixXd fcd_table(double beta, Eigen::Index offsets, Eigen::Index samples) {
  if (!(beta > 0.0) || !(beta <= 2.0))
    throw std::invalid_argument("fcd_table: order must lie in (0,2]");
  if (offsets < 1) throw std::invalid_argument("fcd_table: need at least one offset");
  // The symbol's Fourier tail decays like |k|^-(2+beta), so the aliasing
  // picked up by trapezoid sampling shrinks by ~2^-(2+beta) per doubling.
  // A 32x oversampling floor keeps the coefficient error orders of
  // magnitude below the second-order discretization error it feeds.
  std::size_t k = samples > 0
                      ? static_cast<std::size_t>(samples)
                      : std::max<std::size_t>(1024, 32 * static_cast<std::size_t>(offsets + 1));
  k = next_pow2(k);
  const auto kk = static_cast<Eigen::Index>(k);
  if (kk < 2 * offsets)
    throw std::invalid_argument("fcd_table: sampling density too small for requested offsets");

  Eigen::VectorXd sin_sq(kk);
  for (Eigen::Index p = 0; p < kk; ++p) {
    const double s = std::sin(std::numbers::pi * static_cast<double>(p) / static_cast<double>(kk));
    sin_sq[p] = 4.0 * s * s;
  }
  // Transform the symbol grid one column at a time and keep only the
  // leading rows, so memory stays at offsets*samples instead of samples^2.
  // Columns q and kk-q hold the same samples, as do entries p and kk-p
  // within a column, which halves both the FFT and the pow() work.
  const Fft& plan = Fft::plan(k);
  Eigen::MatrixXcd partial(offsets, kk);
  Eigen::VectorXcd scratch(kk);
  for (Eigen::Index q = 0; q <= kk / 2; ++q) {
    for (Eigen::Index p = 0; p <= kk / 2; ++p)
      scratch[p] = std::pow(sin_sq[p] + sin_sq[q], beta / 2.0);
    for (Eigen::Index p = kk / 2 + 1; p < kk; ++p) scratch[p] = scratch[kk - p];
    plan.forward(scratch.data());
    partial.col(q) = scratch.head(offsets);
    if (q != 0 && q != kk / 2) partial.col(kk - q) = scratch.head(offsets);
  }
  Eigen::MatrixXd table(offsets, offsets);
  for (Eigen::Index j = 0; j < offsets; ++j) {
    scratch = partial.row(j).transpose();
    plan.forward(scratch.data());
    table.row(j) = scratch.head(offsets).real().transpose() /
                   (static_cast<double>(kk) * static_cast<double>(kk));
  }
  return table;
}

double fcd_symbol_max(double beta) { return std::pow(8.0, beta / 2.0); }

Eigen::VectorXd frac_laplacian_apply(double beta, const Eigen::VectorXd& v, Eigen::Index grid_dim) {
  if (v.size() != grid_dim * grid_dim)
    throw std::invalid_argument("frac_laplacian_apply: shape mismatch");
  return BttbOperator(fcd_table(beta, grid_dim), grid_dim).multiply(v);
}

}  // namespace ultraslow
