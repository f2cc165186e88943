// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/spatial_kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ultraslow/linalg.hpp"

namespace ultraslow {

namespace {

void check_riesz_order(double beta) {
  if (!(beta > 1.0) || !(beta < 2.0))
    throw std::invalid_argument("riesz kernel: order must lie in (1,2)");
}

}  // namespace

Eigen::VectorXd gl_weights(double beta, Eigen::Index count) {
  if (count < 1) throw std::invalid_argument("gl_weights: need at least one weight");
  Eigen::VectorXd g(count);
  g[0] = 1.0;
  for (Eigen::Index k = 1; k < count; ++k)
    g[k] = (1.0 - (beta + 1.0) / static_cast<double>(k)) * g[k - 1];
  return g;
}

double riesz_prefactor(double beta) {
  check_riesz_order(beta);
  return 1.0 / (2.0 * std::cos(std::numbers::pi * beta / 2.0));
}

Eigen::VectorXd riesz_kernel(double beta, Eigen::Index count) {
  check_riesz_order(beta);
  if (count < 1) throw std::invalid_argument("riesz_kernel: need at least one entry");
  const Eigen::VectorXd g = gl_weights(beta, count + 1);
  const double psi = riesz_prefactor(beta);
  const double lo = beta / 2.0;
  const double hi = (2.0 - beta) / 2.0;
  Eigen::VectorXd r(count);
  r[0] = 2.0 * psi * (lo * g[1] + hi * g[0]);
  if (count > 1) r[1] = psi * (lo * g[0] + hi * g[1] + lo * g[2]);
  for (Eigen::Index k = 2; k < count; ++k) r[k] = psi * (lo * g[k + 1] + hi * g[k]);
  return r;
}

double riesz_sum_lower_constant(double beta) {
  check_riesz_order(beta);
  return (1.0 - beta) * (2.0 - beta) * (3.0 - beta) * std::pow(4.0, beta) *
         std::exp(-2.25) * riesz_prefactor(beta) / 3.0;
}

Eigen::VectorXd riesz_apply(double beta, const Eigen::VectorXd& v) {
  return SymmetricToeplitz(riesz_kernel(beta, v.size())).multiply(v);
}

}  // namespace ultraslow
