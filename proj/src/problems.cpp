// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/problems.hpp"

#include <cmath>
#include <stdexcept>

#include "ultraslow/fractional_laplacian.hpp"
#include "ultraslow/linalg.hpp"
#include "ultraslow/spatial_kernels.hpp"

namespace ultraslow {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

double LogQuartic1d::exact(double x, double t) const {
  const double lt = std::log(t);
  const double w = x * (1.0 - x);
  return lt * lt * lt * w * w * w * w;
}

double LogQuartic1d::source(double x, double t) const {
  const double psi = riesz_prefactor(beta);
  const double lt = std::log(t);
  double spatial = 0.0;
  for (int l = 0; l <= 4; ++l) {
    const double coeff = 24.0 * factorial(4 + l) /
                         (factorial(l) * factorial(4 - l) * std::tgamma(5.0 + l - beta));
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    spatial += sign * coeff *
               (std::pow(x, 4.0 + l - beta) + std::pow(1.0 - x, 4.0 + l - beta));
  }
  const double w = x * (1.0 - x);
  return 6.0 / std::tgamma(4.0 - alpha) * w * w * w * w * std::pow(lt, 3.0 - alpha) +
         lt * lt * lt * psi * spatial;
}

double LogQuartic2d::exact(double x, double y, double t) const {
  const double lt = std::log(t);
  const double px = 1.0 - x * x;
  const double py = 1.0 - y * y;
  return lt * lt * lt * std::pow(px, 4.0) * std::pow(py, 4.0);
}

Eigen::VectorXd LogQuartic2d::profile(Eigen::Index cells) const {
  if (cells < 2) throw std::invalid_argument("LogQuartic2d::profile: need at least two cells");
  const Eigen::Index n = cells - 1;
  const double h = 2.0 / static_cast<double>(cells);
  Eigen::VectorXd values(n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double x = -1.0 + h * static_cast<double>(j + 1);
    const double px = std::pow(1.0 - x * x, 4.0);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double y = -1.0 + h * static_cast<double>(k + 1);
      values[j * n + k] = px * std::pow(1.0 - y * y, 4.0);
    }
  }
  return values;
}

Eigen::VectorXd DiscreteSource2d::at(double t) const {
  const double lt = std::log(t);
  const double w1 = 6.0 / std::tgamma(4.0 - alpha) * std::pow(lt, 3.0 - alpha);
  const double w2 = lt * lt * lt;
  return w1 * profile + w2 * laplacian;
}

ReferenceLaplacian2d make_reference_laplacian_2d(double alpha, double beta,
                                                 Eigen::Index reference_cells) {
  const LogQuartic2d problem{alpha, beta};
  const Eigen::Index fine_n = reference_cells - 1;
  const double fine_h = 2.0 / static_cast<double>(reference_cells);
  const Eigen::VectorXd fine_profile = problem.profile(reference_cells);
  return ReferenceLaplacian2d{
      alpha, beta, reference_cells,
      std::pow(fine_h, -beta) * frac_laplacian_apply(beta, fine_profile, fine_n)};
}

DiscreteSource2d ReferenceLaplacian2d::restrict_to(Eigen::Index cells) const {
  if (cells < 2 || reference_cells < cells || reference_cells % cells != 0)
    throw std::invalid_argument(
        "ReferenceLaplacian2d: reference mesh must refine the target mesh");
  const Eigen::Index fine_n = reference_cells - 1;
  const Eigen::Index stride = reference_cells / cells;
  const Eigen::Index n = cells - 1;
  Eigen::VectorXd lap(n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index fj = stride * (j + 1) - 1;
    for (Eigen::Index k = 0; k < n; ++k) {
      const Eigen::Index fk = stride * (k + 1) - 1;
      lap[j * n + k] = laplacian[fj * fine_n + fk];
    }
  }
  return DiscreteSource2d{LogQuartic2d{alpha, beta}.profile(cells), std::move(lap), alpha};
}

DiscreteSource2d make_discrete_source_2d(double alpha, double beta, Eigen::Index cells,
                                         Eigen::Index reference_cells) {
  return make_reference_laplacian_2d(alpha, beta, reference_cells).restrict_to(cells);
}

}  // namespace ultraslow
