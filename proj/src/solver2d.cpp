// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/solver2d.hpp"

#include <cmath>
#include <stdexcept>

#include "ultraslow/fractional_laplacian.hpp"
#include "ultraslow/linalg.hpp"
#include "ultraslow/temporal_kernels.hpp"

namespace ultraslow {

namespace {

void validate(const Solver2dConfig& config) {
  if (!(config.alpha > 0.0) || !(config.alpha < 1.0))
    throw std::invalid_argument("solve_2d: alpha must lie in (0,1)");
  if (!(config.beta > 1.0) || !(config.beta < 2.0))
    throw std::invalid_argument("solve_2d: beta must lie in (1,2)");
  if (!(config.half_width > 0.0))
    throw std::invalid_argument("solve_2d: half_width must be positive");
  if (config.cells < 2) throw std::invalid_argument("solve_2d: need at least two cells");
  if (config.steps < 1) throw std::invalid_argument("solve_2d: need at least one step");
}

}  // namespace

Solver2dResult solve_2d(const Solver2dConfig& config) {
  validate(config);
  const Eigen::Index n = config.cells - 1;
  const Eigen::Index dim = n * n;
  const Eigen::Index n_steps = config.steps;
  const double h = 2.0 * config.half_width / static_cast<double>(config.cells);
  const double scale = std::pow(h, -config.beta);
  const TemporalGrid<double> grid(config.origin, config.horizon, n_steps);

  Solver2dResult result;
  result.nodes.resize(n);
  for (Eigen::Index j = 0; j < n; ++j)
    result.nodes[j] = -config.half_width + h * static_cast<double>(j + 1);

  const BttbOperator op(fcd_table(config.beta, n, config.fcd_samples), n);

  Eigen::MatrixXd& u = result.history;
  u.setZero(n_steps + 1, dim);
  if (config.initial.size() != 0) {
    if (config.initial.size() != dim)
      throw std::invalid_argument("solve_2d: initial data has wrong size");
    u.row(0) = config.initial.transpose();
  }

  Diagnostics& diag = result.diagnostics;
  const auto record_norm = [&](Eigen::Index level) {
    diag.solution_norms.push_back(std::sqrt(h * h * u.row(level).squaredNorm()));
  };
  record_norm(0);

  const auto eval_source = [&](double t) -> Eigen::VectorXd {
    if (!config.source) return Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd f = config.source(t);
    if (f.size() != dim) throw std::invalid_argument("solve_2d: source field has wrong size");
    return f;
  };

  const auto step_solve = [&](double shift, const Eigen::VectorXd& rhs, double weight,
                              const Eigen::VectorXd& guess) {
    Eigen::VectorXd x = guess;
    CgOptions opts;
    opts.tolerance = config.cg_tolerance;
    opts.max_iterations = config.max_cg_iterations;
    opts.condition_bound = (shift + weight * op.spectral_bound()) / shift;
    const CgResult info = cg_solve(
        [&](const Eigen::VectorXd& v) { return op.multiply_shifted(shift, weight, v); }, rhs, x,
        opts);
    if (!info.converged) throw SolverError("solve_2d: conjugate gradients stalled");
    diag.total_cg_iterations += info.iterations;
    diag.max_cg_residual = std::max(diag.max_cg_residual, info.relative_residual);
    return x;
  };

  Eigen::VectorXd guess(dim);
  if (config.scheme == Scheme::L2Sigma) {
    const double sigma = 1.0 - config.alpha / 2.0;
    Eigen::MatrixXd du(n_steps, dim);
    for (Eigen::Index k = 0; k < n_steps; ++k) {
      const Eigen::VectorXd c = l2sigma_weights(config.alpha, grid, k);
      Eigen::VectorXd rhs = eval_source(grid.node(static_cast<double>(k) + sigma));
      rhs.noalias() += c[k] * u.row(k).transpose();
      rhs.noalias() -= (1.0 - sigma) * scale * op.multiply(u.row(k).transpose());
      if (k > 0) rhs.noalias() -= du.topRows(k).transpose() * c.head(k);
      if (k > 0)
        guess = (2.0 * u.row(k) - u.row(k - 1)).transpose();
      else
        guess = u.row(k).transpose();
      u.row(k + 1) = step_solve(c[k], rhs, sigma * scale, guess).transpose();
      du.row(k) = u.row(k + 1) - u.row(k);
      record_norm(k + 1);
    }
  } else {
    if (config.alpha >= l12_proven_alpha_max())
      diag.warnings.push_back(
          "endpoint scheme: alpha is outside the proven stability range");
    for (Eigen::Index k = 1; k <= n_steps; ++k) {
      const Eigen::VectorXd c = l12_weights(config.alpha, grid, k);
      Eigen::VectorXd rhs = eval_source(grid.node(static_cast<double>(k)));
      rhs.noalias() += c[0] * u.row(0).transpose();
      for (Eigen::Index i = 1; i <= k - 1; ++i)
        rhs.noalias() += (c[i] - c[i - 1]) * u.row(i).transpose();
      if (k > 1)
        guess = (2.0 * u.row(k - 1) - u.row(k - 2)).transpose();
      else
        guess = u.row(k - 1).transpose();
      u.row(k) = step_solve(c[k - 1], rhs, scale, guess).transpose();
      record_norm(k);
    }
  }
  return result;
}

}  // namespace ultraslow
