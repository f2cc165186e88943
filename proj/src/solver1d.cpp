// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/solver1d.hpp"

#include <cmath>
#include <stdexcept>

#include "ultraslow/linalg.hpp"
#include "ultraslow/spatial_kernels.hpp"
#include "ultraslow/temporal_kernels.hpp"

namespace ultraslow {

namespace {

void validate(const Solver1dConfig& config) {
  if (!(config.alpha > 0.0) || !(config.alpha < 1.0))
    throw std::invalid_argument("solve_1d: alpha must lie in (0,1)");
  if (!(config.beta > 1.0) || !(config.beta < 2.0))
    throw std::invalid_argument("solve_1d: beta must lie in (1,2)");
  if (!(config.right > config.left))
    throw std::invalid_argument("solve_1d: empty spatial interval");
  if (config.cells < 2) throw std::invalid_argument("solve_1d: need at least two cells");
  if (config.steps < 1) throw std::invalid_argument("solve_1d: need at least one step");
}

Eigen::VectorXd solve_step(const SymmetricToeplitz& op, double shift, double scale,
                           const Eigen::VectorXd& rhs, const Solver1dConfig& config,
                           const Eigen::VectorXd& guess, Diagnostics& diag) {
  switch (config.method == Method::Auto ? Method::Toeplitz : config.method) {
    case Method::Cg: {
      Eigen::VectorXd x = guess;
      CgOptions opts;
      opts.tolerance = config.cg_tolerance;
      opts.condition_bound = (shift + scale * op.spectral_bound()) / shift;
      const CgResult info = cg_solve(
          [&](const Eigen::VectorXd& v) { return op.multiply_shifted(shift, scale, v); }, rhs, x,
          opts);
      if (!info.converged) throw SolverError("solve_1d: conjugate gradients stalled");
      diag.total_cg_iterations += info.iterations;
      diag.max_cg_residual = std::max(diag.max_cg_residual, info.relative_residual);
      return x;
    }
    case Method::Dense: {
      const Eigen::Index m = rhs.size();
      Eigen::MatrixXd dense(m, m);
      const Eigen::VectorXd& col = op.first_column();
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) dense(i, j) = scale * col[std::abs(i - j)];
      dense.diagonal().array() += shift;
      return dense_solve(dense, rhs);
    }
    default:
      return op.solve_shifted(shift, scale, rhs);
  }
}

}  // namespace

Solver1dResult solve_1d(const Solver1dConfig& config) {
  validate(config);
  const Eigen::Index m = config.cells - 1;
  const Eigen::Index n_steps = config.steps;
  const double h = (config.right - config.left) / static_cast<double>(config.cells);
  const double scale = std::pow(h, -config.beta);
  const TemporalGrid<double> grid(config.origin, config.horizon, n_steps);
  const double tau = grid.step();

  Solver1dResult result;
  result.nodes.resize(m);
  for (Eigen::Index j = 0; j < m; ++j)
    result.nodes[j] = config.left + h * static_cast<double>(j + 1);

  const SymmetricToeplitz op(riesz_kernel(config.beta, m));

  Eigen::MatrixXd& u = result.history;
  u.setZero(n_steps + 1, m);
  if (config.initial)
    for (Eigen::Index j = 0; j < m; ++j) u(0, j) = config.initial(result.nodes[j]);

  Diagnostics& diag = result.diagnostics;
  const auto record_norm = [&](Eigen::Index level) {
    diag.solution_norms.push_back(std::sqrt(h * u.row(level).squaredNorm()));
  };
  record_norm(0);

  Eigen::VectorXd rhs(m), f_values(m);
  double forcing_term = 0.0;  // max over steps of (elapsed^alpha * ||f||) or its square

  const auto eval_source = [&](double t) {
    if (config.source)
      for (Eigen::Index j = 0; j < m; ++j) f_values[j] = config.source(result.nodes[j], t);
    else
      f_values.setZero();
  };

  if (config.scheme == Scheme::L2Sigma) {
    const double sigma = 1.0 - config.alpha / 2.0;
    Eigen::MatrixXd du(n_steps, m);
    for (Eigen::Index n = 0; n < n_steps; ++n) {
      const Eigen::VectorXd c = l2sigma_weights(config.alpha, grid, n);
      const double t_eval = grid.node(static_cast<double>(n) + sigma);
      eval_source(t_eval);
      const double elapsed = (static_cast<double>(n) + sigma) * tau;
      forcing_term = std::max(forcing_term,
                              std::pow(elapsed, config.alpha) * h * f_values.squaredNorm());
      rhs = f_values + c[n] * u.row(n).transpose() -
            (1.0 - sigma) * scale * op.multiply(u.row(n).transpose());
      if (n > 0) rhs.noalias() -= du.topRows(n).transpose() * c.head(n);
      u.row(n + 1) =
          solve_step(op, c[n], sigma * scale, rhs, config, u.row(n).transpose(), diag).transpose();
      du.row(n) = u.row(n + 1) - u.row(n);
      record_norm(n + 1);
    }
    const double width = config.right - config.left;
    const double front = std::pow(width, config.beta) * std::tgamma(1.0 - config.alpha) /
                         (riesz_sum_lower_constant(config.beta) * std::pow(config.origin, config.alpha));
    const double initial_sq = h * u.row(0).squaredNorm();
    diag.stability_bound = std::sqrt(initial_sq + front * forcing_term);
    diag.stability_bound_proven = true;
  } else {
    for (Eigen::Index n = 1; n <= n_steps; ++n) {
      const Eigen::VectorXd c = l12_weights(config.alpha, grid, n);
      eval_source(grid.node(static_cast<double>(n)));
      const double elapsed = static_cast<double>(n) * tau;
      forcing_term = std::max(forcing_term,
                              std::pow(elapsed, config.alpha) * std::sqrt(h) * f_values.norm());
      rhs = f_values + c[0] * u.row(0).transpose();
      for (Eigen::Index i = 1; i <= n - 1; ++i)
        rhs.noalias() += (c[i] - c[i - 1]) * u.row(i).transpose();
      u.row(n) = solve_step(op, c[n - 1], scale, rhs, config,
                            u.row(n - 1).transpose(), diag)
                     .transpose();
      record_norm(n);
    }
    const double a0 = std::pow(config.origin, config.alpha);
    const double c_alpha = std::max(6.0 * std::tgamma(1.0 - config.alpha) / a0,
                                    3.0 * std::tgamma(2.0 - config.alpha) / (config.alpha * a0));
    diag.stability_bound = diag.solution_norms.front() + c_alpha * forcing_term;
    diag.stability_bound_proven = config.alpha < l12_proven_alpha_max();
    if (!diag.stability_bound_proven)
      diag.warnings.push_back(
          "endpoint scheme: alpha is outside the proven stability range; "
          "the reported bound is heuristic");
  }
  return result;
}

}  // namespace ultraslow
