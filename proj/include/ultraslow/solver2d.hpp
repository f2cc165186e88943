// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <functional>

#include <Eigen/Core>

#include "ultraslow/scheme.hpp"

namespace ultraslow {

/// Initial-boundary value problem
///   CH-D^alpha u + (-Delta)^{beta/2} u = f   on (-L,L)^2 x (origin,horizon],
/// with zero exterior data, discretized implicitly on a uniform mesh with
/// \p cells cells per direction.  Interior fields are stored row-major:
/// index j*(cells-1)+k addresses node (x_{j+1}, y_{k+1}).
struct Solver2dConfig {
  Scheme scheme = Scheme::L2Sigma;
  double alpha = 0.5;
  double beta = 1.5;
  double half_width = 1.0;
  double origin = 1.0;
  double horizon = 2.0;
  Eigen::Index cells = 0;
  Eigen::Index steps = 0;
  /// Interior source field at time t; an empty function means zero.
  std::function<Eigen::VectorXd(double)> source;
  /// Interior initial data; empty means zero.
  Eigen::VectorXd initial;
  double cg_tolerance = 1e-13;
  /// Sampling density override for the operator coefficients (0 = default).
  Eigen::Index fcd_samples = 0;
  Eigen::Index max_cg_iterations = 0;
};

struct Solver2dResult {
  /// Interior coordinates, identical in both directions.
  Eigen::VectorXd nodes;
  /// Row n holds the row-major interior field at time level n.
  Eigen::MatrixXd history;
  Diagnostics diagnostics;
};

Solver2dResult solve_2d(const Solver2dConfig& config);

}  // namespace ultraslow
