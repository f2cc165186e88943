// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <functional>

#include <Eigen/Core>

#include "ultraslow/scheme.hpp"

namespace ultraslow {

/// Initial-boundary value problem
///   CH-D^alpha u + RZ-D^beta u = f   on (left,right) x (origin,horizon],
/// with zero Dirichlet boundary data, discretized implicitly on a uniform
/// mesh with \p cells cells in space and \p steps steps in time.
struct Solver1dConfig {
  Scheme scheme = Scheme::L2Sigma;
  double alpha = 0.5;
  double beta = 1.5;
  double left = 0.0;
  double right = 1.0;
  double origin = 1.0;
  double horizon = 2.0;
  Eigen::Index cells = 0;
  Eigen::Index steps = 0;
  /// Source f(x, t); an empty function means zero.
  std::function<double(double, double)> source;
  /// Initial data u(x, origin); an empty function means zero.
  std::function<double(double)> initial;
  Method method = Method::Auto;
  double cg_tolerance = 1e-13;
};

struct Solver1dResult {
  /// Interior nodes x_1..x_{M-1}.
  Eigen::VectorXd nodes;
  /// Row n holds the interior values at time level n (row 0 = initial data).
  Eigen::MatrixXd history;
  Diagnostics diagnostics;
};

Solver1dResult solve_1d(const Solver1dConfig& config);

}  // namespace ultraslow
