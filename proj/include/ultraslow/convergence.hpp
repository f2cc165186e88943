// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "ultraslow/scheme.hpp"
#include "ultraslow/solver1d.hpp"
#include "ultraslow/solver2d.hpp"

namespace ultraslow {

struct LadderRow {
  /// Mesh width or time step attached to this row's solve.
  double resolution = 0.0;
  /// Error measure; NaN when the row has no value (first row of paired ladders).
  double error = 0.0;
  /// Observed order against the previous row; NaN on rows without one.
  double order = 0.0;
};

struct ConvergenceStudy {
  Scheme scheme = Scheme::L2Sigma;
  std::string mode;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<LadderRow> rows;
};

/// sqrt(weight * sum of squared differences) between two equally sized vectors.
double weighted_l2_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double weight);

/// Exact-error ladder in space for the 1D benchmark: one solve per entry of
/// \p cells_ladder, all at \p steps time steps; errors are measured at the
/// final time against the manufactured solution.
ConvergenceStudy spatial_study_1d(Scheme scheme, double alpha, double beta,
                                  const std::vector<Eigen::Index>& cells_ladder,
                                  Eigen::Index steps, Method method = Method::Auto);

/// Exact-error ladder in time for the 1D benchmark at a fixed mesh.
ConvergenceStudy temporal_study_1d(Scheme scheme, double alpha, double beta, Eigen::Index cells,
                                   const std::vector<Eigen::Index>& steps_ladder,
                                   Method method = Method::Auto);

/// Paired-difference ladder in space for the 2D benchmark.  Each row after
/// the first compares its solve with the previous (coarser) one on the
/// coarse nodes; the first row carries no value.
ConvergenceStudy spatial_study_2d(Scheme scheme, double alpha, double beta,
                                  const std::vector<Eigen::Index>& cells_ladder,
                                  Eigen::Index steps);

/// Paired-difference ladder in time for the 2D benchmark at a fixed mesh.
ConvergenceStudy temporal_study_2d(Scheme scheme, double alpha, double beta, Eigen::Index cells,
                                   const std::vector<Eigen::Index>& steps_ladder);

/// Restricts a fine row-major interior field to the nodes of a coarser mesh;
/// \p fine_cells must be a multiple of \p coarse_cells.
Eigen::VectorXd restrict_interior_2d(const Eigen::VectorXd& fine, Eigen::Index fine_cells,
                                     Eigen::Index coarse_cells);

}  // namespace ultraslow
