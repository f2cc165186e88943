// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <Eigen/Core>

namespace ultraslow {

/// Manufactured benchmark on [0,1] with the Riesz derivative of order beta
/// and a Caputo-Hadamard derivative of order alpha in time on [1,2]:
///   u(x,t) = log(t)^3 x^4 (1-x)^4,  u(x,1) = 0.
/// The source term is available in closed form.
struct LogQuartic1d {
  double alpha;
  double beta;

  static constexpr double origin = 1.0;
  static constexpr double horizon = 2.0;

  double exact(double x, double t) const;
  double source(double x, double t) const;
};

/// Manufactured benchmark on (-1,1)^2 with the integral fractional Laplacian
/// of order beta/2 and a Caputo-Hadamard derivative of order alpha on [1,2]:
///   u(x,y,t) = log(t)^3 (1-x^2)^4 (1-y^2)^4,  u(x,y,1) = 0.
struct LogQuartic2d {
  double alpha;
  double beta;

  static constexpr double origin = 1.0;
  static constexpr double horizon = 2.0;

  double exact(double x, double y, double t) const;

  /// Spatial profile (1-x^2)^4 (1-y^2)^4 at the interior nodes of a mesh
  /// with \p cells cells per direction, row-major.
  Eigen::VectorXd profile(Eigen::Index cells) const;
};

/// Discrete-in-space source for LogQuartic2d.  The fractional Laplacian of
/// the spatial profile has no convenient closed form, so it is approximated
/// once on a fine reference mesh and restricted to the target mesh:
///   f_h(., t) = 6/Gamma(4-alpha) log(t)^{3-alpha} * profile
///             + log(t)^3 * laplacian.
struct DiscreteSource2d {
  Eigen::VectorXd profile;
  Eigen::VectorXd laplacian;
  double alpha = 0.0;

  Eigen::VectorXd at(double t) const;
};

/// Fractional Laplacian of the LogQuartic2d profile evaluated once on a fine
/// reference mesh; reusable across target meshes.
struct ReferenceLaplacian2d {
  double alpha = 0.0;
  double beta = 0.0;
  Eigen::Index reference_cells = 0;
  Eigen::VectorXd laplacian;

  /// Restriction to a coarser mesh; \p cells must divide reference_cells.
  DiscreteSource2d restrict_to(Eigen::Index cells) const;
};

ReferenceLaplacian2d make_reference_laplacian_2d(double alpha, double beta,
                                                 Eigen::Index reference_cells = 512);

/// Builds the discrete source for a mesh with \p cells cells per direction.
/// \p reference_cells must be a multiple of \p cells so the coarse nodes are
/// a subset of the reference nodes.
DiscreteSource2d make_discrete_source_2d(double alpha, double beta, Eigen::Index cells,
                                         Eigen::Index reference_cells = 512);

}  // namespace ultraslow
