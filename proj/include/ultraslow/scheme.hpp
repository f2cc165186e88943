// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <limits>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace ultraslow {

/// Temporal discretizations of the Caputo-Hadamard derivative.
///   L2Sigma: second-order weights at the offset point t_{k+sigma},
///            unconditionally stable for all alpha in (0,1).
///   L12:     (3-alpha)-order weights at the mesh point t_k, with stability
///            proven for alpha below l12_proven_alpha_max().
enum class Scheme { L2Sigma, L12 };

/// Largest derivative order for which the endpoint scheme carries a
/// stability proof.
constexpr double l12_proven_alpha_max() { return 0.3738; }

/// How the per-step linear systems are solved.
enum class Method { Auto, Toeplitz, Cg, Dense };

struct Diagnostics {
  /// Weighted discrete L2 norms of the solution, one entry per time level.
  std::vector<double> solution_norms;
  /// A-priori bound on max_n ||U^n||; NaN when no bound is available.
  double stability_bound = std::numeric_limits<double>::quiet_NaN();
  /// False when the scheme/order combination leaves the proven range.
  bool stability_bound_proven = false;
  std::vector<std::string> warnings;
  Eigen::Index total_cg_iterations = 0;
  double max_cg_residual = 0.0;
};

inline const char* scheme_name(Scheme scheme) {
  return scheme == Scheme::L2Sigma ? "l2sigma" : "l12";
}

}  // namespace ultraslow
