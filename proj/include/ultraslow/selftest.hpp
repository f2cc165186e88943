// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <string>
#include <vector>

namespace ultraslow {

/// Outcome of one randomized property suite.  A suite passes when it ran at
/// least one check and recorded no violations.
struct PropertyReport {
  std::string name;
  long checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return checks > 0 && violations.empty(); }
};

/// Sign, monotonicity, and lower-bound structure of the offset-point temporal
/// weight rows, sampled over random orders, grid origins, and row indices.
PropertyReport offset_row_properties(int samples, unsigned seed);

/// Sign and near-monotonicity structure of the endpoint temporal weight rows,
/// including the stronger chains that hold for small orders.
PropertyReport endpoint_row_properties(int samples, unsigned seed);

/// Sign, monotonicity, and partial-sum structure of the Grünwald-Letnikov
/// expansion weights for beta in {1.1, 1.3, 1.5, 1.7, 1.9}, up to m = 4096.
PropertyReport displacement_weight_properties();

/// Sign structure, sliding-window sums, and the power-law lower bound on
/// symmetric partial sums of the Riesz stencil column, same beta/m coverage.
PropertyReport riesz_kernel_properties();

/// Two-sided energy bound and strict positivity of the one-dimensional
/// stencil quadratic form on random interior fields.
PropertyReport quadratic_form_properties_1d(int fields, unsigned seed);

/// Strict positivity and the symbol-based upper bound of the two-dimensional
/// coefficient quadratic form on random interior fields.
PropertyReport quadratic_form_properties_2d(int fields, unsigned seed);

/// FFT-based Toeplitz and block-Toeplitz products against dense matrices at
/// small sizes.
PropertyReport operator_equivalence_properties(unsigned seed);

/// Runs every suite at the given sampling effort.
std::vector<PropertyReport> run_property_suites(int row_samples, int field_samples, unsigned seed);

}  // namespace ultraslow
