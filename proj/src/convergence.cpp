// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/convergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ultraslow/parallel.hpp"
#include "ultraslow/problems.hpp"

namespace ultraslow {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

void attach_orders(ConvergenceStudy& study) {
  for (std::size_t i = 1; i < study.rows.size(); ++i) {
    LadderRow& row = study.rows[i];
    const LadderRow& prev = study.rows[i - 1];
    if (std::isnan(prev.error) || std::isnan(row.error)) continue;
    row.order = std::log2(prev.error / row.error) /
                std::log2(prev.resolution / row.resolution);
  }
}

}  // namespace

double weighted_l2_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double weight) {
  if (a.size() != b.size())
    throw std::invalid_argument("weighted_l2_distance: size mismatch");
  return std::sqrt(weight * (a - b).squaredNorm());
}

namespace {

/// Solves one manufactured-solution run and returns the weighted L2 distance
/// between the final time level and the exact solution there.
double exact_error_1d(Scheme scheme, const LogQuartic1d& problem, Eigen::Index cells,
                      Eigen::Index steps, Method method) {
  Solver1dConfig config;
  config.scheme = scheme;
  config.alpha = problem.alpha;
  config.beta = problem.beta;
  config.cells = cells;
  config.steps = steps;
  config.method = method;
  config.source = [&problem](double x, double t) { return problem.source(x, t); };
  const Solver1dResult result = solve_1d(config);
  const double h = 1.0 / static_cast<double>(cells);
  Eigen::VectorXd exact(result.nodes.size());
  for (Eigen::Index j = 0; j < exact.size(); ++j)
    exact[j] = problem.exact(result.nodes[j], problem.horizon);
  return weighted_l2_distance(result.history.row(steps).transpose(), exact, h);
}

}  // namespace

ConvergenceStudy spatial_study_1d(Scheme scheme, double alpha, double beta,
                                  const std::vector<Eigen::Index>& cells_ladder,
                                  Eigen::Index steps, Method method) {
  const LogQuartic1d problem{alpha, beta};
  ConvergenceStudy study{scheme, "spatial-1d", alpha, beta, {}};
  study.rows.resize(cells_ladder.size(), {nan_value, nan_value, nan_value});
  parallel_for(static_cast<Eigen::Index>(cells_ladder.size()), [&](Eigen::Index i) {
    const Eigen::Index cells = cells_ladder[static_cast<std::size_t>(i)];
    const double error = exact_error_1d(scheme, problem, cells, steps, method);
    study.rows[static_cast<std::size_t>(i)] = {1.0 / static_cast<double>(cells), error, nan_value};
  });
  attach_orders(study);
  return study;
}

ConvergenceStudy temporal_study_1d(Scheme scheme, double alpha, double beta, Eigen::Index cells,
                                   const std::vector<Eigen::Index>& steps_ladder, Method method) {
  const LogQuartic1d problem{alpha, beta};
  ConvergenceStudy study{scheme, "temporal-1d", alpha, beta, {}};
  study.rows.resize(steps_ladder.size(), {nan_value, nan_value, nan_value});
  parallel_for(static_cast<Eigen::Index>(steps_ladder.size()), [&](Eigen::Index i) {
    const Eigen::Index steps = steps_ladder[static_cast<std::size_t>(i)];
    const double error = exact_error_1d(scheme, problem, cells, steps, method);
    const double tau = (problem.horizon - problem.origin) / static_cast<double>(steps);
    study.rows[static_cast<std::size_t>(i)] = {tau, error, nan_value};
  });
  attach_orders(study);
  return study;
}

Eigen::VectorXd restrict_interior_2d(const Eigen::VectorXd& fine, Eigen::Index fine_cells,
                                     Eigen::Index coarse_cells) {
  if (fine_cells % coarse_cells != 0)
    throw std::invalid_argument("restrict_interior_2d: meshes are not nested");
  const Eigen::Index stride = fine_cells / coarse_cells;
  const Eigen::Index fine_n = fine_cells - 1;
  const Eigen::Index n = coarse_cells - 1;
  if (fine.size() != fine_n * fine_n)
    throw std::invalid_argument("restrict_interior_2d: field size mismatch");
  Eigen::VectorXd coarse(n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index fj = stride * (j + 1) - 1;
    for (Eigen::Index k = 0; k < n; ++k)
      coarse[j * n + k] = fine[fj * fine_n + stride * (k + 1) - 1];
  }
  return coarse;
}

namespace {

Solver2dResult run_2d(Scheme scheme, const ReferenceLaplacian2d& reference, Eigen::Index cells,
                      Eigen::Index steps) {
  Solver2dConfig config;
  config.scheme = scheme;
  config.alpha = reference.alpha;
  config.beta = reference.beta;
  config.cells = cells;
  config.steps = steps;
  const DiscreteSource2d source = reference.restrict_to(cells);
  config.source = [source](double t) { return source.at(t); };
  return solve_2d(config);
}

}  // namespace

ConvergenceStudy spatial_study_2d(Scheme scheme, double alpha, double beta,
                                  const std::vector<Eigen::Index>& cells_ladder,
                                  Eigen::Index steps) {
  ConvergenceStudy study{scheme, "spatial-2d", alpha, beta, {}};
  const ReferenceLaplacian2d reference = make_reference_laplacian_2d(alpha, beta);
  Eigen::VectorXd previous;
  Eigen::Index previous_cells = 0;
  for (const Eigen::Index cells : cells_ladder) {
    const Solver2dResult result = run_2d(scheme, reference, cells, steps);
    const Eigen::VectorXd field = result.history.row(steps).transpose();
    const double h = 2.0 / static_cast<double>(cells);
    double error = nan_value;
    if (previous_cells > 0) {
      const double coarse_h = 2.0 / static_cast<double>(previous_cells);
      error = weighted_l2_distance(previous, restrict_interior_2d(field, cells, previous_cells),
                                   coarse_h * coarse_h);
    }
    study.rows.push_back({h, error, nan_value});
    previous = field;
    previous_cells = cells;
  }
  attach_orders(study);
  return study;
}

ConvergenceStudy temporal_study_2d(Scheme scheme, double alpha, double beta, Eigen::Index cells,
                                   const std::vector<Eigen::Index>& steps_ladder) {
  ConvergenceStudy study{scheme, "temporal-2d", alpha, beta, {}};
  const double h = 2.0 / static_cast<double>(cells);
  const ReferenceLaplacian2d reference = make_reference_laplacian_2d(alpha, beta);
  Eigen::VectorXd previous;
  bool have_previous = false;
  for (const Eigen::Index steps : steps_ladder) {
    const Solver2dResult result = run_2d(scheme, reference, cells, steps);
    const Eigen::VectorXd field = result.history.row(steps).transpose();
    const double tau = 1.0 / static_cast<double>(steps);
    double error = nan_value;
    if (have_previous) error = weighted_l2_distance(previous, field, h * h);
    study.rows.push_back({tau, error, nan_value});
    previous = field;
    have_previous = true;
  }
  attach_orders(study);
  return study;
}

}  // namespace ultraslow
