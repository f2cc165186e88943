// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/reporting.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace ultraslow {

namespace {

std::string full_precision(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string short_precision(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3g", value);
  return buffer;
}

}  // namespace

std::string to_csv(const ConvergenceStudy& study) {
  std::ostringstream out;
  out << "mesh,error,order\n";
  for (const LadderRow& row : study.rows) {
    out << full_precision(row.resolution) << ',';
    if (!std::isnan(row.error)) out << full_precision(row.error);
    out << ',';
    if (!std::isnan(row.order)) out << full_precision(row.order);
    out << '\n';
  }
  return out.str();
}

std::string to_markdown(const ConvergenceStudy& study) {
  std::ostringstream out;
  out << "| mesh | error | order |\n|---|---|---|\n";
  for (const LadderRow& row : study.rows) {
    out << "| " << short_precision(row.resolution) << " | ";
    out << (std::isnan(row.error) ? std::string("-") : short_precision(row.error)) << " | ";
    out << (std::isnan(row.order) ? std::string("-") : short_precision(row.order)) << " |\n";
  }
  return out.str();
}

void write_trajectory_csv(std::ostream& out, const Solver1dResult& result,
                          const Solver1dConfig& config) {
  out << "n,j,x,t,U\n";
  const double tau = (config.horizon - config.origin) / static_cast<double>(config.steps);
  for (Eigen::Index n = 0; n <= config.steps; ++n) {
    const double t = config.origin + tau * static_cast<double>(n);
    for (Eigen::Index j = 0; j < result.nodes.size(); ++j) {
      out << n << ',' << (j + 1) << ',' << full_precision(result.nodes[j]) << ','
          << full_precision(t) << ',' << full_precision(result.history(n, j)) << '\n';
    }
  }
}

void write_trajectory_csv(std::ostream& out, const Solver2dResult& result,
                          const Solver2dConfig& config) {
  out << "n,j,k,x,y,t,U\n";
  const double tau = (config.horizon - config.origin) / static_cast<double>(config.steps);
  const Eigen::Index inner = result.nodes.size();
  for (Eigen::Index n = 0; n <= config.steps; ++n) {
    const double t = config.origin + tau * static_cast<double>(n);
    for (Eigen::Index j = 0; j < inner; ++j) {
      for (Eigen::Index k = 0; k < inner; ++k) {
        out << n << ',' << (j + 1) << ',' << (k + 1) << ','
            << full_precision(result.nodes[j]) << ',' << full_precision(result.nodes[k]) << ','
            << full_precision(t) << ',' << full_precision(result.history(n, j * inner + k))
            << '\n';
      }
    }
  }
}

void write_trajectory_binary(std::ostream& out, const Solver2dResult& result,
                             const Solver2dConfig& config) {
  const Eigen::Index inner = result.nodes.size();
  const Eigen::Index count = (config.steps + 1) * inner * inner;
  out << "ultraslow-fde-2d cells=" << config.cells << " steps=" << config.steps
      << " interior=" << inner << " origin=" << full_precision(config.origin)
      << " horizon=" << full_precision(config.horizon) << " layout=row-major count=" << count
      << '\n';
  std::vector<double> row(inner * inner);
  for (Eigen::Index n = 0; n <= config.steps; ++n) {
    for (Eigen::Index i = 0; i < inner * inner; ++i) row[static_cast<std::size_t>(i)] = result.history(n, i);
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(double)));
  }
}

}  // namespace ultraslow
