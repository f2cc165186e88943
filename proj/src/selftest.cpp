// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "ultraslow/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "ultraslow/fractional_laplacian.hpp"
#include "ultraslow/linalg.hpp"
#include "ultraslow/spatial_kernels.hpp"
#include "ultraslow/temporal_kernels.hpp"

namespace ultraslow {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Largest order for which the endpoint rows are fully monotone.
constexpr double kMonotoneOrderMax = 0.3738;
// Largest order for which the endpoint first-weight lower bound is available.
constexpr double kBoundedOrderMax = 0.4701;

constexpr int kMaxRecorded = 8;

void record(PropertyReport& report, const std::string& message) {
  if (static_cast<int>(report.violations.size()) < kMaxRecorded) {
    report.violations.push_back(message);
  } else if (static_cast<int>(report.violations.size()) == kMaxRecorded) {
    report.violations.push_back("... further violations suppressed");
  }
}

struct GridSample {
  double alpha;
  TemporalGrid<double> grid;
};

// Random order and mesh with the step small relative to the origin, the
// regime in which the weight-row inequalities are stated.
GridSample draw_grid(std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double origin = std::exp(std::log(0.5) + unit(rng) * (std::log(3.0) - std::log(0.5)));
  const double length = 0.5 + 1.5 * unit(rng);
  const double alpha = 0.02 + 0.96 * unit(rng);
  const auto min_steps = static_cast<Eigen::Index>(std::ceil(64.0 * length / origin));
  const Eigen::Index steps = min_steps + static_cast<Eigen::Index>(unit(rng) * 64.0);
  return {alpha, TemporalGrid<double>(origin, origin + length, steps)};
}

Eigen::Index draw_row_index(std::mt19937& rng, Eigen::Index lo, Eigen::Index hi) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Eigen::Index small_hi = std::min<Eigen::Index>(lo + 6, hi);
  if (unit(rng) < 0.3) return lo + static_cast<Eigen::Index>(unit(rng) * (small_hi - lo + 1));
  return lo + static_cast<Eigen::Index>(unit(rng) * (hi - lo + 1));
}

std::string describe(const GridSample& s, Eigen::Index k) {
  std::ostringstream os;
  os << "alpha=" << s.alpha << " origin=" << s.grid.origin << " horizon=" << s.grid.horizon
     << " steps=" << s.grid.steps << " row=" << k;
  return os.str();
}

}  // namespace

PropertyReport offset_row_properties(int samples, unsigned seed) {
  PropertyReport report{"offset weight rows", 0, {}};
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const GridSample g = draw_grid(rng);
    const Eigen::Index k =
        draw_row_index(rng, 0, std::min<Eigen::Index>(g.grid.steps - 1, 96));
    const Eigen::VectorXd c = l2sigma_weights(g.alpha, g.grid, k);
    ++report.checks;

    if (!(c[0] > 0.0)) record(report, "first weight not positive: " + describe(g, k));
    for (Eigen::Index i = 0; i + 1 <= k; ++i) {
      if (!(c[i] < c[i + 1])) {
        record(report, "row not strictly increasing at " + std::to_string(i) + ": " + describe(g, k));
        break;
      }
    }

    const double sigma = 1.0 - g.alpha / 2.0;
    if (k >= 1 && !((2.0 * sigma - 1.0) * c[k] > sigma * c[k - 1])) {
      record(report, "last-weight dominance fails: " + describe(g, k));
    }

    const double tau = g.grid.step();
    const double bound = 2.0 * std::tgamma(1.0 - g.alpha) / std::pow(g.grid.origin, g.alpha) *
                         std::pow((static_cast<double>(k) + sigma) * tau, g.alpha);
    if (!(1.0 / c[0] < bound)) {
      record(report, "first-weight lower bound fails: " + describe(g, k));
    }
  }
  return report;
}

PropertyReport endpoint_row_properties(int samples, unsigned seed) {
  PropertyReport report{"endpoint weight rows", 0, {}};
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const GridSample g = draw_grid(rng);
    const Eigen::Index k = draw_row_index(rng, 4, std::min<Eigen::Index>(g.grid.steps, 96));
    ++report.checks;

    const Eigen::VectorXd row2 = l12_weights(g.alpha, g.grid, 2);
    if (!(row2[1] > 0.0)) record(report, "k=2 last weight not positive: " + describe(g, 2));
    if (!(row2[1] > std::abs(row2[0]))) {
      record(report, "k=2 last weight not dominant: " + describe(g, 2));
    }

    const Eigen::VectorXd row3 = l12_weights(g.alpha, g.grid, 3);
    if (!(row3[2] > row3[0] && row3[0] > 0.0)) {
      record(report, "k=3 ordering fails: " + describe(g, 3));
    }
    if (!(row3[2] > std::abs(row3[1]))) {
      record(report, "k=3 last weight not dominant: " + describe(g, 3));
    }

    const Eigen::VectorXd c = l12_weights(g.alpha, g.grid, k);
    if (!(c[k - 1] > std::abs(c[k - 2]))) {
      record(report, "last weight not dominant: " + describe(g, k));
    }
    if (!(c[k - 1] > c[k - 3])) {
      record(report, "last weight below skipped chain: " + describe(g, k));
    }
    if (!(c[0] > 0.0)) record(report, "first weight not positive: " + describe(g, k));
    for (Eigen::Index i = 0; i + 1 <= k - 3; ++i) {
      if (!(c[i] < c[i + 1])) {
        record(report, "interior chain fails at " + std::to_string(i) + ": " + describe(g, k));
        break;
      }
    }

    if (g.alpha < kMonotoneOrderMax) {
      for (Eigen::Index i = 0; i + 1 <= k - 1; ++i) {
        if (!(c[i] < c[i + 1])) {
          record(report, "full monotone chain fails at " + std::to_string(i) + ": " + describe(g, k));
          break;
        }
      }
    }

    if (g.alpha < kBoundedOrderMax) {
      const double tau = g.grid.step();
      const double origin_pow = std::pow(g.grid.origin, g.alpha);
      const double cap = std::max(6.0 * std::tgamma(1.0 - g.alpha) / origin_pow,
                                  3.0 * std::tgamma(2.0 - g.alpha) / (g.alpha * origin_pow));
      for (Eigen::Index j : {Eigen::Index{1}, Eigen::Index{2}, k}) {
        const Eigen::VectorXd row = l12_weights(g.alpha, g.grid, j);
        if (!(row[0] > 0.0 && 1.0 / row[0] < cap * std::pow(static_cast<double>(j) * tau, g.alpha))) {
          record(report, "first-weight lower bound fails: " + describe(g, j));
        }
      }
    }
  }
  return report;
}

PropertyReport displacement_weight_properties() {
  PropertyReport report{"expansion weights", 0, {}};
  const Eigen::Index m = 4096;
  for (double beta : {1.1, 1.3, 1.5, 1.7, 1.9}) {
    ++report.checks;
    const Eigen::VectorXd g = gl_weights(beta, m + 1);
    std::ostringstream tag;
    tag << "beta=" << beta;

    if (std::abs(g[0] - 1.0) > 1e-15) record(report, "g0 != 1: " + tag.str());
    if (std::abs(g[1] + beta) > 1e-14 * beta) record(report, "g1 != -beta: " + tag.str());
    if (!(g[2] > 0.0 && g[2] <= 1.0)) record(report, "g2 out of (0,1]: " + tag.str());
    for (Eigen::Index k = 3; k <= m; ++k) {
      if (!(g[k] > 0.0 && g[k] < g[k - 1])) {
        record(report, "tail not positive decreasing at k=" + std::to_string(k) + ": " + tag.str());
        break;
      }
    }

    double partial = g[0];
    bool sums_ok = true;
    for (Eigen::Index k = 1; k <= m; ++k) {
      partial += g[k];
      if (!(partial < 0.0)) {
        record(report, "partial sum not negative at m=" + std::to_string(k) + ": " + tag.str());
        sums_ok = false;
        break;
      }
    }
    // The tail sum decays like m^-beta; unit prefactor leaves ample margin.
    if (sums_ok && !(std::abs(partial) < std::pow(static_cast<double>(m), -beta))) {
      record(report, "total sum does not vanish: " + tag.str());
    }
  }
  return report;
}

PropertyReport riesz_kernel_properties() {
  PropertyReport report{"stencil column", 0, {}};
  const Eigen::Index m_max = 4096;
  for (double beta : {1.1, 1.3, 1.5, 1.7, 1.9}) {
    ++report.checks;
    const Eigen::VectorXd r = riesz_kernel(beta, m_max + 1);
    std::ostringstream tag;
    tag << "beta=" << beta;

    if (!(r[0] > 0.0)) record(report, "center weight not positive: " + tag.str());
    for (Eigen::Index k = 1; k <= m_max; ++k) {
      if (!(r[k] < 0.0)) {
        record(report, "off-center weight not negative at k=" + std::to_string(k) + ": " + tag.str());
        break;
      }
    }

    Eigen::VectorXd prefix(m_max + 1);
    prefix[0] = r[0];
    for (Eigen::Index k = 1; k <= m_max; ++k) prefix[k] = prefix[k - 1] + r[k];

    // Sliding sums sum_{k=0..m} r_{|j-k|} = prefix[j] + prefix[m-j] - r[0].
    for (Eigen::Index m : {Eigen::Index{2}, Eigen::Index{4}, Eigen::Index{16}, Eigen::Index{128},
                           Eigen::Index{1024}, m_max}) {
      for (Eigen::Index j = 1; j < m; ++j) {
        if (!(prefix[j] + prefix[m - j] - r[0] > 0.0)) {
          record(report,
                 "window sum not positive at m=" + std::to_string(m) + " j=" + std::to_string(j) +
                     ": " + tag.str());
          break;
        }
      }
    }

    const double lower = riesz_sum_lower_constant(beta);
    if (!(lower > 0.0)) record(report, "lower constant not positive: " + tag.str());
    for (Eigen::Index m = 1; m <= m_max; ++m) {
      const double symmetric = 2.0 * prefix[m - 1] - r[0];
      if (!(symmetric > lower * std::pow(static_cast<double>(m), -beta))) {
        record(report, "symmetric sum bound fails at m=" + std::to_string(m) + ": " + tag.str());
        break;
      }
    }
  }
  return report;
}

PropertyReport quadratic_form_properties_1d(int fields, unsigned seed) {
  PropertyReport report{"stencil quadratic form", 0, {}};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < fields; ++s) {
    ++report.checks;
    const double beta = 1.02 + 0.96 * unit(rng);
    const Eigen::Index cells = 8 + static_cast<Eigen::Index>(unit(rng) * 192.0);
    const double h = 1.0 / static_cast<double>(cells);
    Eigen::VectorXd v(cells - 1);
    for (double& x : v) x = 2.0 * unit(rng) - 1.0;

    const double quad = std::pow(h, 1.0 - beta) * v.dot(riesz_apply(beta, v));
    const double mass = h * v.squaredNorm();
    const double lower = riesz_sum_lower_constant(beta) * mass;
    const double upper = 2.0 * riesz_kernel(beta, 1)[0] * std::pow(h, -beta) * mass;

    std::ostringstream tag;
    tag << "beta=" << beta << " cells=" << cells;
    if (!(quad > 0.0)) record(report, "form not positive: " + tag.str());
    if (!(quad >= lower * (1.0 - 1e-12))) record(report, "lower energy bound fails: " + tag.str());
    if (!(quad <= upper * (1.0 + 1e-12))) record(report, "upper energy bound fails: " + tag.str());
  }
  return report;
}

PropertyReport quadratic_form_properties_2d(int fields, unsigned seed) {
  PropertyReport report{"coefficient quadratic form", 0, {}};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < fields; ++s) {
    ++report.checks;
    const double beta = 1.05 + 0.9 * unit(rng);
    const Eigen::Index n = 4 + static_cast<Eigen::Index>(unit(rng) * 21.0);
    const BttbOperator op(fcd_table(beta, n), n);
    Eigen::VectorXd v(n * n);
    for (double& x : v) x = 2.0 * unit(rng) - 1.0;

    const double quad = v.dot(op.multiply(v));
    const double upper = std::pow(2.0, beta / 2.0) * std::pow(kPi, beta) * v.squaredNorm();

    std::ostringstream tag;
    tag << "beta=" << beta << " grid=" << n;
    if (!(quad > 0.0)) record(report, "form not positive: " + tag.str());
    if (!(quad <= upper * (1.0 + 1e-12))) record(report, "symbol upper bound fails: " + tag.str());
  }
  return report;
}

PropertyReport operator_equivalence_properties(unsigned seed) {
  PropertyReport report{"fast operators vs dense", 0, {}};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (Eigen::Index n = 1; n <= 16; ++n) {
    ++report.checks;
    Eigen::VectorXd t(n);
    for (double& x : t) x = unit(rng);
    const SymmetricToeplitz op(t);
    Eigen::MatrixXd dense(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) dense(i, j) = t[std::abs(i - j)];
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXd x(n);
      for (double& v : x) v = unit(rng);
      const double err = (op.multiply(x) - dense * x).cwiseAbs().maxCoeff();
      if (!(err <= 1e-12)) {
        record(report, "banded product mismatch at n=" + std::to_string(n));
        break;
      }
    }
  }

  for (Eigen::Index n = 1; n <= 4; ++n) {
    ++report.checks;
    Eigen::MatrixXd table(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) table(i, j) = table(j, i) = unit(rng);
    const BttbOperator op(table, n);
    Eigen::MatrixXd dense(n * n, n * n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index jp = 0; jp < n; ++jp)
          for (Eigen::Index kp = 0; kp < n; ++kp)
            dense(j * n + k, jp * n + kp) = table(std::abs(j - jp), std::abs(k - kp));
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXd x(n * n);
      for (double& v : x) v = unit(rng);
      const double err = (op.multiply(x) - dense * x).cwiseAbs().maxCoeff();
      if (!(err <= 1e-12)) {
        record(report, "block product mismatch at n=" + std::to_string(n));
        break;
      }
    }
  }
  return report;
}

std::vector<PropertyReport> run_property_suites(int row_samples, int field_samples, unsigned seed) {
  std::vector<PropertyReport> reports;
  reports.push_back(offset_row_properties(row_samples, seed));
  reports.push_back(endpoint_row_properties(row_samples, seed + 1));
  reports.push_back(displacement_weight_properties());
  reports.push_back(riesz_kernel_properties());
  reports.push_back(quadratic_form_properties_1d(field_samples, seed + 2));
  reports.push_back(quadratic_form_properties_2d(field_samples, seed + 3));
  reports.push_back(operator_equivalence_properties(seed + 4));
  return reports;
}

}  // namespace ultraslow
