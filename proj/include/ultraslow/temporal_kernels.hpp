// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

namespace ultraslow {

/// Uniform time mesh t_i = origin + i * step on [origin, horizon] with
/// origin > 0, as required by logarithmic-kernel fractional derivatives.
/// Fractional indices are meaningful and give intermediate points.
template <typename Scalar = double>
struct TemporalGrid {
  Scalar origin;
  Scalar horizon;
  Eigen::Index steps;

  TemporalGrid(Scalar origin_, Scalar horizon_, Eigen::Index steps_)
      : origin(origin_), horizon(horizon_), steps(steps_) {
    if (!(origin > Scalar(0))) throw std::invalid_argument("TemporalGrid: origin must be positive");
    if (!(horizon > origin)) throw std::invalid_argument("TemporalGrid: horizon must exceed origin");
    if (steps < 1) throw std::invalid_argument("TemporalGrid: need at least one step");
  }

  Scalar step() const { return (horizon - origin) / Scalar(steps); }

  Scalar node(Scalar index) const { return origin + index * step(); }

  /// log(t_i / t_j), evaluated stably for nearby nodes.
  Scalar log_ratio(Scalar i, Scalar j) const {
    using std::log1p;
    return log1p((i - j) * step() / node(j));
  }
};

namespace detail {

template <typename Scalar>
void check_order(Scalar alpha) {
  if (!(alpha > Scalar(0)) || !(alpha < Scalar(1)))
    throw std::invalid_argument("temporal kernels: order must lie in (0,1)");
}

}  // namespace detail

/// Weights of the second-order discretization of the Caputo-Hadamard
/// derivative of order \p alpha at the offset point t_{k+sigma},
/// sigma = 1 - alpha/2.  The returned row c has k+1 entries; entry i
/// multiplies the increment U^{i+1} - U^i of the discrete history.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> l2sigma_weights(Scalar alpha,
                                                         const TemporalGrid<Scalar>& grid,
                                                         Eigen::Index k) {
  using std::pow;
  using std::tgamma;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  detail::check_order(alpha);
  if (k < 0 || k >= grid.steps)
    throw std::invalid_argument("l2sigma_weights: row index out of range");

  const Scalar sigma = Scalar(1) - alpha / Scalar(2);
  const Scalar eval = Scalar(k) + sigma;
  const Scalar gamma2 = tgamma(Scalar(2) - alpha);
  const Scalar oma = Scalar(1) - alpha;

  Vector rho(k + 1);
  for (Eigen::Index i = 0; i <= k; ++i) rho[i] = grid.log_ratio(Scalar(i + 1), Scalar(i));

  if (k == 0) {
    Vector c(1);
    c[0] = pow(grid.log_ratio(eval, Scalar(0)), oma) / (gamma2 * rho[0]);
    return c;
  }

  Vector lambda(k + 1);
  for (Eigen::Index i = 0; i <= k; ++i) lambda[i] = grid.log_ratio(eval, Scalar(i));

  Vector a(k), b(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Scalar lo = lambda[i];
    const Scalar hi = lambda[i + 1];
    a[i] = pow(lo, oma) - pow(hi, oma);
    const Scalar window = grid.log_ratio(Scalar(i + 2), Scalar(i));
    b[i] = ((Scalar(2) / (Scalar(2) - alpha)) * (pow(lo, Scalar(2) - alpha) - pow(hi, Scalar(2) - alpha)) -
            rho[i] * (pow(hi, oma) + pow(lo, oma))) /
           window;
  }

  Vector c(k + 1);
  c[0] = a[0] - b[0];
  for (Eigen::Index i = 1; i < k; ++i) c[i] = a[i] + b[i - 1] - b[i];
  c[k] = b[k - 1] + pow(lambda[k], oma);
  for (Eigen::Index i = 0; i <= k; ++i) c[i] /= gamma2 * rho[i];
  return c;
}

/// Weights of the higher-order endpoint discretization of the
/// Caputo-Hadamard derivative of order \p alpha at t_k.  The returned row
/// has k entries; entry i multiplies the increment U^{i+1} - U^i.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> l12_weights(Scalar alpha,
                                                     const TemporalGrid<Scalar>& grid,
                                                     Eigen::Index k) {
  using std::pow;
  using std::tgamma;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  detail::check_order(alpha);
  if (k < 1 || k > grid.steps)
    throw std::invalid_argument("l12_weights: row index out of range");

  const Scalar gamma2 = tgamma(Scalar(2) - alpha);
  const Scalar oma = Scalar(1) - alpha;

  Vector rho(k);
  for (Eigen::Index i = 0; i < k; ++i) rho[i] = grid.log_ratio(Scalar(i + 1), Scalar(i));

  if (k == 1) {
    Vector c(1);
    c[0] = pow(rho[0], -alpha) / gamma2;
    return c;
  }

  Vector mu(k + 1);
  for (Eigen::Index i = 0; i < k; ++i) mu[i] = grid.log_ratio(Scalar(k), Scalar(i));
  mu[k] = Scalar(0);

  Vector a(k);
  for (Eigen::Index i = 0; i < k; ++i) a[i] = pow(mu[i], oma) - pow(mu[i + 1], oma);

  // b[i] pairs with the interval ending at t_{i+2} (three-point window).
  Vector b(k - 1);
  for (Eigen::Index i = 0; i + 1 < k; ++i) {
    const Scalar window = grid.log_ratio(Scalar(i + 2), Scalar(i));
    b[i] = (rho[i + 1] * (pow(mu[i + 2], oma) + pow(mu[i + 1], oma)) +
            (Scalar(2) / (Scalar(2) - alpha)) * (pow(mu[i + 2], Scalar(2) - alpha) - pow(mu[i + 1], Scalar(2) - alpha))) /
           window;
  }

  Vector c(k);
  c[0] = a[0] + b[0];
  for (Eigen::Index i = 1; i + 1 < k; ++i) c[i] = a[i] - b[i - 1] + b[i];
  c[k - 1] = a[k - 1] - b[k - 2];
  for (Eigen::Index i = 0; i < k; ++i) c[i] /= gamma2 * rho[i];
  return c;
}

/// Applies a weight row to sampled history values phi(t_0), ..., phi(t_m):
/// returns sum_i c[i] * (phi[i+1] - phi[i]).
template <typename Scalar>
Scalar apply_weights(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& weights,
                     const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& samples) {
  if (samples.size() != weights.size() + 1)
    throw std::invalid_argument("apply_weights: need one more sample than weights");
  return weights.dot(samples.tail(weights.size()) - samples.head(weights.size()));
}

/// Caputo-Hadamard derivative of order \p alpha of the logarithmic monomial
/// phi(t) = log(t/origin)^p, in closed form.
template <typename Scalar>
Scalar ch_log_power_derivative(Scalar p, Scalar alpha, Scalar origin, Scalar t) {
  using std::log;
  using std::pow;
  using std::tgamma;
  detail::check_order(alpha);
  if (!(p > Scalar(0))) throw std::invalid_argument("ch_log_power_derivative: exponent must be positive");
  const Scalar w = log(t / origin);
  return tgamma(p + Scalar(1)) / tgamma(p + Scalar(1) - alpha) * pow(w, p - alpha);
}

}  // namespace ultraslow
