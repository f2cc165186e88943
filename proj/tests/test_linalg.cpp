// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "ultraslow/errors.hpp"
#include "ultraslow/linalg.hpp"

namespace {

Eigen::VectorXd random_vector(std::mt19937& rng, Eigen::Index n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

// Diagonally dominant first column, so the Toeplitz matrix is SPD.
Eigen::VectorXd random_spd_toeplitz_column(std::mt19937& rng, Eigen::Index n) {
  Eigen::VectorXd t = random_vector(rng, n);
  t[0] = 2.0 * t.cwiseAbs().sum() + 1.0;
  return t;
}

Eigen::MatrixXd dense_toeplitz(const Eigen::VectorXd& t) {
  const Eigen::Index n = t.size();
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = t[std::abs(i - j)];
  return a;
}

Eigen::MatrixXd dense_bttb(const Eigen::MatrixXd& table, Eigen::Index n) {
  Eigen::MatrixXd a(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index jp = 0; jp < n; ++jp)
        for (Eigen::Index kp = 0; kp < n; ++kp)
          a(j * n + k, jp * n + kp) = table(std::abs(j - jp), std::abs(k - kp));
  return a;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("dense_solve recovers a manufactured solution") {
  std::mt19937 rng(1u);
  const Eigen::Index n = 40;
  Eigen::MatrixXd a = Eigen::MatrixXd::NullaryExpr(
      n, n, [&rng]() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng); });
  a += n * Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd x_true = random_vector(rng, n);
  Eigen::VectorXd x = ultraslow::dense_solve(a, a * x_true);
  CHECK((x - x_true).norm() < 1e-10 * x_true.norm());
}

TEST_CASE("dense_solve rejects bad inputs") {
  CHECK_THROWS_AS(ultraslow::dense_solve(Eigen::MatrixXd::Zero(3, 3), Eigen::VectorXd::Ones(3)),
                  ultraslow::SolverError);
  CHECK_THROWS_AS(ultraslow::dense_solve(Eigen::MatrixXd::Identity(3, 3), Eigen::VectorXd::Ones(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ultraslow::dense_solve(Eigen::MatrixXd::Identity(8, 8), Eigen::VectorXd::Ones(8), 4),
      std::invalid_argument);
}

TEST_CASE("levinson_solve matches the dense solver on SPD Toeplitz systems") {
  std::mt19937 rng(2u);
  for (Eigen::Index n : {2, 5, 16, 64}) {
    Eigen::VectorXd t = random_spd_toeplitz_column(rng, n);
    Eigen::VectorXd b = random_vector(rng, n);
    Eigen::VectorXd x = ultraslow::levinson_solve(t, b);
    Eigen::VectorXd ref = ultraslow::dense_solve(dense_toeplitz(t), b);
    CHECK((x - ref).norm() < 1e-10 * ref.norm());
  }
}

TEST_CASE("toeplitz products agree with the dense matrix") {
  std::mt19937 rng(3u);
  for (Eigen::Index n : {1, 2, 3, 7, 16}) {
    Eigen::VectorXd t = random_vector(rng, n);
    ultraslow::SymmetricToeplitz op(t);
    Eigen::MatrixXd dense = dense_toeplitz(t);
    for (int trial = 0; trial < 4; ++trial) {
      Eigen::VectorXd x = random_vector(rng, n);
      Eigen::VectorXd fast = op.multiply(x);
      Eigen::VectorXd slow = dense * x;
      CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-12 * (1.0 + slow.cwiseAbs().maxCoeff()));
      Eigen::VectorXd shifted = op.multiply_shifted(0.7, -0.3, x);
      CHECK((shifted - (0.7 * x - 0.3 * slow)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("shifted toeplitz solves satisfy their system") {
  std::mt19937 rng(4u);
  for (Eigen::Index n : {3, 17, 128}) {
    Eigen::VectorXd t = random_spd_toeplitz_column(rng, n);
    ultraslow::SymmetricToeplitz op(t);
    const double shift = 2.5;
    const double scale = 0.8;
    Eigen::VectorXd b = random_vector(rng, n);
    Eigen::VectorXd x = op.solve_shifted(shift, scale, b);
    Eigen::VectorXd residual = op.multiply_shifted(shift, scale, x) - b;
    CHECK(residual.norm() <= 1e-10 * b.norm());
  }
}

TEST_CASE("toeplitz spectral bound dominates the largest eigenvalue") {
  std::mt19937 rng(5u);
  const Eigen::Index n = 24;
  Eigen::VectorXd t = random_spd_toeplitz_column(rng, n);
  ultraslow::SymmetricToeplitz op(t);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense_toeplitz(t));
  CHECK(op.spectral_bound() >= eig.eigenvalues().maxCoeff() - 1e-12);
}

TEST_CASE("cg_solve matches levinson on an SPD Toeplitz system") {
  std::mt19937 rng(6u);
  const Eigen::Index n = 50;
  Eigen::VectorXd t = random_spd_toeplitz_column(rng, n);
  ultraslow::SymmetricToeplitz op(t);
  Eigen::VectorXd b = random_vector(rng, n);
  Eigen::VectorXd x;
  auto apply = [&op](const Eigen::VectorXd& v) { return op.multiply(v); };
  ultraslow::CgResult info = ultraslow::cg_solve(apply, b, x, {});
  CHECK(info.converged);
  Eigen::VectorXd ref = ultraslow::levinson_solve(t, b);
  CHECK((x - ref).norm() < 1e-9 * ref.norm());
}

TEST_CASE("cg_solve floors the tolerance by the condition bound") {
  std::mt19937 rng(7u);
  const Eigen::Index n = 20;
  Eigen::VectorXd t = random_spd_toeplitz_column(rng, n);
  ultraslow::SymmetricToeplitz op(t);
  Eigen::VectorXd b = random_vector(rng, n);
  Eigen::VectorXd x;
  ultraslow::CgOptions opts;
  opts.tolerance = 1e-15;
  opts.condition_bound = 1e12;
  auto apply = [&op](const Eigen::VectorXd& v) { return op.multiply(v); };
  ultraslow::CgResult info = ultraslow::cg_solve(apply, b, x, opts);
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * opts.condition_bound;
  CHECK(info.tolerance_used == doctest::Approx(floor));
  CHECK(info.converged);
}

TEST_CASE("cg_solve reuses the incoming guess") {
  std::mt19937 rng(8u);
  const Eigen::Index n = 30;
  Eigen::VectorXd t = random_spd_toeplitz_column(rng, n);
  ultraslow::SymmetricToeplitz op(t);
  Eigen::VectorXd b = random_vector(rng, n);
  auto apply = [&op](const Eigen::VectorXd& v) { return op.multiply(v); };
  Eigen::VectorXd exact;
  ultraslow::cg_solve(apply, b, exact, {});
  Eigen::VectorXd warm = exact;
  ultraslow::CgResult info = ultraslow::cg_solve(apply, b, warm, {});
  CHECK(info.iterations <= 1);
}

TEST_CASE("cg_solve rejects indefinite operators") {
  Eigen::VectorXd b = Eigen::VectorXd::Ones(4);
  Eigen::VectorXd x;
  auto apply = [](const Eigen::VectorXd& v) { return Eigen::VectorXd(-v); };
  CHECK_THROWS_AS(ultraslow::cg_solve(apply, b, x, {}), ultraslow::SolverError);
}

TEST_CASE("bttb products agree with the dense matrix") {
  std::mt19937 rng(9u);
  for (Eigen::Index n : {1, 2, 4, 5}) {
    Eigen::MatrixXd table(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        table(i, j) = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    // The operator assumes a symmetric offset table.
    table = ((table + table.transpose()) / 2.0).eval();
    ultraslow::BttbOperator op(table, n);
    Eigen::MatrixXd dense = dense_bttb(table, n);
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXd x = random_vector(rng, n * n);
      Eigen::VectorXd fast = op.multiply(x);
      Eigen::VectorXd slow = dense * x;
      CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-12 * (1.0 + slow.cwiseAbs().maxCoeff()));
      Eigen::VectorXd shifted = op.multiply_shifted(1.3, 0.4, x);
      CHECK((shifted - (1.3 * x + 0.4 * slow)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("bttb spectral bound dominates the largest eigenvalue") {
  std::mt19937 rng(10u);
  const Eigen::Index n = 5;
  Eigen::MatrixXd table(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      table(i, j) = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  table = ((table + table.transpose()) / 2.0).eval();
  table(0, 0) += 8.0;
  ultraslow::BttbOperator op(table, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense_bttb(table, n));
  CHECK(op.spectral_bound() >= eig.eigenvalues().maxCoeff() - 1e-12);
}

}  // TEST_SUITE
