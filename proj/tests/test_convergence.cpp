// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "ultraslow/convergence.hpp"
#include "ultraslow/reporting.hpp"

namespace {

bool within(double value, double target, double relative) {
  return std::abs(value - target) <= relative * std::abs(target);
}

}  // namespace

TEST_SUITE("convergence") {

TEST_CASE("interior restriction picks the shared nodes") {
  const Eigen::Index fine_cells = 8;
  const Eigen::Index coarse_cells = 4;
  const Eigen::Index fn = fine_cells - 1;
  Eigen::VectorXd fine(fn * fn);
  auto value = [](double x, double y) { return x + 10.0 * y; };
  for (Eigen::Index j = 0; j < fn; ++j)
    for (Eigen::Index k = 0; k < fn; ++k)
      fine[j * fn + k] = value(-1.0 + 0.25 * static_cast<double>(j + 1),
                               -1.0 + 0.25 * static_cast<double>(k + 1));
  const Eigen::VectorXd coarse = ultraslow::restrict_interior_2d(fine, fine_cells, coarse_cells);
  REQUIRE(coarse.size() == 9);
  for (Eigen::Index j = 0; j < 3; ++j)
    for (Eigen::Index k = 0; k < 3; ++k)
      CHECK(coarse[j * 3 + k] == doctest::Approx(value(-1.0 + 0.5 * static_cast<double>(j + 1),
                                                        -1.0 + 0.5 * static_cast<double>(k + 1)))
                                     .epsilon(1e-14));
  CHECK_THROWS_AS(ultraslow::restrict_interior_2d(fine, 8, 3), std::invalid_argument);
}

TEST_CASE("weighted distance") {
  Eigen::VectorXd a(3), b(3);
  a << 1.0, 2.0, 3.0;
  b << 1.0, 0.0, 3.0;
  CHECK(ultraslow::weighted_l2_distance(a, b, 0.25) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(ultraslow::weighted_l2_distance(a, Eigen::VectorXd::Zero(2), 1.0),
                  std::invalid_argument);
}

TEST_CASE("spatial ladder reproduces printed reference cells") {
  // Reference values 5.18e-5 and 1.30e-5 for the two coarsest meshes; a
  // moderate step count keeps the temporal error negligible at this scale.
  const auto study = ultraslow::spatial_study_1d(ultraslow::Scheme::L2Sigma, 0.3, 1.3, {8, 16}, 240);
  REQUIRE(study.rows.size() == 2);
  CHECK(study.rows[0].resolution == doctest::Approx(0.125));
  CHECK(std::isnan(study.rows[0].order));
  CHECK(within(study.rows[0].error, 5.18e-5, 0.1));
  CHECK(within(study.rows[1].error, 1.30e-5, 0.1));
  CHECK(study.rows[1].order > 1.8);
  CHECK(study.rows[1].order < 2.2);
}

TEST_CASE("temporal ladder drops at second order") {
  // The fixed mesh must be fine enough that the spatial error floor stays
  // well below the coarsest temporal errors probed here.
  const auto study =
      ultraslow::temporal_study_1d(ultraslow::Scheme::L2Sigma, 0.6, 1.5, 256, {4, 8, 16});
  REQUIRE(study.rows.size() == 3);
  CHECK(study.mode == "temporal-1d");
  CHECK(study.rows[1].error < study.rows[0].error);
  CHECK(study.rows[2].error < study.rows[1].error);
  CHECK(study.rows[2].order > 1.6);
  CHECK(study.rows[2].order < 2.6);
}

TEST_CASE("paired spatial ladder reproduces a printed reference difference") {
  const auto study = ultraslow::spatial_study_2d(ultraslow::Scheme::L2Sigma, 0.3, 1.3, {8, 16}, 128);
  REQUIRE(study.rows.size() == 2);
  CHECK(std::isnan(study.rows[0].error));
  CHECK(study.rows[1].resolution == doctest::Approx(0.125));
  CHECK(within(study.rows[1].error, 4.49e-3, 0.2));
}

TEST_CASE("csv rendering uses empty fields for missing values") {
  ultraslow::ConvergenceStudy study;
  study.mode = "spatial";
  study.rows.push_back({0.25, std::nan(""), std::nan("")});
  study.rows.push_back({0.125, 1.5e-3, std::nan("")});
  study.rows.push_back({0.0625, 3.75e-4, 2.0});
  const std::string csv = ultraslow::to_csv(study);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "mesh,error,order");
  std::getline(lines, line);
  CHECK(line == "0.25,,");
  std::getline(lines, line);
  CHECK(line.substr(0, 6) == "0.125,");
  CHECK(line.back() == ',');
  std::getline(lines, line);
  CHECK(line.find(",2") != std::string::npos);
}

TEST_CASE("markdown rendering marks missing values") {
  ultraslow::ConvergenceStudy study;
  study.mode = "temporal";
  study.rows.push_back({0.25, std::nan(""), std::nan("")});
  study.rows.push_back({0.125, 1.5e-3, 2.0});
  const std::string md = ultraslow::to_markdown(study);
  CHECK(md.find('|') != std::string::npos);
  CHECK(md.find('-') != std::string::npos);
  CHECK(md.find("0.0015") != std::string::npos);
}

}  // TEST_SUITE
